#include "scatent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "scatent/catalog.hpp"
#include "scatent/entropy.hpp"
#include "scatent/graph_json.hpp"
#include "scatent/reproduce.hpp"

namespace scatent {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad " + std::string(what) + " '" + s + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Family family_from_name(std::string_view name) {
  if (name == "single") return Family::SingleVertex;
  if (name == "star") return Family::Star;
  if (name == "cycle") return Family::Cycle;
  if (name == "wheel") return Family::Wheel;
  if (name == "complete") return Family::Complete;
  if (name == "fishbone") return Family::Fishbone;
  throw UsageError("unknown family '" + std::string(name) + "'");
}

MetricGraph expand(const FamilyRange& range, int n, const LeadSelection& leads) {
  FamilySpec spec;
  spec.family = range.family;
  spec.n = n;
  spec.dead_end_bc = range.dead_end_bc;
  if (leads.kind == LeadSelection::Kind::All) spec.lead_mode = LeadMode::LeadPerVertex;
  MetricGraph g = expand_family(spec);
  if (leads.kind == LeadSelection::Kind::Count || leads.kind == LeadSelection::Kind::List) {
    g = with_leads(std::move(g), leads);
  }
  return g;
}

MetricGraph single_graph(const RunConfig& config) {
  if (!config.graph_path.empty()) return with_leads(resolve_graph_source(config.graph_path), config.leads);
  const FamilyRange range = parse_family(config.family_spec);
  if (range.first != range.last) throw UsageError("this command takes a single family member, not a range");
  return expand(range, range.first, config.leads);
}

void check_config(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.samples < 2) throw UsageError("--samples must be at least 2");
  if (!(c.k_min > 0.0) || !(c.k_min < c.k_max) || !std::isfinite(c.k_max)) {
    throw UsageError("--k-range must satisfy 0 < A < B");
  }
  const bool needs_graph = c.command != Command::Reproduce;
  const bool has_graph = !c.graph_path.empty();
  const bool has_family = !c.family_spec.empty();
  if (needs_graph && has_graph == has_family) throw UsageError("give exactly one of --graph or --family");
  if (c.command == Command::Family && !has_family) throw UsageError("family needs --family");
  if (c.command == Command::Reproduce && c.target.empty()) throw UsageError("reproduce needs a target");
}

int cmd_entropy(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ScatteringEngine engine(single_graph(c));
  QuadratureOptions opts;
  opts.tol = c.tol;
  const EntropyProfile p = average_entropy(engine, c.entrance, opts);
  out << "graph," << engine.graph().name << '\n'
      << "entrance," << c.entrance << '\n'
      << "average_entropy," << fmt(p.average) << '\n'
      << "estimated_error," << fmt(p.estimated_error) << '\n'
      << "panels," << p.panels_used << '\n'
      << "evaluations," << p.evaluations << '\n'
      << "perturbed_nodes," << p.perturbed_nodes << '\n'
      << "converged," << (p.converged ? "true" : "false") << '\n';
  if (!p.converged) {
    err << "warning: quadrature reached the panel cap; the average is the best estimate\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream&) {
  const ScatteringEngine engine(single_graph(c));
  const auto rows = transmission_sweep(engine, c.entrance, c.k_min, c.k_max, c.samples);
  write_sweep_csv(out, rows, engine.num_channels());
  return kExitOk;
}

int cmd_family(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const FamilyRange range = parse_family(c.family_spec);
  QuadratureOptions opts;
  opts.tol = c.tol;
  int status = kExitOk;
  out << "n,entropy\n";
  for (int n = range.first; n <= range.last; ++n) {
    const ScatteringEngine engine(expand(range, n, c.leads));
    const EntropyProfile p = average_entropy(engine, c.entrance, opts);
    out << n << ',' << fmt(p.average) << '\n';
    if (!p.converged) {
      err << "warning: " << engine.graph().name << " reached the panel cap\n";
      status = kExitFailure;
    }
  }
  return status;
}

int cmd_reproduce(const RunConfig& c, std::ostream& out, std::ostream& err, std::ostream* figure) {
  std::vector<std::string> ids;
  if (c.target == "all") {
    for (const auto& t : reproduction_targets()) ids.push_back(t.id);
  } else {
    find_target(c.target);
    ids.push_back(c.target);
  }
  QuadratureOptions opts;
  opts.tol = c.tol;
  std::vector<ReportRow> rows;
  for (const auto& id : ids) {
    const ReproductionReport report = reproduce(id, opts);
    rows.insert(rows.end(), report.rows.begin(), report.rows.end());
    if (figure != nullptr && ids.size() == 1) write_figure_csv(*figure, report.figure);
  }
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) { return a.label < b.label; });
  write_report_csv(out, rows);
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; });
  if (failed > 0) {
    err << failed << " of " << rows.size() << " reproduction checks failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  constexpr int kSpotChecks = 16;
  constexpr double kTolerance = 1e-10;
  const ScatteringEngine engine(single_graph(c));
  const MetricGraph& g = engine.graph();
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> dist(1e-3, 2.0 * std::numbers::pi);
  double unitarity = 0.0;
  double reciprocity = 0.0;
  for (int j = 0; j < kSpotChecks; ++j) {
    const ScatteringMatrix sm = engine.scattering_matrix(dist(rng));
    unitarity = std::max(unitarity, sm.unitarity_error);
    reciprocity = std::max(reciprocity, sm.reciprocity_error);
  }
  const bool ok = unitarity <= kTolerance && reciprocity <= kTolerance;
  out << "graph," << g.name << '\n'
      << "vertices," << g.num_vertices() << '\n'
      << "edges," << g.num_edges() << '\n'
      << "channels," << g.num_channels() << '\n'
      << "bonds," << engine.bonds().size() << '\n'
      << "solver," << (engine.uses_band_solver() ? "banded" : "dense") << '\n'
      << "seed," << c.seed << '\n'
      << "max_unitarity_error," << fmt(unitarity) << '\n'
      << "max_reciprocity_error," << fmt(reciprocity) << '\n'
      << "status," << (ok ? "ok" : "failed") << '\n';
  if (!ok) err << "unitarity or reciprocity exceeds " << kTolerance << '\n';
  return ok ? kExitOk : kExitFailure;
}

std::string figure_path(const std::string& report_path) {
  std::filesystem::path p(report_path);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + "-figure.csv")).string();
}

}  // namespace

LeadSelection parse_leads(std::string_view text) {
  LeadSelection sel;
  if (text.empty()) throw UsageError("empty --leads");
  if (text == "all") {
    sel.kind = LeadSelection::Kind::All;
  } else if (text.find(',') != std::string_view::npos) {
    sel.kind = LeadSelection::Kind::List;
    for (auto part : split(text, ',')) sel.list.push_back(parse_int(part, "lead vertex"));
  } else {
    sel.count = parse_int(text, "lead count");
    if (sel.count < 1) throw UsageError("--leads needs at least one lead");
    sel.kind = LeadSelection::Kind::Count;
  }
  return sel;
}

FamilyRange parse_family(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("family spec must be name:N[..M][:dirichlet]");
  FamilyRange range;
  range.family = family_from_name(parts[0]);
  const std::string_view sizes = parts[1];
  const std::size_t dots = sizes.find("..");
  if (dots == std::string_view::npos) {
    range.first = range.last = parse_int(sizes, "family size");
  } else {
    range.first = parse_int(sizes.substr(0, dots), "family size");
    range.last = parse_int(sizes.substr(dots + 2), "family size");
  }
  if (range.first > range.last) throw UsageError("empty family range");
  if (range.first < min_family_size(range.family)) {
    throw UsageError(std::string(to_string(range.family)) + " needs size >= " +
                     std::to_string(min_family_size(range.family)));
  }
  if (parts.size() == 3) {
    if (parts[2] == "dirichlet") {
      range.dead_end_bc = BoundaryCondition::Dirichlet;
    } else if (parts[2] != "neumann") {
      throw UsageError("unknown boundary condition '" + std::string(parts[2]) + "'");
    }
  }
  return range;
}

MetricGraph resolve_graph_source(const std::string& source) {
  const std::filesystem::path path(source);
  if (std::filesystem::exists(path)) return read_graph_file(path);
  const std::filesystem::path in_catalog = default_catalog_dir() / path;
  if (std::filesystem::exists(in_catalog)) return read_graph_file(in_catalog);
  return load_catalog_graph(source);
}

MetricGraph with_leads(MetricGraph graph, const LeadSelection& leads) {
  switch (leads.kind) {
    case LeadSelection::Kind::Default: return graph;
    case LeadSelection::Kind::All:
      graph.leads.clear();
      for (const Vertex& v : graph.vertices) graph.leads.push_back(v.id);
      graph.name += "-leads-all";
      break;
    case LeadSelection::Kind::Count:
      if (leads.count > graph.num_vertices()) {
        throw UsageError("--leads " + std::to_string(leads.count) + " exceeds the vertex count");
      }
      {
        std::vector<VertexId> first(leads.count);
        std::iota(first.begin(), first.end(), 1);
        if (graph.leads == first) return graph;
        graph.leads = std::move(first);
      }
      graph.name += "-leads-" + std::to_string(leads.count);
      break;
    case LeadSelection::Kind::List:
      graph.leads = leads.list;
      graph.name += "-leads-custom";
      break;
  }
  // Degrees change with the leads, so dead-end marks are recomputed.
  const auto deg = degrees(graph);
  for (auto& v : graph.vertices) {
    if (v.bc == BoundaryCondition::Dirichlet && deg[v.id - 1] != 1) v.bc = BoundaryCondition::Neumann;
  }
  validate(graph);
  return graph;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    std::ofstream file;
    std::ofstream figure_file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw UsageError("cannot open --out " + config.output);
      sink = &file;
    }
    switch (config.command) {
      case Command::Entropy: return cmd_entropy(config, *sink, err);
      case Command::Sweep: return cmd_sweep(config, *sink, err);
      case Command::Family: return cmd_family(config, *sink, err);
      case Command::Validate: return cmd_validate(config, *sink, err);
      case Command::Reproduce: {
        std::ostream* figure = nullptr;
        if (!config.output.empty() && config.target != "all") {
          figure_file.open(figure_path(config.output));
          if (!figure_file) throw UsageError("cannot open figure output next to " + config.output);
          figure = &figure_file;
        }
        return cmd_reproduce(config, *sink, err, figure);
      }
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UnknownCatalogId:
      case ErrorKind::StructureViolation:
      case ErrorKind::UnknownChannel:
      case ErrorKind::ParameterOutOfRange:
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
      default:
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering entropy of quantum graphs", "scatent"};
  app.require_subcommand(1);

  RunConfig config;
  std::string leads_text;
  std::string k_range_text;

  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "graph JSON file or catalog id");
    sub->add_option("--family", config.family_spec, "family spec, e.g. star:4 or cycle:3..30");
    sub->add_option("--leads", leads_text, "N | all | comma list of vertex ids");
    sub->add_option("--entrance", config.entrance, "entrance channel (1-based)");
    sub->add_option("--out", config.output, "output file (default: standard output)");
  };

  auto* entropy = app.add_subcommand("entropy", "average scattering entropy over one period");
  add_graph_options(entropy);
  entropy->add_option("--tol", config.tol, "quadrature tolerance");

  auto* sweep = app.add_subcommand("sweep", "transmission probabilities on a uniform k grid");
  add_graph_options(sweep);
  sweep->add_option("--samples", config.samples, "number of grid points");
  sweep->add_option("--k-range", k_range_text, "A:B, both positive");

  auto* fam = app.add_subcommand("family", "average entropy over a family range, CSV n,entropy");
  add_graph_options(fam);
  fam->add_option("--tol", config.tol, "quadrature tolerance");

  auto* repro = app.add_subcommand("reproduce", "regenerate a figure or table and check it");
  repro->add_option("target", config.target, "target id or 'all'")->required();
  repro->add_option("--tol", config.tol, "quadrature tolerance");
  repro->add_option("--out", config.output, "report file; the figure CSV goes next to it");

  auto* val = app.add_subcommand("validate", "structural checks and seeded unitarity spot checks");
  add_graph_options(val);
  val->add_option("--seed", config.seed, "seed for the sampled wavenumbers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (entropy->parsed()) config.command = Command::Entropy;
  if (sweep->parsed()) config.command = Command::Sweep;
  if (fam->parsed()) config.command = Command::Family;
  if (repro->parsed()) config.command = Command::Reproduce;
  if (val->parsed()) config.command = Command::Validate;

  try {
    if (!leads_text.empty()) config.leads = parse_leads(leads_text);
    if (!k_range_text.empty()) {
      const auto parts = split(k_range_text, ':');
      if (parts.size() != 2) throw UsageError("--k-range must be A:B");
      config.k_min = parse_double(parts[0], "k_min");
      config.k_max = parse_double(parts[1], "k_max");
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace scatent
