#include "scatent/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "scatent/graph_json.hpp"

namespace scatent {

std::filesystem::path default_catalog_dir() { return SCATENT_CATALOG_DIR; }

MetricGraph two_vertex_ring(int n) {
  if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "two-vertex ring needs n >= 2");
  MetricGraph g;
  g.name = "fig1a-n" + std::to_string(n);
  g.vertices = {{1, BoundaryCondition::Neumann}, {2, BoundaryCondition::Neumann}};
  g.edges = {{1, 2, 1}, {1, 2, n - 1}};
  g.leads = {1, 2};
  return g;
}

MetricGraph fishbone(int copies, BoundaryCondition dead_end_bc) {
  FamilySpec spec;
  spec.family = Family::Fishbone;
  spec.n = copies;
  spec.dead_end_bc = dead_end_bc;
  return expand_family(spec);
}

MetricGraph chord_ring(std::string_view units, std::string name) {
  int positions = 0;
  for (char u : units) {
    if (u == 'I') {
      positions += 1;
    } else if (u == 'Q' || u == 'X') {
      positions += 2;
    } else {
      throw Error(ErrorKind::ParameterOutOfRange, std::string("unknown chord unit '") + u + "'");
    }
  }
  const int v = 2 * positions + 2;
  const int exit = positions + 2;
  // Position p (1-based) pairs vertex 1 + p on one side with v + 1 - p on the other.
  auto side_a = [](int p) { return 1 + p; };
  auto side_b = [v](int p) { return v + 1 - p; };

  MetricGraph g;
  g.name = std::move(name);
  for (int id = 1; id <= v; ++id) g.vertices.push_back({id, BoundaryCondition::Neumann});
  std::vector<int> ring{1};
  for (int p = 1; p <= positions; ++p) ring.push_back(side_a(p));
  ring.push_back(exit);
  for (int p = positions; p >= 1; --p) ring.push_back(side_b(p));
  for (std::size_t i = 0; i < ring.size(); ++i) g.edges.push_back({ring[i], ring[(i + 1) % ring.size()], 1});

  int p = 1;
  for (char u : units) {
    if (u == 'I') {
      g.edges.push_back({side_a(p), side_b(p), 1});
      p += 1;
    } else if (u == 'Q') {
      g.edges.push_back({side_a(p), side_b(p), 1});
      g.edges.push_back({side_a(p + 1), side_b(p + 1), 1});
      p += 2;
    } else {
      g.edges.push_back({side_a(p), side_b(p + 1), 1});
      g.edges.push_back({side_a(p + 1), side_b(p), 1});
      p += 2;
    }
  }
  g.leads = {1, exit};
  return g;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out{
        {"Q", 6, 8, 2, 3},    {"X", 6, 8, 2, 3},    {"IQ", 8, 11, 2, 3},  {"IX", 8, 11, 2, 3},
        {"QQ", 10, 14, 2, 3}, {"XQ", 10, 14, 2, 3}, {"IXI", 10, 14, 2, 3}, {"XX", 10, 14, 2, 3},
    };
    for (int n = 2; n <= 9; ++n) out.push_back({"fig1a-n" + std::to_string(n), 2, 2, 2, 3});
    return out;
  }();
  return entries;
}

namespace {

MetricGraph load_fishbone(std::string_view rest, std::string_view id) {
  BoundaryCondition bc = BoundaryCondition::Neumann;
  constexpr std::string_view kDirichlet = "-dirichlet";
  if (rest.ends_with(kDirichlet)) {
    bc = BoundaryCondition::Dirichlet;
    rest.remove_suffix(kDirichlet.size());
  }
  int copies = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), copies);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw Error(ErrorKind::UnknownCatalogId, std::string(id));
  }
  return fishbone(copies, bc);
}

}  // namespace

MetricGraph load_catalog_graph(std::string_view id, const std::filesystem::path& dir) {
  constexpr std::string_view kFishbone = "fishbone-";
  if (id.starts_with(kFishbone)) return load_fishbone(id.substr(kFishbone.size()), id);

  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.id == id; });
  if (it == entries.end()) throw Error(ErrorKind::UnknownCatalogId, std::string(id));

  MetricGraph g = read_graph_file(dir / (it->id + ".json"));
  std::string problems;
  if (g.num_vertices() != it->vertices) problems += " vertices=" + std::to_string(g.num_vertices());
  if (g.num_edges() != it->edges) problems += " edges=" + std::to_string(g.num_edges());
  if (g.num_channels() != it->leads) problems += " leads=" + std::to_string(g.num_channels());
  if (it->uniform_degree > 0) {
    const auto deg = degrees(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (deg[v] != it->uniform_degree) {
        problems += " degree(" + std::to_string(v + 1) + ")=" + std::to_string(deg[v]);
      }
    }
  }
  if (!problems.empty()) {
    throw Error(ErrorKind::StructureViolation, it->id + " does not match its catalog counts:" + problems);
  }
  return g;
}

}  // namespace scatent
