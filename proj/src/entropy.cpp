#include "scatent/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <exception>

#include "scatent/quadrature.hpp"

namespace scatent {

double shannon_entropy(std::span<const double> probabilities) {
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) {
      throw Error(ErrorKind::InvalidDistribution, "negative probability " + std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 1e-300) h -= p * std::log2(p);
  }
  return h;
}

double shannon_entropy(const ChannelDistribution& dist) {
  return shannon_entropy(dist.probabilities);
}

double entropy_at(const ScatteringEngine& engine, double k, int entrance) {
  return shannon_entropy(engine.column(k, entrance).probabilities);
}

double entropy_at(const MetricGraph& graph, double k, int entrance) {
  return entropy_at(ScatteringEngine(graph), k, entrance);
}

void entropy_nodes_parallel(const ScatteringEngine& engine, int entrance, std::span<const double> ks,
                            std::span<double> out, int& perturbed) {
  const long n = static_cast<long>(ks.size());
  int shifted = 0;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : shifted)
  for (long j = 0; j < n; ++j) {
    try {
      const ChannelColumn col = engine.column(ks[j], entrance);
      out[j] = shannon_entropy(col.probabilities);
      shifted += col.diagnostics.perturbed;
    } catch (...) {
#pragma omp critical(scatent_entropy_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  perturbed += shifted;
}

EntropyProfile average_entropy_with(EntropyKernel kernel, const ScatteringEngine& engine,
                                    int entrance, const QuadratureOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "tolerance must be positive");
  if (options.start_panels < 1 || options.nodes_per_panel < 1 || !(options.period > 0.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "bad quadrature options");
  }
  const QuadratureRule reference = gauss_legendre(options.nodes_per_panel);

  EntropyProfile profile;
  profile.period = options.period;

  auto level = [&](int panels, QuadratureRule& rule, std::vector<double>& h) {
    rule = composite(reference, 0.0, options.period, panels);
    h.assign(rule.nodes.size(), 0.0);
    kernel(engine, entrance, rule.nodes, h, profile.perturbed_nodes);
    profile.evaluations += static_cast<long>(rule.nodes.size());
    std::vector<double> terms(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) terms[j] = rule.weights[j] * h[j];
    return pairwise_sum(terms) / options.period;
  };

  QuadratureRule rule;
  std::vector<double> h;
  int panels = options.start_panels;
  double previous = level(panels, rule, h);
  while (true) {
    const int next = panels * 2;
    if (next > options.max_panels) break;
    const double current = level(next, rule, h);
    profile.estimated_error = std::abs(current - previous);
    panels = next;
    previous = current;
    if (profile.estimated_error < options.tol) {
      profile.converged = true;
      break;
    }
  }
  profile.average = previous;
  profile.panels_used = panels;
  profile.samples.resize(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) profile.samples[j] = {rule.nodes[j], h[j]};
  return profile;
}

EntropyProfile average_entropy(const ScatteringEngine& engine, int entrance,
                               const QuadratureOptions& options) {
  return average_entropy_with(&entropy_nodes_parallel, engine, entrance, options);
}

EntropyProfile average_entropy(const MetricGraph& graph, int entrance, double tol) {
  QuadratureOptions options;
  options.tol = tol;
  return average_entropy(ScatteringEngine(graph), entrance, options);
}

std::vector<SweepRow> transmission_sweep(const ScatteringEngine& engine, int entrance,
                                         double k_min, double k_max, int n_samples) {
  if (!(k_min > 0.0) || !(k_max > k_min)) {
    throw Error(ErrorKind::ParameterOutOfRange, "need 0 < k_min < k_max");
  }
  if (n_samples < 2) throw Error(ErrorKind::ParameterOutOfRange, "need at least two samples");
  std::vector<SweepRow> rows(n_samples);
  const double step = (k_max - k_min) / (n_samples - 1);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (int j = 0; j < n_samples; ++j) {
    try {
      const double k = j == n_samples - 1 ? k_max : k_min + step * j;
      ChannelColumn col = engine.column(k, entrance);
      rows[j].k = k;
      rows[j].entropy = shannon_entropy(col.probabilities);
      rows[j].probabilities = std::move(col.probabilities);
      rows[j].perturbed = col.diagnostics.perturbed;
    } catch (...) {
#pragma omp critical(scatent_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {
void put_number(std::ostream& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  out << buf;
}
}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, int channels) {
  out << "k";
  for (int c = 1; c <= channels; ++c) out << ",p_" << c;
  out << ",H,flags\n";
  for (const SweepRow& row : rows) {
    put_number(out, row.k);
    for (double p : row.probabilities) {
      out << ',';
      put_number(out, p);
    }
    out << ',';
    put_number(out, row.entropy);
    out << ',' << (row.perturbed ? "perturbed" : "") << '\n';
  }
}

}  // namespace scatent
