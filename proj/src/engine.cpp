#include "scatent/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scatent {

std::vector<DirectedBond> enumerate_bonds(const MetricGraph& graph) {
  std::vector<DirectedBond> bonds;
  bonds.reserve(2 * graph.edges.size());
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edges[e];
    const VertexId lo = std::min(edge.a, edge.b);
    const VertexId hi = std::max(edge.a, edge.b);
    bonds.push_back({e, lo, hi});
    bonds.push_back({e, hi, lo});
  }
  return bonds;
}

CMatrix BondSystem::evolution() const {
  const int n = size();
  CMatrix u(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) u(p, q) = phases[p] * coupling(p, q);
  }
  return u;
}

CMatrix BondSystem::system_matrix() const {
  CMatrix m = evolution();
  for (int p = 0; p < size(); ++p) {
    for (int q = 0; q < size(); ++q) m(p, q) = (p == q ? 1.0 : 0.0) - m(p, q);
  }
  return m;
}

BondSystem BondSystem::at(double new_k) const {
  BondSystem shifted = *this;
  shifted.k = new_k;
  for (int p = 0; p < size(); ++p) {
    shifted.phases[p] = std::polar(1.0, new_k * lengths[p]);
    shifted.injection[p] = shifted.phases[p] * exit_weights[p];
  }
  return shifted;
}

double probability_of(cplx amplitude) {
  const double p = std::norm(amplitude);
  if (p > 1.0 + 1e-6) {
    throw Error(ErrorKind::BrokenAssembly,
                "probability " + std::to_string(p) + " exceeds 1 beyond roundoff");
  }
  return std::min(p, 1.0);
}

// ---- ScatteringEngine ------------------------------------------------------

ScatteringEngine::ScatteringEngine(MetricGraph graph, SolverKind solver) : graph_(std::move(graph)) {
  validate(graph_);
  bonds_ = enumerate_bonds(graph_);
  const int n = static_cast<int>(bonds_.size());

  const auto deg = degrees(graph_);
  for (const Vertex& v : graph_.vertices) vertex_amps_.push_back(vertex_amplitudes(v.bc, deg[v.id - 1]));

  bonds_from_.resize(graph_.num_vertices());
  bonds_into_.resize(graph_.num_vertices());
  for (int p = 0; p < n; ++p) {
    lengths_.push_back(graph_.edges[bonds_[p].edge].length_units);
    bonds_from_[bonds_[p].from - 1].push_back(p);
    bonds_into_[bonds_[p].to - 1].push_back(p);
  }

  coupling_.resize(n);
  for (int p = 0; p < n; ++p) {
    const VertexId j = bonds_[p].to;
    const VertexAmplitudes& amp = vertex_amps_[j - 1];
    for (int q : bonds_from_[j - 1]) coupling_(p, q) = bonds_[q].edge == bonds_[p].edge ? amp.r : amp.t;
  }

  band_pos_ = band_ordering();
  for (int p = 0; p < n; ++p) {
    for (int q : bonds_from_[bonds_[p].to - 1]) {
      kl_ = std::max(kl_, band_pos_[p] - band_pos_[q]);
      ku_ = std::max(ku_, band_pos_[q] - band_pos_[p]);
    }
  }
  switch (solver) {
    case SolverKind::Automatic: banded_ = 2 * (2 * kl_ + ku_ + 1) < n; break;
    case SolverKind::Dense: banded_ = false; break;
    case SolverKind::Banded: banded_ = true; break;
  }
}

// Reverse Cuthill-McKee on the symmetrized bond coupling graph.
std::vector<int> ScatteringEngine::band_ordering() const {
  const int n = static_cast<int>(bonds_.size());
  std::vector<std::vector<int>> adj(n);
  for (int p = 0; p < n; ++p) {
    for (int q : bonds_from_[bonds_[p].to - 1]) {
      if (p == q) continue;
      adj[p].push_back(q);
      adj[q].push_back(p);
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  auto by_degree = [&](int a, int b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
  };

  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::vector<int> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  std::sort(starts.begin(), starts.end(), by_degree);
  for (int s : starts) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      std::vector<int> next;
      for (int q : adj[order[head++]]) {
        if (!seen[q]) {
          seen[q] = 1;
          next.push_back(q);
        }
      }
      std::sort(next.begin(), next.end(), by_degree);
      order.insert(order.end(), next.begin(), next.end());
    }
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;
  return pos;
}

void ScatteringEngine::check_channel(int channel) const {
  if (channel < 1 || channel > num_channels()) {
    throw Error(ErrorKind::UnknownChannel, "channel " + std::to_string(channel) + " of " +
                                               std::to_string(num_channels()));
  }
}

std::vector<cplx> ScatteringEngine::phases_at(double k) const {
  std::vector<cplx> phases(bonds_.size());
  for (std::size_t p = 0; p < bonds_.size(); ++p) phases[p] = std::polar(1.0, k * lengths_[p]);
  return phases;
}

BondSystem ScatteringEngine::assemble(double k, int exit_channel) const {
  check_channel(exit_channel);
  BondSystem system;
  system.k = k;
  system.exit_channel = exit_channel;
  system.bonds = bonds_;
  system.lengths = lengths_;
  system.phases = phases_at(k);
  system.coupling = coupling_;
  const VertexId f = graph_.leads[exit_channel - 1];
  const double t_f = vertex_amps_[f - 1].t;
  system.exit_weights.assign(bonds_.size(), 0.0);
  for (int p : bonds_into_[f - 1]) system.exit_weights[p] = t_f;
  system.injection.resize(bonds_.size());
  for (std::size_t p = 0; p < bonds_.size(); ++p) {
    system.injection[p] = system.phases[p] * system.exit_weights[p];
  }
  return system;
}

CMatrix ScatteringEngine::system_matrix(std::span<const cplx> phases) const {
  const int n = static_cast<int>(bonds_.size());
  CMatrix m = CMatrix::identity(n);
  for (int p = 0; p < n; ++p) {
    const VertexId j = bonds_[p].to;
    for (int q : bonds_from_[j - 1]) m(p, q) -= phases[p] * coupling_(p, q);
  }
  return m;
}

std::vector<cplx> ScatteringEngine::apply_system(std::span<const cplx> phases, std::span<const cplx> x,
                                                 bool transposed) const {
  std::vector<cplx> y(x.begin(), x.end());
  for (std::size_t p = 0; p < bonds_.size(); ++p) {
    const VertexId j = bonds_[p].to;
    for (int q : bonds_from_[j - 1]) {
      const cplx m = phases[p] * coupling_(p, q);
      if (transposed) {
        y[q] -= m * x[p];
      } else {
        y[p] -= m * x[q];
      }
    }
  }
  return y;
}

// The band factors hold P A P^T, which has the same determinant as A.
cplx ScatteringEngine::Factored::determinant() const {
  return banded ? band.determinant() : dense.determinant();
}

void ScatteringEngine::Factored::solve_impl(std::span<cplx> b, bool transposed) const {
  if (!banded) {
    transposed ? dense.solve_transposed(b) : dense.solve(b);
    return;
  }
  const auto& pos = *band_pos;
  std::vector<cplx> tmp(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) tmp[pos[p]] = b[p];
  transposed ? band.solve_transposed(tmp) : band.solve(tmp);
  for (std::size_t p = 0; p < b.size(); ++p) b[p] = tmp[pos[p]];
}

ScatteringEngine::Factored ScatteringEngine::factor_exact(double k) const {
  Factored out;
  out.k_used = k;
  out.phases = phases_at(k);
  out.banded = banded_;
  if (banded_) {
    const int n = static_cast<int>(bonds_.size());
    out.band = BandedLU(n, kl_, ku_);
    out.band_pos = &band_pos_;
    for (int p = 0; p < n; ++p) {
      const int row = band_pos_[p];
      out.band.at(row, row) = 1.0;
      for (int q : bonds_from_[bonds_[p].to - 1]) {
        out.band.at(row, band_pos_[q]) -= out.phases[p] * coupling_(p, q);
      }
    }
    out.band.factor();
  } else {
    out.dense.factor(system_matrix(out.phases));
  }
  return out;
}

ScatteringEngine::Factored ScatteringEngine::factor(double k) const {
  Factored out = factor_exact(k);
  if (out.min_pivot() >= kSingularPivot) return out;
  out = factor_exact(k + kSingularShift);
  out.perturbed = true;
  if (out.min_pivot() >= kSingularPivot) return out;
  throw Error(ErrorKind::SingularAfterRetry,
              "1 - U(k) is singular at k = " + std::to_string(k) + " and at k + eps");
}

cplx ScatteringEngine::direct_term(int exit_channel, int entrance_channel) const {
  const VertexId vf = graph_.leads[exit_channel - 1];
  const VertexId vi = graph_.leads[entrance_channel - 1];
  if (vf != vi) return 0.0;
  const VertexAmplitudes& amp = vertex_amps_[vi - 1];
  return exit_channel == entrance_channel ? amp.r : amp.t;
}

namespace {
void check_wavenumber(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::ParameterOutOfRange, "wavenumber must be positive, got " + std::to_string(k));
  }
}
}  // namespace

ScatteringMatrix ScatteringEngine::scattering_matrix(double k) const {
  check_wavenumber(k);
  const int l = num_channels();
  const int n = static_cast<int>(bonds_.size());
  ScatteringMatrix sm;
  sm.k = k;
  sm.channels = l;
  sm.amplitudes.assign(static_cast<std::size_t>(l) * l, cplx{});

  Factored fac = factor(k);
  sm.diagnostics.k_used = fac.k_used;
  sm.diagnostics.perturbed = fac.perturbed;
  sm.diagnostics.secular_value = fac.determinant();

  std::vector<cplx> paths(n);
  for (int f = 1; f <= l; ++f) {
    const VertexId vf = graph_.leads[f - 1];
    std::fill(paths.begin(), paths.end(), cplx{});
    for (int p : bonds_into_[vf - 1]) paths[p] = fac.phases[p] * vertex_amps_[vf - 1].t;
    const std::vector<cplx> rhs = paths;
    fac.solve(paths);
    if (n > 0) {
      auto mp = apply_system(fac.phases, paths, false);
      for (int p = 0; p < n; ++p) mp[p] -= rhs[p];
      sm.diagnostics.residual_norm = std::max(sm.diagnostics.residual_norm, max_abs(mp));
    }
    for (int i = 1; i <= l; ++i) {
      const VertexId vi = graph_.leads[i - 1];
      cplx sum{};
      for (int p : bonds_from_[vi - 1]) sum += paths[p];
      sm.amplitudes[static_cast<std::size_t>(f - 1) * l + (i - 1)] =
          direct_term(f, i) + vertex_amps_[vi - 1].t * sum;
    }
  }

  sm.probabilities.resize(sm.amplitudes.size());
  for (std::size_t x = 0; x < sm.amplitudes.size(); ++x) sm.probabilities[x] = probability_of(sm.amplitudes[x]);
  for (int i = 1; i <= l; ++i) {
    double total = 0.0;
    for (int f = 1; f <= l; ++f) {
      total += std::norm(sm.amplitude(f, i));
      sm.reciprocity_error = std::max(
          sm.reciprocity_error, std::abs(std::abs(sm.amplitude(f, i)) - std::abs(sm.amplitude(i, f))));
    }
    sm.unitarity_error = std::max(sm.unitarity_error, std::abs(total - 1.0));
  }
  return sm;
}

ChannelColumn ScatteringEngine::column(double k, int entrance) const {
  check_wavenumber(k);
  check_channel(entrance);
  const int l = num_channels();
  const int n = static_cast<int>(bonds_.size());
  ChannelColumn col;
  col.k = k;
  col.entrance = entrance;

  const VertexId vi = graph_.leads[entrance - 1];
  const double t_i = vertex_amps_[vi - 1].t;

  // s(f, i) = direct + t_i * w_i^T M^{-1} Z_f with w_i the bonds leaving v_i,
  // so a single solve with M^T serves every exit channel.
  std::vector<cplx> adjoint(n);
  if (n > 0) {
    Factored fac = factor(k);
    col.diagnostics.k_used = fac.k_used;
    col.diagnostics.perturbed = fac.perturbed;
    col.diagnostics.secular_value = fac.determinant();
    for (int p : bonds_from_[vi - 1]) adjoint[p] = 1.0;
    const std::vector<cplx> rhs = adjoint;
    fac.solve_transposed(adjoint);
    auto check = apply_system(fac.phases, adjoint, true);
    for (int q = 0; q < n; ++q) check[q] -= rhs[q];
    col.diagnostics.residual_norm = max_abs(check);
    for (int p = 0; p < n; ++p) adjoint[p] *= fac.phases[p];
  } else {
    col.diagnostics.k_used = k;
  }

  col.amplitudes.resize(l);
  col.probabilities.resize(l);
  for (int f = 1; f <= l; ++f) {
    const VertexId vf = graph_.leads[f - 1];
    cplx sum{};
    for (int p : bonds_into_[vf - 1]) sum += adjoint[p];
    col.amplitudes[f - 1] = direct_term(f, entrance) + t_i * vertex_amps_[vf - 1].t * sum;
    col.probabilities[f - 1] = probability_of(col.amplitudes[f - 1]);
  }
  return col;
}

cplx ScatteringEngine::secular_determinant(double k) const {
  if (bonds_.empty()) return 1.0;
  return factor_exact(k).determinant();
}

std::vector<double> ScatteringMatrix::column(int entrance) const {
  std::vector<double> out(channels);
  for (int f = 1; f <= channels; ++f) out[f - 1] = probability(f, entrance);
  return out;
}

// ---- free-function surface -------------------------------------------------

BondSystem assemble(const MetricGraph& graph, double k, int exit_channel) {
  return ScatteringEngine(graph).assemble(k, exit_channel);
}

PathSolution solve(const BondSystem& system) {
  PathSolution out;
  out.diagnostics.k_used = system.k;
  if (system.size() == 0) return out;

  const BondSystem* current = &system;
  BondSystem shifted;
  ComplexLU lu(current->system_matrix());
  if (lu.min_pivot() < kSingularPivot) {
    shifted = system.at(system.k + kSingularShift);
    current = &shifted;
    lu.factor(current->system_matrix());
    if (lu.min_pivot() < kSingularPivot) {
      throw Error(ErrorKind::SingularAfterRetry,
                  "1 - U(k) is singular at k = " + std::to_string(system.k) + " and at k + eps");
    }
    out.diagnostics.perturbed = true;
    out.diagnostics.k_used = current->k;
  }
  out.diagnostics.secular_value = lu.determinant();
  out.paths = current->injection;
  lu.solve(out.paths);
  auto mp = current->system_matrix().multiply(out.paths);
  for (int p = 0; p < current->size(); ++p) mp[p] -= current->injection[p];
  out.diagnostics.residual_norm = max_abs(mp);
  return out;
}

ScatteringMatrix scattering_matrix(const MetricGraph& graph, double k) {
  return ScatteringEngine(graph).scattering_matrix(k);
}

cplx secular_determinant(const MetricGraph& graph, double k) {
  return ScatteringEngine(graph).secular_determinant(k);
}

}  // namespace scatent
