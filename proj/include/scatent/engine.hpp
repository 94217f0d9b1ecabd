#pragma once

#include <string_view>
#include <vector>

#include "scatent/dense_lu.hpp"
#include "scatent/graph.hpp"

namespace scatent {

// One orientation of an internal edge. The path-family unknowns live on bonds.
struct DirectedBond {
  int edge = 0;  // index into MetricGraph::edges
  VertexId from = 0;
  VertexId to = 0;

  bool operator==(const DirectedBond&) const = default;
};

// 2E bonds sorted by (edge, from).
std::vector<DirectedBond> enumerate_bonds(const MetricGraph& graph);

// A wave arriving at vertex j along bond (i -> j) continues into (j -> i) with
// amplitude r_j and into every other bond leaving j with t_j. Only the
// incoming bond is excluded from the onward sum; the exit vertex is not.
inline constexpr std::string_view kNeighborExclusion = "incoming-bond-only";

// Pivot magnitude below which 1 - U(k) is treated as singular.
inline constexpr double kSingularPivot = 1e-12;
// Shift applied to k when the factorization is singular.
inline constexpr double kSingularShift = 1e-9 * 6.283185307179586;

struct SolveDiagnostics {
  double residual_norm = 0.0;
  bool perturbed = false;
  double k_used = 0.0;
  cplx secular_value{1.0, 0.0};
  std::string_view neighbor_exclusion = kNeighborExclusion;
};

// The linear system P = U(k) P + Z for one exit channel, with U = D S.
struct BondSystem {
  double k = 0.0;
  int exit_channel = 1;
  std::vector<DirectedBond> bonds;
  std::vector<int> lengths;          // per bond
  std::vector<cplx> phases;          // diagonal of D: z^length
  CMatrix coupling;                  // S, k-independent
  std::vector<double> exit_weights;  // t_f on bonds ending at the exit vertex
  std::vector<cplx> injection;       // Z = D * exit_weights

  int size() const { return static_cast<int>(bonds.size()); }
  CMatrix evolution() const;  // U = D S
  CMatrix system_matrix() const;  // 1 - U
  BondSystem at(double new_k) const;
};

struct PathSolution {
  std::vector<cplx> paths;
  SolveDiagnostics diagnostics;
};

struct ScatteringMatrix {
  double k = 0.0;
  int channels = 0;
  std::vector<cplx> amplitudes;      // row-major, (f, i) -> [(f - 1) * l + (i - 1)]
  std::vector<double> probabilities; // |amplitude|^2, clamped to [0, 1]
  double unitarity_error = 0.0;      // max |sum_f p(f, i) - 1|
  double reciprocity_error = 0.0;    // max ||s(f, i)| - |s(i, f)||
  SolveDiagnostics diagnostics;

  cplx amplitude(int exit, int entrance) const {
    return amplitudes[static_cast<std::size_t>(exit - 1) * channels + (entrance - 1)];
  }
  double probability(int exit, int entrance) const {
    return probabilities[static_cast<std::size_t>(exit - 1) * channels + (entrance - 1)];
  }
  std::vector<double> column(int entrance) const;
};

// Exit amplitudes for one entrance channel.
struct ChannelColumn {
  double k = 0.0;
  int entrance = 1;
  std::vector<cplx> amplitudes;
  std::vector<double> probabilities;
  SolveDiagnostics diagnostics;
};

// Automatic picks the band solver when the bond ordering gives a band
// narrower than half the system; otherwise the dense one.
enum class SolverKind { Automatic, Dense, Banded };

// Precomputed k-independent structure of a validated graph. All methods are
// const and safe to call concurrently.
class ScatteringEngine {
 public:
  explicit ScatteringEngine(MetricGraph graph, SolverKind solver = SolverKind::Automatic);

  const MetricGraph& graph() const { return graph_; }
  const std::vector<DirectedBond>& bonds() const { return bonds_; }
  int num_channels() const { return graph_.num_channels(); }
  bool uses_band_solver() const { return banded_; }
  int lower_bandwidth() const { return kl_; }
  int upper_bandwidth() const { return ku_; }
  const VertexAmplitudes& amplitudes_at(VertexId v) const { return vertex_amps_[v - 1]; }

  BondSystem assemble(double k, int exit_channel) const;

  // Factors 1 - U(k) once and solves one system per exit channel.
  ScatteringMatrix scattering_matrix(double k) const;

  // One transposed solve per call; used by the entropy integrand.
  ChannelColumn column(double k, int entrance) const;

  cplx secular_determinant(double k) const;

 private:
  struct Factored {
    bool banded = false;
    ComplexLU dense;
    BandedLU band;

    const std::vector<int>* band_pos = nullptr;  // bond -> band row
    std::vector<cplx> phases;
    double k_used = 0.0;
    bool perturbed = false;

    double min_pivot() const { return banded ? band.min_pivot() : dense.min_pivot(); }
    cplx determinant() const;
    void solve(std::span<cplx> b) const { solve_impl(b, false); }
    void solve_transposed(std::span<cplx> b) const { solve_impl(b, true); }
    void solve_impl(std::span<cplx> b, bool transposed) const;
  };
  Factored factor_exact(double k) const;
  // Retries once at k + kSingularShift.
  Factored factor(double k) const;
  CMatrix system_matrix(std::span<const cplx> phases) const;
  // (1 - U) x or its transpose, using only the structural nonzeros.
  std::vector<cplx> apply_system(std::span<const cplx> phases, std::span<const cplx> x,
                                 bool transposed) const;
  std::vector<cplx> phases_at(double k) const;
  cplx direct_term(int exit_channel, int entrance_channel) const;
  void check_channel(int channel) const;

  MetricGraph graph_;
  std::vector<DirectedBond> bonds_;
  std::vector<int> lengths_;
  std::vector<VertexAmplitudes> vertex_amps_;
  CMatrix coupling_;
  std::vector<std::vector<int>> bonds_from_;  // per vertex
  std::vector<std::vector<int>> bonds_into_;  // per vertex
  std::vector<int> band_ordering() const;

  std::vector<int> band_pos_;
  int kl_ = 0;
  int ku_ = 0;
  bool banded_ = false;
};

BondSystem assemble(const MetricGraph& graph, double k, int exit_channel);
PathSolution solve(const BondSystem& system);
ScatteringMatrix scattering_matrix(const MetricGraph& graph, double k);
cplx secular_determinant(const MetricGraph& graph, double k);

// Clamps |a|^2 to [0, 1]; throws BrokenAssembly if it exceeds 1 by more than 1e-6.
double probability_of(cplx amplitude);

}  // namespace scatent
