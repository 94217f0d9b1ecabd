#pragma once

#include <numbers>
#include <ostream>
#include <span>
#include <vector>

#include "scatent/engine.hpp"

namespace scatent {

struct ChannelDistribution {
  int entrance = 1;
  std::vector<double> probabilities;
};

// H = -sum p log2 p with 0 log2 0 = 0. Probabilities below 1e-300 count as zero.
// Throws InvalidDistribution for negative entries or a sum off by more than 1e-6.
double shannon_entropy(std::span<const double> probabilities);
double shannon_entropy(const ChannelDistribution& dist);

// Per-wavenumber scattering entropy for one entrance channel.
double entropy_at(const ScatteringEngine& engine, double k, int entrance);
double entropy_at(const MetricGraph& graph, double k, int entrance);

struct QuadratureOptions {
  double tol = 1e-6;
  int start_panels = 16;
  int nodes_per_panel = 32;
  int max_panels = 1 << 14;
  double period = 2.0 * std::numbers::pi;
};

struct EntropySample {
  double k = 0.0;
  double h = 0.0;
};

struct EntropyProfile {
  std::vector<EntropySample> samples;  // nodes of the accepted level
  double average = 0.0;
  double period = 0.0;
  int panels_used = 0;
  double estimated_error = 0.0;  // |H(2m) - H(m)| at the accepted level
  bool converged = false;        // false: cap reached, average is the best estimate
  long evaluations = 0;
  int perturbed_nodes = 0;
};

// Evaluates H at every k in `ks`, writing into `out`. Both kernels below
// compute bit-identical values; they differ only in scheduling.
using EntropyKernel = void (*)(const ScatteringEngine& engine, int entrance,
                               std::span<const double> ks, std::span<double> out, int& perturbed);

void entropy_nodes_parallel(const ScatteringEngine& engine, int entrance, std::span<const double> ks,
                            std::span<double> out, int& perturbed);
void entropy_nodes_serial(const ScatteringEngine& engine, int entrance, std::span<const double> ks,
                          std::span<double> out, int& perturbed);

// Composite Gauss-Legendre over one period with panel doubling until two
// successive levels agree to `tol`. OpenMP over the k-nodes.
EntropyProfile average_entropy(const ScatteringEngine& engine, int entrance,
                               const QuadratureOptions& options = {});
EntropyProfile average_entropy(const MetricGraph& graph, int entrance, double tol = 1e-6);

// Single-threaded reference of the same computation.
EntropyProfile average_entropy_serial(const ScatteringEngine& engine, int entrance,
                                      const QuadratureOptions& options = {});

EntropyProfile average_entropy_with(EntropyKernel kernel, const ScatteringEngine& engine,
                                    int entrance, const QuadratureOptions& options);

struct SweepRow {
  double k = 0.0;
  std::vector<double> probabilities;  // exit channels 1..l
  double entropy = 0.0;
  bool perturbed = false;
};

// Uniform grid k_min..k_max inclusive with n_samples points.
std::vector<SweepRow> transmission_sweep(const ScatteringEngine& engine, int entrance,
                                         double k_min, double k_max, int n_samples);

// Header `k,p_1,...,p_l,H,flags`, 12 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, int channels);

}  // namespace scatent
