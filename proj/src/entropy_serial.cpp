#include "scatent/entropy.hpp"

namespace scatent {

// Reference kernel: same per-node arithmetic as the OpenMP kernel, in order.
void entropy_nodes_serial(const ScatteringEngine& engine, int entrance, std::span<const double> ks,
                          std::span<double> out, int& perturbed) {
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const ChannelColumn col = engine.column(ks[j], entrance);
    out[j] = shannon_entropy(col.probabilities);
    perturbed += col.diagnostics.perturbed;
  }
}

EntropyProfile average_entropy_serial(const ScatteringEngine& engine, int entrance,
                                      const QuadratureOptions& options) {
  return average_entropy_with(&entropy_nodes_serial, engine, entrance, options);
}

}  // namespace scatent
