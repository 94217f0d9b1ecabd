// Wall-clock comparison of the OpenMP and serial entropy kernels.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "scatent/catalog.hpp"
#include "scatent/entropy.hpp"

using namespace scatent;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  struct Case {
    const char* label;
    MetricGraph graph;
  };
  FamilySpec k8;
  k8.family = Family::Complete;
  k8.n = 8;
  k8.lead_mode = LeadMode::LeadPerVertex;
  const std::vector<Case> cases = {
      {"XX", load_catalog_graph("XX")},
      {"complete-8-all", expand_family(k8)},
      {"fishbone-8", fishbone(8, BoundaryCondition::Neumann)},
      {"fishbone-16", fishbone(16, BoundaryCondition::Neumann)},
  };
  std::printf("threads=%d\n", omp_get_max_threads());
  std::printf("%-16s %6s %8s %12s %12s %8s %s\n", "graph", "bonds", "panels", "serial_s", "parallel_s", "speedup",
              "identical");
  for (const auto& c : cases) {
    const ScatteringEngine engine(c.graph);
    EntropyProfile ser, par;
    const double ts = best_of(2, [&] { ser = average_entropy_serial(engine, 1); });
    const double tp = best_of(2, [&] { par = average_entropy(engine, 1); });
    std::printf("%-16s %6zu %8d %12.3f %12.3f %8.2f %s\n", c.label, engine.bonds().size(), par.panels_used, ts, tp,
                ts / tp, ser.average == par.average ? "yes" : "no");
  }
  return 0;
}
