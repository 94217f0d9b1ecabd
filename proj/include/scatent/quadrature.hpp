#pragma once

#include <span>
#include <vector>

namespace scatent {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

// Composite rule over [a, b] split into `panels` equal panels, each carrying
// the given reference rule. Nodes are emitted panel by panel in increasing order.
QuadratureRule composite(const QuadratureRule& reference, double a, double b, int panels);

// Pairwise (cascade) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace scatent
