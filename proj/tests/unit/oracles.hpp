#pragma once

// Test-only reference implementations. Nothing here shares code with the
// bond-space engine: amplitudes come from matching plane waves on every edge
// and lead, solved with Eigen.

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "scatent/graph.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Exit amplitudes s_f for a unit wave entering on `entrance` (1-based).
// Edge e = (a, b, L): psi = A e^{ikx} + B e^{-ikx}, x running from a to b.
// Lead j at vertex v: psi = delta_{j,entrance} e^{-ikx} + s_j e^{ikx}, x >= 0 outward.
// At every vertex: continuity plus a vanishing sum of outward derivatives;
// a Dirichlet vertex only has psi = 0.
inline std::vector<cplx> wave_matching(const scatent::MetricGraph& g, double k, int entrance) {
  const int e_count = g.num_edges();
  const int l = g.num_channels();
  const int n = 2 * e_count + l;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  int row = 0;

  struct Term {
    Eigen::VectorXcd c;
    cplx constant;
  };
  for (const auto& vertex : g.vertices) {
    const int v = vertex.id;
    std::vector<Term> values;
    std::vector<Term> slopes;  // outward derivative divided by ik
    for (int e = 0; e < e_count; ++e) {
      const auto& edge = g.edges[e];
      const cplx ph = std::polar(1.0, k * edge.length_units);
      for (int end = 0; end < 2; ++end) {
        if ((end == 0 ? edge.a : edge.b) != v) continue;
        Term val{Eigen::VectorXcd::Zero(n), 0.0};
        Term der{Eigen::VectorXcd::Zero(n), 0.0};
        if (end == 0) {
          val.c(2 * e) = 1.0;
          val.c(2 * e + 1) = 1.0;
          der.c(2 * e) = 1.0;
          der.c(2 * e + 1) = -1.0;
        } else {
          val.c(2 * e) = ph;
          val.c(2 * e + 1) = 1.0 / ph;
          der.c(2 * e) = -ph;
          der.c(2 * e + 1) = 1.0 / ph;
        }
        values.push_back(val);
        slopes.push_back(der);
      }
    }
    for (int j = 0; j < l; ++j) {
      if (g.leads[j] != v) continue;
      const double inc = j + 1 == entrance ? 1.0 : 0.0;
      Term val{Eigen::VectorXcd::Zero(n), inc};
      Term der{Eigen::VectorXcd::Zero(n), -inc};
      val.c(2 * e_count + j) = 1.0;
      der.c(2 * e_count + j) = 1.0;
      values.push_back(val);
      slopes.push_back(der);
    }
    if (vertex.bc == scatent::BoundaryCondition::Dirichlet) {
      m.row(row) = values[0].c.transpose();
      rhs(row++) = -values[0].constant;
      continue;
    }
    for (std::size_t t = 1; t < values.size(); ++t) {
      m.row(row) = (values[0].c - values[t].c).transpose();
      rhs(row++) = values[t].constant - values[0].constant;
    }
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(n);
    cplx constant = 0.0;
    for (const auto& s : slopes) {
      sum += s.c;
      constant += s.constant;
    }
    m.row(row) = sum.transpose();
    rhs(row++) = -constant;
  }
  const Eigen::VectorXcd x = m.fullPivLu().solve(rhs);
  return std::vector<cplx>(x.data() + 2 * e_count, x.data() + n);
}

// Connected random multigraph with 2..max_v vertices, lengths 1..4, 1..3
// leads on distinct vertices, and random boundary conditions on dead ends.
inline scatent::MetricGraph random_graph(std::mt19937_64& rng, int max_v = 6) {
  using namespace scatent;
  std::uniform_int_distribution<int> vcount(2, max_v);
  std::uniform_int_distribution<int> len(1, 4);
  std::bernoulli_distribution coin(0.5);
  const int v = vcount(rng);
  MetricGraph g;
  g.name = "random";
  for (int id = 1; id <= v; ++id) g.vertices.push_back({id, BoundaryCondition::Neumann});
  for (int id = 2; id <= v; ++id) {
    std::uniform_int_distribution<int> parent(1, id - 1);
    g.edges.push_back({parent(rng), id, len(rng)});
  }
  std::uniform_int_distribution<int> extra(0, v);
  std::uniform_int_distribution<int> pick(1, v);
  for (int j = extra(rng); j > 0; --j) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a != b) g.edges.push_back({a, b, len(rng)});
  }
  std::vector<int> ids(v);
  for (int i = 0; i < v; ++i) ids[i] = i + 1;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::uniform_int_distribution<int> lcount(1, std::min(3, v));
  g.leads.assign(ids.begin(), ids.begin() + lcount(rng));
  const auto deg = degrees(g);
  for (auto& vertex : g.vertices) {
    if (deg[vertex.id - 1] == 1 && coin(rng)) vertex.bc = BoundaryCondition::Dirichlet;
  }
  return g;
}

}  // namespace oracle
