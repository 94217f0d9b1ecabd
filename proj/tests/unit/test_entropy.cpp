#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "scatent/catalog.hpp"
#include "scatent/entropy.hpp"
#include "scatent/quadrature.hpp"

using namespace scatent;

namespace {

MetricGraph fam(Family f, int n, LeadMode mode = LeadMode::TwoLeads,
                BoundaryCondition bc = BoundaryCondition::Neumann) {
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  spec.lead_mode = mode;
  spec.dead_end_bc = bc;
  return expand_family(spec);
}

double coin(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

// Entropy of one Neumann vertex, straight from its reflection and
// transmission probabilities.
double vertex_entropy(int d) {
  const double r2 = std::pow(2.0 / d - 1.0, 2);
  const double t2 = 4.0 / (static_cast<double>(d) * d);
  return -r2 * std::log2(r2) - (d - 1) * t2 * std::log2(t2);
}

}  // namespace

TEST_CASE("Shannon entropy") {
  const std::vector<double> fair{0.5, 0.5};
  CHECK(shannon_entropy(fair) == 1.0);
  const std::vector<double> sure{1.0, 0.0};
  CHECK(shannon_entropy(sure) == 0.0);
  const std::vector<double> biased{0.6, 0.4};
  CHECK(shannon_entropy(biased) == doctest::Approx(0.970951).epsilon(1e-6));
  const std::vector<double> biased2{0.7, 0.3};
  CHECK(shannon_entropy(biased2) == doctest::Approx(0.881291).epsilon(1e-6));
  CHECK(shannon_entropy(biased2) == doctest::Approx(coin(0.3)).epsilon(1e-15));
  const std::vector<double> uniform(8, 0.125);
  CHECK(shannon_entropy(uniform) == doctest::Approx(3.0).epsilon(1e-15));
  const std::vector<double> tiny{1.0, 1e-301};
  CHECK(shannon_entropy(tiny) == 0.0);
  CHECK(shannon_entropy(ChannelDistribution{1, {0.25, 0.75}}) == doctest::Approx(coin(0.25)));
}

TEST_CASE("invalid distributions") {
  const std::vector<double> negative{1.1, -0.1};
  CHECK_THROWS_AS(shannon_entropy(negative), Error);
  const std::vector<double> short_sum{0.5, 0.4};
  CHECK_THROWS_AS(shannon_entropy(short_sum), Error);
  const std::vector<double> nan{std::nan(""), 1.0};
  CHECK_THROWS_AS(shannon_entropy(nan), Error);
  try {
    shannon_entropy(short_sum);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDistribution);
  }
}

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {1, 2, 5, 16, 32}) {
    const QuadratureRule rule = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for polynomials up to degree 2n - 1.
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      CHECK(std::abs(q - exact) < 1e-13);
    }
    for (int i = 1; i < n; ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
  CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("composite rule integrates a trigonometric polynomial over its period") {
  const QuadratureRule rule = composite(gauss_legendre(16), 0.0, 2 * std::numbers::pi, 4);
  REQUIRE(rule.nodes.size() == 64);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * std::pow(std::cos(rule.nodes[i]), 4);
  }
  CHECK(s == doctest::Approx(3.0 * std::numbers::pi / 4.0).epsilon(1e-13));
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
}

TEST_CASE("pairwise summation") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  std::vector<double> mixed{1e16, 1.0, -1e16, 1.0};
  CHECK(pairwise_sum(mixed) == pairwise_sum(mixed));
}

TEST_CASE("entropy of a k-independent distribution needs a single doubling") {
  for (int d = 3; d <= 8; ++d) {
    const auto profile = average_entropy(fam(Family::SingleVertex, d), 1);
    CHECK(profile.converged);
    CHECK(profile.panels_used == 32);
    CHECK(profile.average == doctest::Approx(vertex_entropy(d)).epsilon(1e-12));
  }
}

TEST_CASE("single-vertex closed form equals direct evaluation and quadrature") {
  for (int d = 3; d <= 20; ++d) {
    CHECK(closed_form_single_vertex_entropy(d) == doctest::Approx(vertex_entropy(d)).epsilon(1e-13));
    CHECK(std::abs(entropy_at(fam(Family::SingleVertex, d), 2.2, 1) - vertex_entropy(d)) < 1e-12);
  }
  CHECK(closed_form_single_vertex_entropy(3) == doctest::Approx(1.39215).epsilon(1e-5));
  CHECK(closed_form_single_vertex_entropy(6) ==
        doctest::Approx(20.0 / 36.0 * std::log2(9.0) + 16.0 / 36.0 * std::log2(36.0 / 16.0)));
  CHECK_THROWS_AS(closed_form_single_vertex_entropy(2), Error);
}

TEST_CASE("the two-lead single vertex is transparent") {
  CHECK(entropy_at(fam(Family::SingleVertex, 2), 1.0, 1) == 0.0);
}

TEST_CASE("parallel and serial kernels are bit-identical") {
  for (const MetricGraph& g : {fam(Family::Star, 5), fam(Family::Cycle, 6, LeadMode::LeadPerVertex),
                               fam(Family::Wheel, 4), two_vertex_ring(3)}) {
    const ScatteringEngine engine(g);
    QuadratureOptions options;
    options.tol = 1e-5;
    const auto par = average_entropy(engine, 1, options);
    const auto ser = average_entropy_serial(engine, 1, options);
    CHECK(par.average == ser.average);
    CHECK(par.panels_used == ser.panels_used);
    CHECK(par.evaluations == ser.evaluations);
    REQUIRE(par.samples.size() == ser.samples.size());
    for (std::size_t j = 0; j < par.samples.size(); ++j) CHECK(par.samples[j].h == ser.samples[j].h);
  }
}

TEST_CASE("entropy bounds") {
  for (const MetricGraph& g : {fam(Family::Star, 6), fam(Family::Complete, 5, LeadMode::LeadPerVertex),
                               fam(Family::Wheel, 5, LeadMode::LeadPerVertex), fishbone(2, BoundaryCondition::Dirichlet)}) {
    const double cap = std::log2(static_cast<double>(g.num_channels()));
    const auto profile = average_entropy(g, 1, 1e-5);
    CHECK(profile.average >= 0.0);
    CHECK(profile.average <= cap + 1e-12);
    for (const auto& s : profile.samples) {
      CHECK(s.h >= 0.0);
      CHECK(s.h <= cap + 1e-12);
    }
  }
}

TEST_CASE("averaging over two periods changes nothing") {
  const ScatteringEngine engine(fam(Family::Star, 4));
  QuadratureOptions one;
  QuadratureOptions two;
  two.period = 4 * std::numbers::pi;
  two.start_panels = 32;
  CHECK(std::abs(average_entropy(engine, 1, one).average - average_entropy(engine, 1, two).average) < 1e-8);
}

TEST_CASE("tighter tolerance moves the average by less than the looser one") {
  const ScatteringEngine engine(fam(Family::Cycle, 5));
  QuadratureOptions loose;
  loose.tol = 1e-5;
  QuadratureOptions tight;
  tight.tol = 1e-6;
  CHECK(std::abs(average_entropy(engine, 1, loose).average - average_entropy(engine, 1, tight).average) < 1e-5);
}

TEST_CASE("vertex-transitive lead sets give the same average from every entrance") {
  for (const MetricGraph& g : {fam(Family::Cycle, 5, LeadMode::LeadPerVertex),
                               fam(Family::Complete, 4, LeadMode::LeadPerVertex)}) {
    const ScatteringEngine engine(g);
    const double first = average_entropy(engine, 1).average;
    for (int i = 2; i <= g.num_channels(); ++i) CHECK(std::abs(average_entropy(engine, i).average - first) < 1e-9);
  }
}

TEST_CASE("star dead-end condition does not change the average") {
  for (int n = 3; n <= 7; ++n) {
    const double neumann = average_entropy(fam(Family::Star, n), 1).average;
    const double dirichlet =
        average_entropy(fam(Family::Star, n, LeadMode::TwoLeads, BoundaryCondition::Dirichlet), 1).average;
    CAPTURE(n);
    CHECK(std::abs(neumann - dirichlet) < 1e-6);
  }
}

TEST_CASE("star with a lead on every vertex scatters like a single vertex") {
  for (int n = 3; n <= 8; ++n) {
    const ScatteringEngine star(fam(Family::Star, n, LeadMode::LeadPerVertex));
    const ScatteringEngine vertex(fam(Family::SingleVertex, n));
    for (double k : {0.3, 1.7, 4.1}) {
      const auto a = star.column(k, 1).probabilities;
      const auto b = vertex.column(k, 1).probabilities;
      for (int f = 0; f < n; ++f) CHECK(std::abs(a[f] - b[f]) < 1e-12);
    }
  }
}

TEST_CASE("quadrature options are validated") {
  const ScatteringEngine engine(fam(Family::Star, 3));
  QuadratureOptions bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(average_entropy(engine, 1, bad), Error);
  bad = {};
  bad.start_panels = 0;
  CHECK_THROWS_AS(average_entropy(engine, 1, bad), Error);
}

TEST_CASE("hitting the panel cap returns the best estimate unconverged") {
  QuadratureOptions capped;
  capped.tol = 1e-15;
  capped.max_panels = 64;
  const auto profile = average_entropy(ScatteringEngine(fam(Family::Cycle, 7)), 1, capped);
  CHECK_FALSE(profile.converged);
  CHECK(profile.panels_used == 64);
  CHECK(profile.samples.size() == 64u * 32u);
}

TEST_CASE("sweep rows and CSV") {
  const ScatteringEngine engine(two_vertex_ring(2));
  const auto rows = transmission_sweep(engine, 1, 0.5, 1.5, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].k == 0.5);
  CHECK(rows[1].k == 1.0);
  CHECK(rows[2].k == 1.5);
  std::ostringstream csv;
  write_sweep_csv(csv, rows, 2);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k,p_1,p_2,H,flags");
  std::getline(lines, line);
  CHECK(line.rfind("0.5,", 0) == 0);
  CHECK(line.back() == ',');
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);

  CHECK(transmission_sweep(engine, 1, 0.1, 0.2, 2).size() == 2);
  CHECK_THROWS_AS(transmission_sweep(engine, 1, 0.0, 1.0, 8), Error);
  CHECK_THROWS_AS(transmission_sweep(engine, 1, 1.0, 0.5, 8), Error);
  CHECK_THROWS_AS(transmission_sweep(engine, 1, 0.5, 1.0, 1), Error);
}

TEST_CASE("two-vertex ring transmission range over one period") {
  // n = 2 reduces to sigma = -8z / (z^2 - 9): |sigma|^2 runs over [0.64, 1].
  const auto two = transmission_sweep(ScatteringEngine(two_vertex_ring(2)), 1, 1e-6, 2 * std::numbers::pi, 4097);
  double lo = 1.0, hi = 0.0;
  for (const auto& r : two) {
    lo = std::min(lo, r.probabilities[1]);
    hi = std::max(hi, r.probabilities[1]);
  }
  CHECK(lo == doctest::Approx(0.64).epsilon(1e-9));
  CHECK(hi > 1.0 - 1e-9);
  // Longer rings have full suppression somewhere on the grid.
  for (int n = 3; n <= 5; ++n) {
    const auto rows = transmission_sweep(ScatteringEngine(two_vertex_ring(n)), 1, 1e-6, 2 * std::numbers::pi, 20001);
    lo = 1.0;
    hi = 0.0;
    for (const auto& r : rows) {
      lo = std::min(lo, r.probabilities[1]);
      hi = std::max(hi, r.probabilities[1]);
    }
    CHECK(lo < 1e-6);
    CHECK(hi > 1.0 - 1e-6);
  }
}

TEST_CASE("sweeps flag singular grid points") {
  const auto rows = transmission_sweep(ScatteringEngine(two_vertex_ring(2)), 1, std::numbers::pi,
                                       2 * std::numbers::pi, 2);
  CHECK(rows[1].perturbed);
  std::ostringstream csv;
  write_sweep_csv(csv, rows, 2);
  CHECK(csv.str().find(",perturbed\n") != std::string::npos);
}
