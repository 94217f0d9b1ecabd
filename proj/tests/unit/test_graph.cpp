#include <algorithm>

#include "doctest.h"
#include "scatent/graph.hpp"

using namespace scatent;

namespace {

MetricGraph path3() {
  MetricGraph g;
  g.name = "path";
  g.vertices = {{1}, {2}, {3}};
  g.edges = {{1, 2, 1}, {2, 3, 2}};
  g.leads = {1};
  return g;
}

bool has_kind(const std::vector<ValidationIssue>& issues, ErrorKind kind) {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; });
}

MetricGraph fam(Family f, int n, LeadMode mode = LeadMode::TwoLeads,
                BoundaryCondition bc = BoundaryCondition::Neumann) {
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  spec.lead_mode = mode;
  spec.dead_end_bc = bc;
  return expand_family(spec);
}

}  // namespace

TEST_CASE("a well-formed graph passes validation") {
  const MetricGraph g = path3();
  CHECK(check(g).empty());
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("validation reports each broken invariant") {
  SUBCASE("dangling edge end") {
    MetricGraph g = path3();
    g.edges.push_back({3, 7, 1});
    CHECK(has_kind(check(g), ErrorKind::DanglingReference));
  }
  SUBCASE("dangling lead") {
    MetricGraph g = path3();
    g.leads.push_back(9);
    CHECK(has_kind(check(g), ErrorKind::DanglingReference));
  }
  SUBCASE("self loop") {
    MetricGraph g = path3();
    g.edges.push_back({2, 2, 1});
    CHECK(has_kind(check(g), ErrorKind::SelfLoop));
  }
  SUBCASE("disconnected") {
    MetricGraph g = path3();
    g.vertices.push_back({4});
    CHECK(has_kind(check(g), ErrorKind::Disconnected));
  }
  SUBCASE("no leads") {
    MetricGraph g = path3();
    g.leads.clear();
    CHECK(has_kind(check(g), ErrorKind::NoLeads));
  }
  SUBCASE("non-positive length") {
    MetricGraph g = path3();
    g.edges[1].length_units = 0;
    CHECK(has_kind(check(g), ErrorKind::NonPositiveLength));
  }
  SUBCASE("ids out of order") {
    MetricGraph g = path3();
    g.vertices[2].id = 5;
    CHECK(has_kind(check(g), ErrorKind::BadVertexIds));
  }
  SUBCASE("Dirichlet on an internal vertex") {
    MetricGraph g = path3();
    g.vertices[1].bc = BoundaryCondition::Dirichlet;
    CHECK(has_kind(check(g), ErrorKind::DirichletOnInternalVertex));
  }
  SUBCASE("Dirichlet on a dead end is fine") {
    MetricGraph g = path3();
    g.vertices[2].bc = BoundaryCondition::Dirichlet;
    CHECK(check(g).empty());
  }
}

TEST_CASE("validate throws with every issue attached") {
  MetricGraph g = path3();
  g.leads.clear();
  g.edges.push_back({1, 1, 1});
  try {
    validate(g);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.issues().size() == 2);
  }
}

TEST_CASE("degrees count edge ends and leads, parallel edges twice") {
  MetricGraph g;
  g.vertices = {{1}, {2}};
  g.edges = {{1, 2, 1}, {1, 2, 3}};
  g.leads = {1, 2};
  CHECK(degree(g, 1) == 3);
  CHECK(degrees(g) == std::vector<int>{3, 3});
  CHECK_THROWS_AS(degree(g, 3), Error);
}

TEST_CASE("vertex amplitudes") {
  SUBCASE("Neumann degree d") {
    for (int d = 2; d <= 9; ++d) {
      const auto a = vertex_amplitudes(BoundaryCondition::Neumann, d);
      CHECK(a.r == doctest::Approx(2.0 / d - 1.0));
      CHECK(a.t == doctest::Approx(2.0 / d));
      // The vertex scattering matrix is unitary: r^2 + (d-1) t^2 = 1.
      CHECK(a.r * a.r + (d - 1) * a.t * a.t == doctest::Approx(1.0));
    }
  }
  SUBCASE("degree two is transparent") {
    const auto a = vertex_amplitudes(BoundaryCondition::Neumann, 2);
    CHECK(a.r == 0.0);
    CHECK(a.t == 1.0);
  }
  SUBCASE("dead ends") {
    CHECK(vertex_amplitudes(BoundaryCondition::Neumann, 1).r == 1.0);
    CHECK(vertex_amplitudes(BoundaryCondition::Dirichlet, 1).r == -1.0);
    CHECK_THROWS_AS(vertex_amplitudes(BoundaryCondition::Dirichlet, 3), Error);
    CHECK_THROWS_AS(vertex_amplitudes(BoundaryCondition::Neumann, 0), Error);
  }
}

TEST_CASE("family expansion") {
  SUBCASE("single vertex carries d leads") {
    const auto g = fam(Family::SingleVertex, 5);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
    CHECK(g.num_channels() == 5);
    CHECK(degree(g, 1) == 5);
  }
  SUBCASE("star") {
    const auto g = fam(Family::Star, 6);
    CHECK(g.num_vertices() == 6);
    CHECK(g.num_edges() == 5);
    CHECK(g.leads == std::vector<VertexId>{1, 2});
    CHECK(g.name == "star-6-leads-2");
  }
  SUBCASE("cycle with every vertex a lead") {
    const auto g = fam(Family::Cycle, 7, LeadMode::LeadPerVertex);
    CHECK(g.num_edges() == 7);
    CHECK(g.num_channels() == 7);
    for (int d : degrees(g)) CHECK(d == 3);
  }
  SUBCASE("two-cycle is a pair of parallel edges") {
    const auto g = fam(Family::Cycle, 2);
    CHECK(g.num_edges() == 2);
    CHECK(degrees(g) == std::vector<int>{3, 3});
  }
  SUBCASE("wheel") {
    const auto g = fam(Family::Wheel, 7);
    CHECK(g.num_edges() == 12);
    CHECK(degree(g, 1) == 7);
    const auto w3 = fam(Family::Wheel, 3);
    CHECK(w3.num_edges() == 3);
  }
  SUBCASE("complete") {
    const auto g = fam(Family::Complete, 5, LeadMode::LeadPerVertex);
    CHECK(g.num_edges() == 10);
    for (int d : degrees(g)) CHECK(d == 5);
  }
  SUBCASE("fishbone") {
    const auto g = fam(Family::Fishbone, 3, LeadMode::TwoLeads, BoundaryCondition::Dirichlet);
    CHECK(g.num_vertices() == 10);
    CHECK(g.num_edges() == 9);
    CHECK(g.leads == std::vector<VertexId>{1, 4});
    int dirichlet = 0;
    for (const auto& v : g.vertices) dirichlet += v.bc == BoundaryCondition::Dirichlet;
    CHECK(dirichlet == 6);
    CHECK(g.name == "fishbone-3-dirichlet");
  }
  SUBCASE("dead ends of a star take the requested condition") {
    const auto g = fam(Family::Star, 5, LeadMode::TwoLeads, BoundaryCondition::Dirichlet);
    CHECK(g.bc(1) == BoundaryCondition::Neumann);
    CHECK(g.bc(2) == BoundaryCondition::Neumann);
    for (int v = 3; v <= 5; ++v) CHECK(g.bc(v) == BoundaryCondition::Dirichlet);
  }
  SUBCASE("size limits") {
    CHECK_THROWS_AS(fam(Family::Star, 2), Error);
    CHECK_THROWS_AS(fam(Family::Cycle, 1), Error);
    CHECK_THROWS_AS(fam(Family::Wheel, 2), Error);
    CHECK_THROWS_AS(fam(Family::Fishbone, 0), Error);
    CHECK_THROWS_AS(fam(Family::Fishbone, 2, LeadMode::LeadPerVertex), Error);
  }
  SUBCASE("every expansion validates") {
    for (Family f : {Family::Star, Family::Cycle, Family::Wheel, Family::Complete}) {
      for (int n = min_family_size(f); n < 9; ++n) {
        CHECK(check(fam(f, n)).empty());
        CHECK(check(fam(f, n, LeadMode::LeadPerVertex)).empty());
      }
    }
  }
}
