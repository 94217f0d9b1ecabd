#include "scatent/graph.hpp"

#include <numeric>

namespace scatent {

const char* to_string(Family family) {
  switch (family) {
    case Family::SingleVertex: return "single";
    case Family::Star: return "star";
    case Family::Cycle: return "cycle";
    case Family::Wheel: return "wheel";
    case Family::Complete: return "complete";
    case Family::Fishbone: return "fishbone";
  }
  return "unknown";
}

int min_family_size(Family family) {
  switch (family) {
    case Family::SingleVertex: return 1;
    case Family::Star: return 3;
    case Family::Cycle: return 2;
    case Family::Wheel: return 3;
    case Family::Complete: return 2;
    case Family::Fishbone: return 1;
  }
  return 1;
}

namespace {

MetricGraph with_vertices(std::string name, int count) {
  MetricGraph g;
  g.name = std::move(name);
  for (int id = 1; id <= count; ++id) g.vertices.push_back({id, BoundaryCondition::Neumann});
  return g;
}

void attach_leads(MetricGraph& g, LeadMode mode) {
  if (mode == LeadMode::LeadPerVertex) {
    g.leads.resize(g.num_vertices());
    std::iota(g.leads.begin(), g.leads.end(), 1);
  } else {
    g.leads = {1, 2};
  }
}

// Vertices left with a single edge-end and no lead are dead ends.
void mark_dead_ends(MetricGraph& g, BoundaryCondition bc) {
  const auto deg = degrees(g);
  for (int idx = 0; idx < g.num_vertices(); ++idx) {
    if (deg[idx] == 1) g.vertices[idx].bc = bc;
  }
}

std::string family_name(const FamilySpec& spec) {
  std::string name = std::string(to_string(spec.family)) + "-" + std::to_string(spec.n);
  if (spec.family != Family::SingleVertex && spec.family != Family::Fishbone) {
    name += spec.lead_mode == LeadMode::LeadPerVertex ? "-leads-all" : "-leads-2";
  }
  if (spec.dead_end_bc == BoundaryCondition::Dirichlet) name += "-dirichlet";
  return name;
}

}  // namespace

MetricGraph expand_family(const FamilySpec& spec) {
  if (spec.n < min_family_size(spec.family)) {
    throw Error(ErrorKind::ParameterOutOfRange, std::string(to_string(spec.family)) +
                                                    " needs size >= " +
                                                    std::to_string(min_family_size(spec.family)) +
                                                    ", got " + std::to_string(spec.n));
  }
  const bool per_vertex_ok = spec.family == Family::Star || spec.family == Family::Cycle ||
                             spec.family == Family::Wheel || spec.family == Family::Complete;
  if (spec.lead_mode == LeadMode::LeadPerVertex && !per_vertex_ok) {
    throw Error(ErrorKind::ParameterOutOfRange,
                std::string(to_string(spec.family)) + " does not take one lead per vertex");
  }

  const int n = spec.n;
  MetricGraph g;
  switch (spec.family) {
    case Family::SingleVertex: {
      g = with_vertices("", 1);
      g.leads.assign(n, 1);
      break;
    }
    case Family::Star: {
      g = with_vertices("", n);
      for (int j = 2; j <= n; ++j) g.edges.push_back({1, j, 1});
      attach_leads(g, spec.lead_mode);
      break;
    }
    case Family::Cycle: {
      g = with_vertices("", n);
      for (int j = 1; j <= n; ++j) g.edges.push_back({j, j % n + 1, 1});
      attach_leads(g, spec.lead_mode);
      break;
    }
    case Family::Wheel: {
      // Hub 1 with a rim of n - 1 vertices; a two-vertex rim is a single edge.
      g = with_vertices("", n);
      for (int j = 2; j <= n; ++j) g.edges.push_back({1, j, 1});
      const int rim = n - 1;
      if (rim == 2) {
        g.edges.push_back({2, 3, 1});
      } else {
        for (int j = 0; j < rim; ++j) g.edges.push_back({2 + j, 2 + (j + 1) % rim, 1});
      }
      attach_leads(g, spec.lead_mode);
      break;
    }
    case Family::Complete: {
      g = with_vertices("", n);
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) g.edges.push_back({a, b, 1});
      }
      attach_leads(g, spec.lead_mode);
      break;
    }
    case Family::Fishbone: {
      // Spine of n centers 1..n ending in the exit vertex n + 1; every center
      // carries two ribs. Ribs are numbered after the spine.
      g = with_vertices("", 3 * n + 1);
      int rib = n + 2;
      for (int c = 1; c <= n; ++c) {
        g.edges.push_back({c, c + 1, 1});
        g.edges.push_back({c, rib++, 1});
        g.edges.push_back({c, rib++, 1});
      }
      g.leads = {1, n + 1};
      break;
    }
  }
  mark_dead_ends(g, spec.dead_end_bc);
  g.name = family_name(spec);
  return g;
}

}  // namespace scatent
