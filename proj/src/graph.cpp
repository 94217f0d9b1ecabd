#include "scatent/graph.hpp"

#include <numeric>
#include <sstream>

namespace scatent {

const char* to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Neumann ? "neumann" : "dirichlet";
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DirichletOnInternalVertex: return "DirichletOnInternalVertex";
    case ErrorKind::NoLeads: return "NoLeads";
    case ErrorKind::BadVertexIds: return "BadVertexIds";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DirichletDegreeMismatch: return "DirichletDegreeMismatch";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::UnknownChannel: return "UnknownChannel";
    case ErrorKind::SingularAfterRetry: return "SingularAfterRetry";
    case ErrorKind::BrokenAssembly: return "BrokenAssembly";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::UnknownCatalogId: return "UnknownCatalogId";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
  std::ostringstream os;
  os << issues.size() << " invariant violation(s)";
  for (const auto& issue : issues) os << "; " << to_string(issue.kind) << ": " << issue.detail;
  return os.str();
}

ErrorKind first_kind(const std::vector<ValidationIssue>& issues) {
  return issues.empty() ? ErrorKind::StructureViolation : issues.front().kind;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(first_kind(issues), join_issues(issues)), issues_(std::move(issues)) {}

std::vector<ValidationIssue> check(const MetricGraph& graph) {
  std::vector<ValidationIssue> issues;
  auto add = [&](ErrorKind kind, std::string detail) {
    issues.push_back({kind, std::move(detail)});
  };

  const int v = graph.num_vertices();
  for (int idx = 0; idx < v; ++idx) {
    if (graph.vertices[idx].id != idx + 1) {
      add(ErrorKind::BadVertexIds, "vertex at position " + std::to_string(idx + 1) + " has id " +
                                       std::to_string(graph.vertices[idx].id) +
                                       "; ids must be 1..v in order");
    }
  }

  bool dangling = false;
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edges[e];
    for (VertexId end : {edge.a, edge.b}) {
      if (!graph.has_vertex(end)) {
        dangling = true;
        add(ErrorKind::DanglingReference,
            "edge " + std::to_string(e) + " references vertex " + std::to_string(end));
      }
    }
    if (edge.a == edge.b) add(ErrorKind::SelfLoop, "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(edge.a));
    if (edge.length_units < 1) {
      add(ErrorKind::NonPositiveLength, "edge " + std::to_string(e) + " has length " +
                                            std::to_string(edge.length_units));
    }
  }
  for (int c = 0; c < graph.num_channels(); ++c) {
    if (!graph.has_vertex(graph.leads[c])) {
      dangling = true;
      add(ErrorKind::DanglingReference,
          "lead " + std::to_string(c + 1) + " references vertex " + std::to_string(graph.leads[c]));
    }
  }
  if (graph.leads.empty()) add(ErrorKind::NoLeads, "graph has no leads");
  if (v == 0) {
    add(ErrorKind::Disconnected, "graph has no vertices");
    return issues;
  }
  if (dangling) return issues;

  DisjointSets sets(v);
  for (const Edge& edge : graph.edges) sets.unite(edge.a - 1, edge.b - 1);
  const int root = sets.find(0);
  for (int idx = 1; idx < v; ++idx) {
    if (sets.find(idx) != root) {
      add(ErrorKind::Disconnected,
          "vertex " + std::to_string(idx + 1) + " is not connected to vertex 1");
      break;
    }
  }

  const auto deg = degrees(graph);
  for (int idx = 0; idx < v; ++idx) {
    if (graph.vertices[idx].bc == BoundaryCondition::Dirichlet && deg[idx] != 1) {
      add(ErrorKind::DirichletOnInternalVertex, "vertex " + std::to_string(idx + 1) +
                                                    " is Dirichlet with degree " +
                                                    std::to_string(deg[idx]));
    }
  }
  return issues;
}

const MetricGraph& validate(const MetricGraph& graph) {
  auto issues = check(graph);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return graph;
}

std::vector<int> degrees(const MetricGraph& graph) {
  std::vector<int> deg(graph.num_vertices(), 0);
  auto bump = [&](VertexId x) {
    if (graph.has_vertex(x)) ++deg[x - 1];
  };
  for (const Edge& edge : graph.edges) {
    bump(edge.a);
    bump(edge.b);
  }
  for (VertexId lead : graph.leads) bump(lead);
  return deg;
}

int degree(const MetricGraph& graph, VertexId v) {
  if (!graph.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  int d = 0;
  for (const Edge& edge : graph.edges) d += (edge.a == v) + (edge.b == v);
  for (VertexId lead : graph.leads) d += (lead == v);
  return d;
}

VertexAmplitudes vertex_amplitudes(BoundaryCondition bc, int d) {
  if (d < 1) throw Error(ErrorKind::ParameterOutOfRange, "vertex degree " + std::to_string(d));
  if (bc == BoundaryCondition::Dirichlet) {
    if (d != 1) {
      throw Error(ErrorKind::DirichletDegreeMismatch,
                  "Dirichlet condition needs degree 1, got " + std::to_string(d));
    }
    return {-1.0, 0.0};
  }
  if (d == 1) return {1.0, 0.0};
  return {2.0 / d - 1.0, 2.0 / d};
}

}  // namespace scatent
