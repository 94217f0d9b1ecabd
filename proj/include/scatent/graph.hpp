#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scatent {

// Vertex ids are 1-based and dense: a graph with v vertices uses ids 1..v.
using VertexId = int;

enum class BoundaryCondition { Neumann, Dirichlet };

const char* to_string(BoundaryCondition bc);

struct Vertex {
  VertexId id = 0;
  BoundaryCondition bc = BoundaryCondition::Neumann;
  bool operator==(const Vertex&) const = default;
};

// Undirected internal edge. Length is an integer multiple of the unit length.
// Parallel edges are distinct entries of the edge list.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  int length_units = 1;
  bool operator==(const Edge&) const = default;
};

// Leads are stored in channel order: channel c (1-based) is leads[c - 1].
struct MetricGraph {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<VertexId> leads;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_channels() const { return static_cast<int>(leads.size()); }

  bool has_vertex(VertexId v) const { return v >= 1 && v <= num_vertices(); }
  BoundaryCondition bc(VertexId v) const { return vertices.at(v - 1).bc; }

  bool operator==(const MetricGraph&) const = default;
};

enum class ErrorKind {
  DanglingReference,
  Disconnected,
  SelfLoop,
  DirichletOnInternalVertex,
  NoLeads,
  BadVertexIds,
  NonPositiveLength,
  UnknownVertex,
  DirichletDegreeMismatch,
  ParameterOutOfRange,
  UnknownChannel,
  SingularAfterRetry,
  BrokenAssembly,
  InvalidDistribution,
  QuadratureNotConverged,
  UnknownCatalogId,
  StructureViolation,
  SingularPoint,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

struct ValidationIssue {
  ErrorKind kind;
  std::string detail;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

// Lists every violated invariant; empty means the graph is valid.
std::vector<ValidationIssue> check(const MetricGraph& graph);

// Returns the graph unchanged if it is valid, throws ValidationError otherwise.
const MetricGraph& validate(const MetricGraph& graph);

// Incident edge-ends plus incident leads.
int degree(const MetricGraph& graph, VertexId v);

std::vector<int> degrees(const MetricGraph& graph);

struct VertexAmplitudes {
  double r = 0.0;
  double t = 0.0;
};

// Neumann: r = 2/d - 1, t = 2/d for d >= 2; a Neumann dead end reflects with
// r = 1 and a Dirichlet dead end with r = -1.
VertexAmplitudes vertex_amplitudes(BoundaryCondition bc, int d);

// ---- parametric families -------------------------------------------------

enum class Family { SingleVertex, Star, Cycle, Wheel, Complete, Fishbone };
enum class LeadMode { TwoLeads, LeadPerVertex, DegreeParameter };

const char* to_string(Family family);

// `n` is the size parameter: vertex count for Star/Cycle/Wheel/Complete, the
// degree d for SingleVertex, and the number of copies i for Fishbone.
struct FamilySpec {
  Family family = Family::Star;
  int n = 3;
  LeadMode lead_mode = LeadMode::TwoLeads;
  BoundaryCondition dead_end_bc = BoundaryCondition::Neumann;
};

MetricGraph expand_family(const FamilySpec& spec);

int min_family_size(Family family);

}  // namespace scatent
