#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "scatent/graph.hpp"

namespace scatent {

enum class Command { Sweep, Entropy, Family, Reproduce, Validate };

// `--leads`: "all", a count N (leads on vertices 1..N) or a comma list of
// vertex ids. Without the flag a graph keeps its own leads.
struct LeadSelection {
  enum class Kind { Default, All, Count, List } kind = Kind::Default;
  int count = 0;
  std::vector<VertexId> list;
};

LeadSelection parse_leads(std::string_view text);

// `name:N`, `name:N..M`, optionally followed by `:dirichlet`.
// Names: single, star, cycle, wheel, complete, fishbone.
struct FamilyRange {
  Family family = Family::Star;
  int first = 0;
  int last = 0;
  BoundaryCondition dead_end_bc = BoundaryCondition::Neumann;
};

FamilyRange parse_family(std::string_view text);

struct RunConfig {
  Command command = Command::Entropy;
  std::string graph_path;   // either this
  std::string family_spec;  // or this
  std::string target;       // reproduce only
  LeadSelection leads;
  int entrance = 1;
  double tol = 1e-6;
  int samples = 2048;
  double k_min = 1e-6;
  double k_max = 2.0 * std::numbers::pi;
  std::string output;  // empty: standard output
  std::uint64_t seed = 42;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Resolves --graph: an existing file, a file in the catalog directory, or a
// catalog id.
MetricGraph resolve_graph_source(const std::string& source);

// Applies a lead selection to a graph and revalidates it.
MetricGraph with_leads(MetricGraph graph, const LeadSelection& leads);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scatent
