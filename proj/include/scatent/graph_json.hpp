#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "scatent/graph.hpp"

namespace scatent {

// Graph interchange format:
//   {"name": str, "vertices": [{"id": int, "bc": "neumann"|"dirichlet"}...],
//    "edges": [[a, b, length_units]...], "leads": [vertex...]}
// Unknown keys, duplicate vertex ids and non-integer lengths are ParseErrors.
// The parsed graph is validated before it is returned.
MetricGraph parse_graph_json(std::string_view text);

MetricGraph read_graph_file(const std::filesystem::path& path);

// Canonical serialization: fixed key order, one vertex/edge per line.
std::string to_json(const MetricGraph& graph);

}  // namespace scatent
