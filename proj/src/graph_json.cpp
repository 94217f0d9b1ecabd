#include "scatent/graph_json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace scatent {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, field + ": " + what);
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) fail(where, "unknown key \"" + item.key() + "\"");
  }
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected an integer, got " + value.dump());
  const auto wide = value.get<long long>();
  if (wide < -(1LL << 31) || wide > (1LL << 31) - 1) fail(field, "integer out of range");
  return static_cast<int>(wide);
}

}  // namespace

MetricGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(line_col(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!doc.is_object()) fail("$", "top level must be an object");
  reject_unknown_keys(doc, {"name", "vertices", "edges", "leads"}, "$");

  MetricGraph g;
  const json& name = require(doc, "name", "$");
  if (!name.is_string()) fail("name", "expected a string");
  g.name = name.get<std::string>();

  const json& vertices = require(doc, "vertices", "$");
  if (!vertices.is_array()) fail("vertices", "expected an array");
  std::set<int> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& entry = vertices[i];
    if (!entry.is_object()) fail(where, "expected an object");
    reject_unknown_keys(entry, {"id", "bc"}, where);
    Vertex vertex;
    vertex.id = as_int(require(entry, "id", where), where + ".id");
    if (!seen.insert(vertex.id).second) fail(where + ".id", "duplicate vertex id " + std::to_string(vertex.id));
    const json& bc = require(entry, "bc", where);
    if (bc == "neumann") {
      vertex.bc = BoundaryCondition::Neumann;
    } else if (bc == "dirichlet") {
      vertex.bc = BoundaryCondition::Dirichlet;
    } else {
      fail(where + ".bc", "expected \"neumann\" or \"dirichlet\", got " + bc.dump());
    }
    g.vertices.push_back(vertex);
  }

  const json& edges = require(doc, "edges", "$");
  if (!edges.is_array()) fail("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& entry = edges[i];
    if (!entry.is_array() || entry.size() != 3) fail(where, "expected [endpoint, endpoint, length_units]");
    Edge edge{as_int(entry[0], where + "[0]"), as_int(entry[1], where + "[1]"),
              as_int(entry[2], where + "[2]")};
    if (edge.length_units < 1) {
      fail(where + "[2]", "length_units must be >= 1, got " + std::to_string(edge.length_units));
    }
    g.edges.push_back(edge);
  }

  const json& leads = require(doc, "leads", "$");
  if (!leads.is_array()) fail("leads", "expected an array");
  for (std::size_t i = 0; i < leads.size(); ++i) {
    g.leads.push_back(as_int(leads[i], "leads[" + std::to_string(i) + "]"));
  }

  // Vertices may be listed in any order in the file; the model keeps them by id.
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
  validate(g);
  return g;
}

MetricGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph_json(buffer.str());
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.detail());
  }
}

std::string to_json(const MetricGraph& graph) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(graph.name).dump() << ",\n  \"vertices\": [";
  for (int i = 0; i < graph.num_vertices(); ++i) {
    const Vertex& v = graph.vertices[i];
    os << (i ? ",\n    " : "\n    ") << "{\"id\": " << v.id << ", \"bc\": \"" << to_string(v.bc)
       << "\"}";
  }
  os << (graph.vertices.empty() ? "" : "\n  ") << "],\n  \"edges\": [";
  for (int i = 0; i < graph.num_edges(); ++i) {
    const Edge& e = graph.edges[i];
    os << (i ? ",\n    " : "\n    ") << '[' << e.a << ", " << e.b << ", " << e.length_units << ']';
  }
  os << (graph.edges.empty() ? "" : "\n  ") << "],\n  \"leads\": [";
  for (int i = 0; i < graph.num_channels(); ++i) os << (i ? ", " : "") << graph.leads[i];
  os << "]\n}\n";
  return os.str();
}

}  // namespace scatent
