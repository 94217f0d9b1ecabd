#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "scatent/catalog.hpp"
#include "scatent/graph_json.hpp"

using namespace scatent;

namespace {

const char* kMinimal = R"({
  "name": "s12",
  "vertices": [{"id": 1, "bc": "neumann"}],
  "edges": [],
  "leads": [1, 1]
})";

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_graph_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("minimal document parses") {
  const MetricGraph g = parse_graph_json(kMinimal);
  CHECK(g.name == "s12");
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_channels() == 2);
}

TEST_CASE("strict parsing") {
  SUBCASE("zero length") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann"},{"id":2,"bc":"neumann"}],
      "edges":[[1,2,0]],"leads":[1]})") == ErrorKind::ParseError);
  }
  SUBCASE("non-integer length") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann"},{"id":2,"bc":"neumann"}],
      "edges":[[1,2,1.5]],"leads":[1]})") == ErrorKind::ParseError);
  }
  SUBCASE("unknown top-level key") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann"}],"edges":[],"leads":[1],
      "extra":0})") == ErrorKind::ParseError);
  }
  SUBCASE("unknown vertex key") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann","w":1}],"edges":[],
      "leads":[1]})") == ErrorKind::ParseError);
  }
  SUBCASE("duplicate vertex id") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann"},{"id":1,"bc":"neumann"}],
      "edges":[],"leads":[1]})") == ErrorKind::ParseError);
  }
  SUBCASE("bad boundary condition") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"robin"}],"edges":[],
      "leads":[1]})") == ErrorKind::ParseError);
  }
  SUBCASE("missing key") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann"}],"edges":[]})") ==
          ErrorKind::ParseError);
  }
  SUBCASE("structurally invalid graph surfaces as a validation error") {
    CHECK(parse_error_kind(R"({"name":"x","vertices":[{"id":1,"bc":"neumann"},{"id":2,"bc":"neumann"}],
      "edges":[],"leads":[1]})") == ErrorKind::Disconnected);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_graph_json("{\n  \"name\": \"x\",\n  \"vertices\": [,]\n}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("vertices listed out of order are sorted by id") {
  const MetricGraph g = parse_graph_json(R"({"name":"x",
    "vertices":[{"id":2,"bc":"dirichlet"},{"id":1,"bc":"neumann"}],"edges":[[1,2,3]],"leads":[1]})");
  CHECK(g.vertices[0].id == 1);
  CHECK(g.bc(2) == BoundaryCondition::Dirichlet);
}

TEST_CASE("serialization round trip is idempotent") {
  const MetricGraph g = parse_graph_json(R"({"leads":[1,3],"edges":[[1,2,2],[2,3,1],[1,3,4]],
    "vertices":[{"id":3,"bc":"neumann"},{"id":1,"bc":"neumann"},{"id":2,"bc":"neumann"}],"name":"tri"})");
  const std::string once = to_json(g);
  const std::string twice = to_json(parse_graph_json(once));
  CHECK(once == twice);
  CHECK(parse_graph_json(once) == g);
}

TEST_CASE("shipped catalog files equal their generators byte for byte") {
  const auto dir = default_catalog_dir();
  for (const char* id : {"Q", "X", "IQ", "IX", "QQ", "XQ", "IXI", "XX"}) {
    CAPTURE(id);
    CHECK(slurp(dir / (std::string(id) + ".json")) == to_json(chord_ring(id, id)));
  }
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(slurp(dir / ("fig1a-n" + std::to_string(n) + ".json")) == to_json(two_vertex_ring(n)));
  }
}

TEST_CASE("file errors name the file") {
  const auto path = std::filesystem::path(SCATENT_TEST_TMP) / "bad-graph.json";
  std::ofstream(path) << "{\"name\": 3}";
  try {
    read_graph_file(path);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad-graph.json") != std::string::npos);
  }
  CHECK_THROWS_AS(read_graph_file(path.parent_path() / "missing.json"), Error);
}
