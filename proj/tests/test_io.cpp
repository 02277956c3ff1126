#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cellcalc/errors.hpp"
#include "cellcalc/families.hpp"
#include "cellcalc/json_io.hpp"

using namespace cellcalc;

namespace {

json two_vertex_json() {
  return json::parse(R"({
    "vertices": ["1", "2"],
    "arrows": [
      {"name": "a", "from": "1", "to": "2"},
      {"name": "b", "from": "2", "to": "1"}
    ],
    "relations": [[{"coef": 1, "path": ["b", "a"]}]]
  })");
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("cellcalc-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("algebra JSON parsing") {
  Algebra a = algebra_from_json(two_vertex_json());
  CHECK(a.dim() == 5);
  CHECK(a.vertexNames == std::vector<std::string>{"1", "2"});
  CHECK(a.dims.at(0, 0) == 2);
  CHECK(a.dims.at(1, 1) == 1);
}

TEST_CASE("algebra JSON round-trips through serialization") {
  Algebra a = two_vertex_ab();
  json echoed = algebra_to_json(a);
  Algebra b = algebra_from_json(echoed);
  CHECK(b.dim() == a.dim());
  CHECK(b.dims == a.dims);
  CHECK(b.table == a.table);

  Algebra z = zigzag_star(2);
  Algebra z2 = algebra_from_json(algebra_to_json(z));
  CHECK(z2.dim() == z.dim());
  CHECK(z2.dims == z.dims);
  CHECK(enumerate_cores(z2) == enumerate_cores(z));

  Algebra corner = corner_algebra(z, {0, 1});
  CHECK_THROWS_AS(algebra_to_json(corner), InputError);
}

TEST_CASE("relation coefficients accept fractions and integers") {
  json j = two_vertex_json();
  j["relations"] = json::array();
  j["relations"].push_back(json::array());
  j["relations"][0].push_back({{"coef", "1/2"}, {"path", {"b", "a"}}});
  Algebra a = algebra_from_json(j);
  CHECK(a.dim() == 5);

  j["relations"][0][0]["coef"] = "1/0";
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
  j["relations"][0][0]["coef"] = json::array();
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
}

TEST_CASE("algebra JSON rejects malformed input") {
  json noVertices = json::parse(R"({"arrows": []})");
  CHECK_THROWS_AS(parse_algebra_json(noVertices), InputError);

  json j = two_vertex_json();
  j["arrows"][0]["from"] = "9";
  CHECK_THROWS_AS(parse_algebra_json(j), InputError);

  j = two_vertex_json();
  j["arrows"][0].erase("name");
  CHECK_THROWS_AS(parse_algebra_json(j), InputError);

  j = two_vertex_json();
  j["relations"][0][0].erase("path");
  CHECK_THROWS_AS(parse_algebra_json(j), InputError);

  CHECK_THROWS_AS(parse_algebra_json(json::array()), InputError);

  j = two_vertex_json();
  j["vertices"].push_back("1");
  CHECK_THROWS_AS(parse_algebra_json(j), InputError);
}

TEST_CASE("graph JSON parsing") {
  json g = json::parse(R"({"vertices": ["x", "y"], "edges": [["x", "y"]]})");
  Graph graph = parse_graph_json(g);
  CHECK(graph.vertices == std::vector<std::string>{"x", "y"});
  CHECK(graph.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(zigzag(graph).dim() == 6);

  g["edges"][0][1] = "z";
  CHECK_THROWS_AS(parse_graph_json(g), InputError);
  g["edges"][0] = json::array({"x"});
  CHECK_THROWS_AS(parse_graph_json(g), InputError);
  CHECK_THROWS_AS(parse_graph_json(json::parse(R"({"vertices": []})")), InputError);
}

TEST_CASE("builtin algebra registry") {
  CHECK(builtin_algebra("zigzag-star:2").dim() == 10);
  CHECK(builtin_algebra("zigzag-star:3").dim() == 14);
  CHECK(builtin_algebra("an:3").dim() == 6);
  CHECK(builtin_algebra("two-vertex-ab").dim() == 5);

  TempFile graph(R"({"vertices": ["p", "q", "r"], "edges": [["p", "q"], ["q", "r"]]})");
  CHECK(builtin_algebra("zigzag:" + graph.path.string()).dim() == 10);

  CHECK_THROWS_AS(builtin_algebra("unknown"), InputError);
  CHECK_THROWS_AS(builtin_algebra("zigzag-star:x"), InputError);
  CHECK_THROWS_AS(builtin_algebra("zigzag-star:"), InputError);
  CHECK_THROWS_AS(builtin_algebra("an:0"), InputError);
  CHECK_THROWS_AS(builtin_algebra("two-vertex-ab:3"), InputError);
  CHECK_THROWS_AS(builtin_algebra("zigzag:/nonexistent/file.json"), InputError);
}

TEST_CASE("file loading errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
  TempFile bad("{not json");
  CHECK_THROWS_AS(load_json_file(bad.path.string()), InputError);
  TempFile good(R"({"vertices": ["1"]})");
  CHECK(load_json_file(good.path.string()).contains("vertices"));
}

TEST_CASE("subcat JSON round-trip") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {0, 1}, {0, 1, 2});
  json j = subcat_to_json(s);
  REQUIRE(j.contains("labels"));
  CHECK(j["labels"].size() == 6);
  CHECK(subcat_from_json(z, j) == s);

  json bad = json{{"labels", json::array({json::array({0, 7})})}};
  CHECK_THROWS_AS(subcat_from_json(z, bad), SubsetOutOfRange);
  CHECK_THROWS_AS(subcat_from_json(z, json::object()), InputError);
}

TEST_CASE("representation JSON shape") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {1, 0}, {1, 0, 2});
  json j = rep_to_json(z, cell_rep(z, s, 0));
  CHECK(j["objects"] == json::array({"0", "1"}));
  REQUIRE(j["matrices"].contains("Id"));
  REQUIRE(j["matrices"].contains("F(1,0)"));
  CHECK(j["matrices"]["F(1,0)"] == json::array({json::array({0, 0}), json::array({2, 1})}));
}

TEST_CASE("eggbox JSON shape") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {1}, {1, 2});
  CellDecomposition cd = cell_decomposition(z, s);
  json j = eggbox_to_json(z, cd, idempotent_jcells(z, s, cd), vacuous_cells(z, s, cd));
  REQUIRE(j.contains("jcells"));
  REQUIRE(j.contains("jorder"));
  REQUIRE(j["jcells"].size() == 3);
  CHECK(j["jcells"][0]["vacuous"] == true);
  CHECK(j["jcells"][0]["idempotent"] == false);
  CHECK(j["jcells"][0]["rows"] == json::array({json::array({"F(1,2)"})}));
  CHECK(j["jcells"][2]["rows"] == json::array({json::array({"Id"})}));
  CHECK(j["jorder"] == json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("suite JSON shape") {
  Algebra z = zigzag_star(2);
  json j = suite_to_json(z, theorem_consequence_suite(z, {0}, {0, 1, 2}));
  CHECK(j["allPass"] == true);
  CHECK(j["u"] == json::array({"0"}));
  CHECK(j["v"] == json::array({"0", "1", "2"}));
  REQUIRE(j["checks"].size() == 7);
  for (const json& item : j["checks"]) {
    REQUIRE(item.contains("name"));
    REQUIRE(item.contains("pass"));
    REQUIRE(item.contains("details"));
  }
  CHECK(j["conclusion"] == "2 equivalence classes of simple transitive 2-representations");
}
