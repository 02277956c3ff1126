#ifndef CELLCALC_JSON_IO_HPP
#define CELLCALC_JSON_IO_HPP

#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cellcalc/algebra.hpp"
#include "cellcalc/bimodcat.hpp"
#include "cellcalc/cells.hpp"
#include "cellcalc/errors.hpp"
#include "cellcalc/families.hpp"
#include "cellcalc/quiver.hpp"
#include "cellcalc/rational.hpp"
#include "cellcalc/tworep.hpp"

namespace cellcalc {

using nlohmann::json;

namespace detail {

inline const json& expect(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string expect_string(const json& j, const char* where) {
  if (!j.is_string()) throw InputError(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

inline Rational coef_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("relation coefficient must be an \"n/d\" string or an integer");
}

}  // namespace detail

struct AlgebraInput {
  Quiver quiver;
  std::vector<Relation> relations;
};

inline AlgebraInput parse_algebra_json(const json& j) {
  if (!j.is_object()) throw InputError("algebra: expected a JSON object");
  AlgebraInput in;
  for (const json& v : detail::expect(j, "vertices", "algebra"))
    in.quiver.vertices.push_back(detail::expect_string(v, "algebra.vertices"));
  if (j.contains("arrows"))
    for (const json& arr : j["arrows"]) {
      Arrow a;
      a.name = detail::expect_string(detail::expect(arr, "name", "arrow"), "arrow.name");
      std::string from = detail::expect_string(detail::expect(arr, "from", "arrow"), "arrow.from");
      std::string to = detail::expect_string(detail::expect(arr, "to", "arrow"), "arrow.to");
      a.from = in.quiver.vertex_index(from);
      a.to = in.quiver.vertex_index(to);
      if (a.from < 0) throw InputError("arrow " + a.name + ": unknown vertex " + from);
      if (a.to < 0) throw InputError("arrow " + a.name + ": unknown vertex " + to);
      in.quiver.arrows.push_back(std::move(a));
    }
  if (j.contains("relations"))
    for (const json& rel : j["relations"]) {
      Relation r;
      if (!rel.is_array()) throw InputError("relation: expected an array of terms");
      for (const json& term : rel) {
        RelationTerm t;
        t.coef = detail::coef_from_json(detail::expect(term, "coef", "relation term"));
        for (const json& name : detail::expect(term, "path", "relation term"))
          t.path.push_back(detail::expect_string(name, "relation path"));
        r.push_back(std::move(t));
      }
      in.relations.push_back(std::move(r));
    }
  in.quiver.validate();
  return in;
}

inline Algebra algebra_from_json(const json& j, int lengthBound = kDefaultLengthBound) {
  AlgebraInput in = parse_algebra_json(j);
  return build_path_algebra(in.quiver, in.relations, lengthBound);
}

inline json algebra_to_json(const Algebra& a) {
  if (!a.hasPresentation)
    throw InputError("algebra has no quiver presentation to serialize");
  json j;
  j["vertices"] = a.quiver.vertices;
  j["arrows"] = json::array();
  for (const Arrow& arr : a.quiver.arrows)
    j["arrows"].push_back({{"name", arr.name},
                           {"from", a.quiver.vertices[arr.from]},
                           {"to", a.quiver.vertices[arr.to]}});
  j["relations"] = json::array();
  for (const Relation& rel : a.relations) {
    json terms = json::array();
    for (const RelationTerm& t : rel)
      terms.push_back({{"coef", rational_str(t.coef)}, {"path", t.path}});
    j["relations"].push_back(std::move(terms));
  }
  return j;
}

inline Graph parse_graph_json(const json& j) {
  if (!j.is_object()) throw InputError("graph: expected a JSON object");
  Graph g;
  for (const json& v : detail::expect(j, "vertices", "graph"))
    g.vertices.push_back(detail::expect_string(v, "graph.vertices"));
  for (const json& e : detail::expect(j, "edges", "graph")) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("graph edge: expected a pair of vertex labels");
    std::string u = detail::expect_string(e[0], "graph edge");
    std::string v = detail::expect_string(e[1], "graph edge");
    int ui = -1, vi = -1;
    for (int x = 0; x < static_cast<int>(g.vertices.size()); ++x) {
      if (g.vertices[x] == u) ui = x;
      if (g.vertices[x] == v) vi = x;
    }
    if (ui < 0) throw InputError("graph edge: unknown vertex " + u);
    if (vi < 0) throw InputError("graph edge: unknown vertex " + v);
    g.edges.push_back({ui, vi});
  }
  return g;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
  return j;
}

// builtin families: "zigzag-star:k", "zigzag:<graph-file>", "an:n", "two-vertex-ab"
inline Algebra builtin_algebra(const std::string& spec, int lengthBound = kDefaultLengthBound) {
  std::string name = spec, arg;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  auto intArg = [&](const char* what) {
    try {
      std::size_t used = 0;
      int k = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return k;
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": expected an integer parameter, got \"" + arg +
                       "\"");
    }
  };
  if (name == "zigzag-star") return zigzag_star(intArg("zigzag-star"), lengthBound);
  if (name == "an") return hereditary_an(intArg("an"), lengthBound);
  if (name == "two-vertex-ab") {
    if (!arg.empty()) throw InputError("two-vertex-ab takes no parameter");
    return two_vertex_ab(lengthBound);
  }
  if (name == "zigzag") {
    if (arg.empty()) throw InputError("zigzag: expected a graph file path");
    return zigzag(parse_graph_json(load_json_file(arg)), lengthBound);
  }
  throw InputError("unknown builtin family: " + spec);
}

inline json subcat_to_json(const Subcat& s) {
  json labels = json::array();
  for (auto [i, j] : s.labels) labels.push_back({i, j});
  return json{{"labels", std::move(labels)}};
}

inline Subcat subcat_from_json(const Algebra& a, const json& j) {
  Subcat s;
  for (const json& lab : detail::expect(j, "labels", "subcat")) {
    if (!lab.is_array() || lab.size() != 2)
      throw InputError("subcat label: expected a pair of vertex indices");
    std::pair<int, int> p{lab[0].get<int>(), lab[1].get<int>()};
    check_label_range(a, p);
    s.labels.insert(p);
  }
  return s;
}

inline json matrix_to_json(const IMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json rep_to_json(const Algebra& a, const DecatRep& rep) {
  json j;
  j["objects"] = rep.objects;
  json mats = json::object();
  for (const auto& [label, mat] : rep.matrices) mats[to_string(a, label)] = matrix_to_json(mat);
  j["matrices"] = std::move(mats);
  return j;
}

inline json eggbox_to_json(const Algebra& a, const CellDecomposition& cd,
                           const std::vector<int>& idempotents,
                           const std::vector<int>& vacuous) {
  std::set<int> idem(idempotents.begin(), idempotents.end());
  std::set<int> vac(vacuous.begin(), vacuous.end());
  json jcells = json::array();
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c) {
    const Eggbox& box = cd.eggboxes[c];
    json rows = json::array();
    for (const auto& gridRow : box.grid) {
      json row = json::array();
      for (const auto& cell : gridRow) {
        std::string entry;
        for (int e : cell) {
          if (!entry.empty()) entry += "+";
          entry += to_string(a, cd.element(e));
        }
        row.push_back(entry.empty() ? "." : entry);
      }
      rows.push_back(std::move(row));
    }
    jcells.push_back({{"rows", std::move(rows)},
                      {"idempotent", idem.count(c) > 0},
                      {"vacuous", vac.count(c) > 0}});
  }
  json jorder = json::array();
  for (auto [from, to] : cd.jOrder) jorder.push_back({from, to});
  return json{{"jcells", std::move(jcells)}, {"jorder", std::move(jorder)}};
}

inline json suite_to_json(const Algebra& a, const SuiteReport& r) {
  json checks = json::array();
  for (const SuiteItem& item : r.items)
    checks.push_back({{"name", item.name}, {"pass", item.pass}, {"details", item.detail}});
  json j;
  json ulabels = json::array(), vlabels = json::array();
  for (int x : r.u) ulabels.push_back(a.vertexNames[x]);
  for (int x : r.v) vlabels.push_back(a.vertexNames[x]);
  j["u"] = std::move(ulabels);
  j["v"] = std::move(vlabels);
  j["checks"] = std::move(checks);
  j["allPass"] = r.allPass;
  j["conclusion"] = r.conclusion;
  return j;
}

}  // namespace cellcalc

#endif
