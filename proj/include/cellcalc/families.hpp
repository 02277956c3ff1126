#ifndef CELLCALC_FAMILIES_HPP
#define CELLCALC_FAMILIES_HPP

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cellcalc/algebra.hpp"
#include "cellcalc/errors.hpp"
#include "cellcalc/quiver.hpp"

namespace cellcalc {

struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // vertex indices, undirected
};

namespace detail {

inline std::vector<std::vector<int>> graph_adjacency(const Graph& g) {
  const int m = static_cast<int>(g.vertices.size());
  if (m < 2) throw InputError("graph needs at least 2 vertices");
  std::set<std::string> seen(g.vertices.begin(), g.vertices.end());
  if (static_cast<int>(seen.size()) != m) throw InputError("duplicate vertex labels in graph");
  if (g.edges.empty()) throw InputError("graph needs at least one edge");
  std::vector<std::vector<int>> adj(m);
  std::set<std::pair<int, int>> used;
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= m || v < 0 || v >= m) throw InputError("graph edge endpoint out of range");
    if (u == v) throw InputError("graph must be simple: loop at " + g.vertices[u]);
    auto key = std::minmax(u, v);
    if (!used.insert(key).second)
      throw InputError("graph must be simple: repeated edge " + g.vertices[key.first] + "-" +
                       g.vertices[key.second]);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<char> reached(m, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!reached[v]) {
        reached[v] = 1;
        stack.push_back(v);
      }
  }
  for (int v = 0; v < m; ++v)
    if (!reached[v]) throw InputError("graph is not connected (vertex " + g.vertices[v] + ")");
  return adj;
}

// Double quiver of a graph with the zigzag relations: every path through a
// vertex between two distinct neighbors vanishes, and all 2-cycles based at a
// vertex coincide. A lone edge admits no such relation, so its length-three
// paths are killed directly.
inline Algebra zigzag_impl(const Graph& g, const std::function<std::string(int, int)>& name,
                           int lengthBound) {
  std::vector<std::vector<int>> adj = graph_adjacency(g);
  const int m = static_cast<int>(g.vertices.size());
  Quiver q;
  q.vertices = g.vertices;
  for (int u = 0; u < m; ++u)
    for (int v : adj[u]) q.arrows.push_back({name(u, v), u, v});
  std::vector<Relation> rels;
  if (g.edges.size() == 1) {
    auto [u, v] = g.edges[0];
    std::string a = name(u, v), b = name(v, u);
    rels.push_back({{Rational(1), {a, b, a}}});
    rels.push_back({{Rational(1), {b, a, b}}});
  } else {
    for (int j = 0; j < m; ++j)
      for (int i : adj[j])
        for (int k : adj[j])
          if (i != k) rels.push_back({{Rational(1), {name(i, j), name(j, k)}}});
    for (int v = 0; v < m; ++v)
      for (std::size_t s = 1; s < adj[v].size(); ++s) {
        int w0 = adj[v][0], ws = adj[v][s];
        rels.push_back({{Rational(1), {name(v, w0), name(w0, v)}},
                        {Rational(-1), {name(v, ws), name(ws, v)}}});
      }
  }
  return build_path_algebra(q, rels, lengthBound);
}

}  // namespace detail

inline Algebra zigzag(const Graph& g, int lengthBound = kDefaultLengthBound) {
  return detail::zigzag_impl(
      g, [&](int u, int v) { return g.vertices[u] + "->" + g.vertices[v]; }, lengthBound);
}

// star with hub 0 and leaves 1..k; arrows a_t: 0 -> t and b_t: t -> 0
inline Algebra zigzag_star(int k, int lengthBound = kDefaultLengthBound) {
  if (k < 1) throw InputError("star graph needs at least one leaf");
  Graph g;
  for (int v = 0; v <= k; ++v) g.vertices.push_back(std::to_string(v));
  for (int t = 1; t <= k; ++t) g.edges.push_back({0, t});
  auto name = [](int u, int v) {
    return u == 0 ? "a" + std::to_string(v) : "b" + std::to_string(u);
  };
  return detail::zigzag_impl(g, name, lengthBound);
}

// linear quiver 1 -> 2 -> ... -> n with no relations
inline Algebra hereditary_an(int n, int lengthBound = kDefaultLengthBound) {
  if (n < 1) throw InputError("A_n needs at least one vertex");
  Quiver q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (int t = 1; t < n; ++t)
    q.arrows.push_back({"a" + std::to_string(t), t - 1, t});
  return build_path_algebra(q, {}, lengthBound);
}

// quiver 1 <-> 2 with the cycle through vertex 2 killed
inline Algebra two_vertex_ab(int lengthBound = kDefaultLengthBound) {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  std::vector<Relation> rels{{{Rational(1), {"b", "a"}}}};
  return build_path_algebra(q, rels, lengthBound);
}

}  // namespace cellcalc

#endif
