#ifndef CELLCALC_QUIVER_HPP
#define CELLCALC_QUIVER_HPP

#include <set>
#include <string>
#include <vector>

#include "cellcalc/errors.hpp"
#include "cellcalc/rational.hpp"

namespace cellcalc {

struct Arrow {
  std::string name;
  int from = -1;
  int to = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& label) const {
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
      if (vertices[v] == label) return v;
    return -1;
  }

  int arrow_index(const std::string& name) const {
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
      if (arrows[a].name == name) return a;
    return -1;
  }

  void validate() const {
    if (vertices.empty()) throw InputError("quiver has no vertices");
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw InputError("duplicate vertex labels");
    std::set<std::string> anames;
    int m = static_cast<int>(vertices.size());
    for (const Arrow& a : arrows) {
      if (a.name.empty()) throw InputError("arrow with empty name");
      if (!anames.insert(a.name).second) throw InputError("duplicate arrow name: " + a.name);
      if (a.from < 0 || a.from >= m || a.to < 0 || a.to >= m)
        throw InputError("arrow endpoint out of range: " + a.name);
    }
  }
};

// One summand of a relation: coefficient times a path, arrows listed in
// traversal order (first arrow traversed first).
struct RelationTerm {
  Rational coef;
  std::vector<std::string> path;
};

using Relation = std::vector<RelationTerm>;

}  // namespace cellcalc

#endif
