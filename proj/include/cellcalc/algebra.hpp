#ifndef CELLCALC_ALGEBRA_HPP
#define CELLCALC_ALGEBRA_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cellcalc/errors.hpp"
#include "cellcalc/linalg.hpp"
#include "cellcalc/quiver.hpp"
#include "cellcalc/rational.hpp"

namespace cellcalc {

inline constexpr int kDefaultLengthBound = 64;

struct BasisElement {
  int source = -1;  // the element lies in e_target · A · e_source
  int target = -1;
  int length = 0;   // 0 exactly for the vertex idempotents
  std::string name;
};

// Sparse vector over basis indices, ascending, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct Algebra {
  std::vector<std::string> vertexNames;
  std::vector<BasisElement> basis;  // first m entries are e_0..e_{m-1}
  std::vector<SparseVec> table;     // table[x*dim+y] = basis[x]·basis[y]
  std::vector<int> radical;         // basis indices of length >= 1
  IMatrix dims;                     // dims.at(i,j) = dim e_iAe_j

  // original presentation, kept for report echo; absent for corner algebras
  bool hasPresentation = false;
  Quiver quiver;
  std::vector<Relation> relations;

  int m() const { return static_cast<int>(vertexNames.size()); }
  int dim() const { return static_cast<int>(basis.size()); }
  const SparseVec& prod(int x, int y) const {
    return table[static_cast<std::size_t>(x) * basis.size() + y];
  }
};

namespace detail {

inline void add_term(std::map<int, Rational>& acc, int idx, const Rational& c) {
  auto [it, fresh] = acc.try_emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

inline SparseVec to_sparse(const std::map<int, Rational>& acc) {
  return SparseVec(acc.begin(), acc.end());
}

}  // namespace detail

// Product of two sparse elements under the algebra's table.
inline SparseVec multiply(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  std::map<int, Rational> acc;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) {
      Rational c = cx * cy;
      for (const auto& [bz, cz] : a.prod(bx, by)) detail::add_term(acc, bz, c * cz);
    }
  return detail::to_sparse(acc);
}

// ---------------------------------------------------------------------------
// Raw structure-constant construction (used for corner algebras). The radical
// must be supplied explicitly; the table is validated in full.
// ---------------------------------------------------------------------------

inline Algebra make_algebra_from_table(std::vector<std::string> vertexNames,
                                       std::vector<BasisElement> basis,
                                       std::vector<SparseVec> table,
                                       std::vector<int> radical) {
  Algebra a;
  a.vertexNames = std::move(vertexNames);
  a.basis = std::move(basis);
  a.table = std::move(table);
  a.radical = std::move(radical);

  const int m = a.m();
  const int n = a.dim();
  if (m == 0) throw InvalidAlgebra("algebra needs at least one vertex");
  if (n < m) throw InvalidAlgebra("basis smaller than vertex count");
  if (a.table.size() != static_cast<std::size_t>(n) * n)
    throw InvalidAlgebra("multiplication table has wrong size");

  for (int v = 0; v < m; ++v) {
    const BasisElement& b = a.basis[v];
    if (b.source != v || b.target != v || b.length != 0)
      throw InvalidAlgebra("basis element " + std::to_string(v) + " is not the vertex idempotent");
  }
  for (int x = 0; x < n; ++x) {
    const BasisElement& b = a.basis[x];
    if (b.source < 0 || b.source >= m || b.target < 0 || b.target >= m)
      throw InvalidAlgebra("basis grading out of range");
    if (x >= m && b.length < 1) throw InvalidAlgebra("non-idempotent basis element of length 0");
  }

  // grading and unit laws
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const SparseVec& p = a.prod(x, y);
      if (a.basis[x].source != a.basis[y].target) {
        if (!p.empty()) throw InvalidAlgebra("non-composable product is nonzero");
        continue;
      }
      for (const auto& [z, c] : p) {
        if (c == 0) throw InvalidAlgebra("explicit zero coefficient in table");
        if (a.basis[z].target != a.basis[x].target || a.basis[z].source != a.basis[y].source)
          throw InvalidAlgebra("product violates idempotent grading");
      }
    }
  for (int v = 0; v < m; ++v)
    for (int w = 0; w < m; ++w) {
      const SparseVec& p = a.prod(v, w);
      bool ok = (v == w) ? (p.size() == 1 && p[0].first == v && p[0].second == 1) : p.empty();
      if (!ok) throw InvalidAlgebra("vertex idempotents are not orthogonal idempotents");
    }
  for (int x = 0; x < n; ++x) {
    SparseVec unit{{x, Rational(1)}};
    if (a.prod(a.basis[x].target, x) != unit || a.prod(x, a.basis[x].source) != unit)
      throw InvalidAlgebra("vertex idempotents do not act as the identity");
  }

  // associativity on basis triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SparseVec xy = a.prod(x, y);
      for (int z = 0; z < n; ++z) {
        SparseVec lhs = multiply(a, xy, SparseVec{{z, Rational(1)}});
        SparseVec rhs = multiply(a, SparseVec{{x, Rational(1)}}, a.prod(y, z));
        if (lhs != rhs) throw InvalidAlgebra("multiplication table is not associative");
      }
    }

  // radical: exactly the non-idempotent part, a two-sided ideal, nilpotent
  std::vector<int> expected(n - m);
  for (int x = m; x < n; ++x) expected[x - m] = x;
  std::vector<int> rad = a.radical;
  std::sort(rad.begin(), rad.end());
  if (rad != expected)
    throw InvalidAlgebra("radical basis must consist of the non-idempotent basis elements");
  for (int x = 0; x < n; ++x)
    for (int r : a.radical) {
      for (const auto& [z, c] : a.prod(x, r))
        if (z < m) throw InvalidAlgebra("radical is not a left ideal");
      for (const auto& [z, c] : a.prod(r, x))
        if (z < m) throw InvalidAlgebra("radical is not a right ideal");
    }
  std::vector<SparseVec> power;
  for (int r : a.radical) power.push_back({{r, Rational(1)}});
  for (int step = 0; !power.empty(); ++step) {
    if (step > n) throw InvalidAlgebra("radical basis is not nilpotent");
    std::vector<SparseVec> next;
    for (const SparseVec& v : power)
      for (int r : a.radical) {
        SparseVec p = multiply(a, SparseVec{{r, Rational(1)}}, v);
        if (!p.empty()) next.push_back(std::move(p));
      }
    // keep only a spanning subset to bound growth
    if (!next.empty()) {
      QMatrix mat(static_cast<int>(next.size()), n);
      for (int r = 0; r < mat.rows; ++r)
        for (const auto& [z, c] : next[r]) mat.at(r, z) = c;
      int rk = rref(mat);
      std::vector<SparseVec> reduced;
      for (int r = 0; r < rk; ++r) {
        std::map<int, Rational> acc;
        for (int c = 0; c < n; ++c)
          if (mat.at(r, c) != 0) acc.emplace(c, mat.at(r, c));
        reduced.push_back(detail::to_sparse(acc));
      }
      next = std::move(reduced);
    }
    power = std::move(next);
  }

  a.dims = IMatrix(m, m);
  for (const BasisElement& b : a.basis) ++a.dims.at(b.target, b.source);
  for (int v = 0; v < m; ++v)
    if (a.dims.at(v, v) < 1) throw InvalidAlgebra("Cartan diagonal entry below 1");
  return a;
}

// ---------------------------------------------------------------------------
// Path algebra construction: normal-form basis of a quiver with relations.
// ---------------------------------------------------------------------------

namespace detail {

struct ResolvedTerm {
  Rational c;
  std::vector<int> arrows;  // traversal order
};

struct ResolvedRel {
  std::vector<ResolvedTerm> terms;
  int src = -1, tgt = -1;
  int minLen = 0, maxLen = 0;
};

inline std::vector<ResolvedRel> resolve_relations(const Quiver& q,
                                                  const std::vector<Relation>& rels) {
  std::vector<ResolvedRel> out;
  for (const Relation& rel : rels) {
    if (rel.empty()) throw InvalidRelation("relation with no terms");
    std::map<std::vector<int>, Rational> combined;
    int src = -1, tgt = -1;
    for (const RelationTerm& term : rel) {
      if (term.coef == 0) throw InvalidRelation("relation term with zero coefficient");
      if (term.path.empty()) throw InvalidRelation("relation term with empty path");
      std::vector<int> arrows;
      for (const std::string& name : term.path) {
        int id = q.arrow_index(name);
        if (id < 0) throw InvalidRelation("unknown arrow in relation: " + name);
        if (!arrows.empty() && q.arrows[arrows.back()].to != q.arrows[id].from)
          throw InvalidRelation("non-composable path in relation at arrow " + name);
        arrows.push_back(id);
      }
      if (arrows.size() < 2) throw InvalidRelation("relation path shorter than 2");
      int s = q.arrows[arrows.front()].from;
      int t = q.arrows[arrows.back()].to;
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (s != src || t != tgt) {
        throw InvalidRelation("relation mixes paths with different endpoints");
      }
      auto [it, fresh] = combined.try_emplace(arrows, term.coef);
      if (!fresh) it->second += term.coef;
    }
    ResolvedRel r;
    r.src = src;
    r.tgt = tgt;
    for (auto& [arrows, c] : combined) {
      if (c == 0) continue;
      r.terms.push_back({c, arrows});
    }
    if (r.terms.empty()) continue;  // relation cancelled to zero
    r.minLen = r.maxLen = static_cast<int>(r.terms[0].arrows.size());
    for (const ResolvedTerm& t : r.terms) {
      int len = static_cast<int>(t.arrows.size());
      r.minLen = std::min(r.minLen, len);
      r.maxLen = std::max(r.maxLen, len);
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct PathRec {
  std::vector<int> arrows;
  int source = -1, target = -1;
  int length = 0;
};

// Monomial ids ascend in (length, lex-by-arrow-id) order, so id comparison is
// the term order: pivots are the largest monomials of their rows.
struct PathSpace {
  const Quiver& q;
  std::vector<PathRec> paths;
  std::map<std::vector<int>, int> idOf;  // non-trivial paths only
  std::vector<std::vector<int>> level;
  std::vector<std::vector<int>> outArrows;  // arrow ids by source vertex

  using Row = std::map<int, Rational, std::greater<int>>;
  std::map<int, Row> rowOf;  // pivot monomial -> fully reduced row, pivot coeff 1
  std::vector<char> dead;    // normal form is zero
  std::vector<int> alive;    // per level: enumerated and not dead

  static constexpr int kPathBudget = 200000;

  explicit PathSpace(const Quiver& quiver) : q(quiver) {
    int m = static_cast<int>(q.vertices.size());
    outArrows.resize(m);
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
      outArrows[q.arrows[a].from].push_back(a);
    level.resize(1);
    for (int v = 0; v < m; ++v) {
      paths.push_back({{}, v, v, 0});
      level[0].push_back(v);
      dead.push_back(false);
    }
    alive.push_back(m);
  }

  // extends every path of the previous level by every composable arrow
  void build_level(int w) {
    level.resize(w + 1);
    alive.resize(w + 1, 0);
    for (int u : level[w - 1]) {
      for (int arr : outArrows[paths[u].target]) {
        if (static_cast<int>(paths.size()) >= kPathBudget)
          throw NotFiniteDimensional("path budget exceeded while enumerating length " +
                                     std::to_string(w));
        std::vector<int> seq = paths[u].arrows;
        seq.push_back(arr);
        int id = static_cast<int>(paths.size());
        paths.push_back({seq, paths[u].source, q.arrows[arr].to, w});
        idOf.emplace(std::move(seq), id);
        level[w].push_back(id);
        dead.push_back(false);
        ++alive[w];
      }
    }
  }

  void mark_dead(int mono) {
    if (!dead[mono]) {
      dead[mono] = true;
      --alive[paths[mono].length];
    }
  }

  void reduce(Row& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto rit = rowOf.find(it->first);
      if (rit == rowOf.end()) {
        ++it;
        continue;
      }
      int pivot = it->first;
      Rational c = it->second;
      for (const auto& [mono, rc] : rit->second) {
        auto [pos, fresh] = v.try_emplace(mono, 0);
        pos->second -= c * rc;
        if (pos->second == 0) v.erase(pos);
      }
      it = v.upper_bound(pivot);  // entries above the pivot are untouched
    }
  }

  // returns false when the row reduces to zero
  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    Rational lead = v.begin()->second;
    if (lead != 1)
      for (auto& [mono, c] : v) c /= lead;
    for (auto& [otherPivot, row] : rowOf) {
      auto f = row.find(pivot);
      if (f == row.end()) continue;
      Rational c = f->second;
      for (const auto& [mono, rc] : v) {
        auto [pos, fresh] = row.try_emplace(mono, 0);
        pos->second -= c * rc;
        if (pos->second == 0) row.erase(pos);
      }
      if (row.size() == 1) mark_dead(otherPivot);
    }
    if (v.size() == 1) mark_dead(pivot);
    rowOf.emplace(pivot, std::move(v));
    return true;
  }

  bool is_zero(int mono) const { return dead[mono]; }

  void reset_rows() {
    rowOf.clear();
    std::fill(dead.begin(), dead.end(), false);
    for (std::size_t l = 0; l < level.size(); ++l)
      alive[l] = static_cast<int>(level[l].size());
  }
};

}  // namespace detail

inline Algebra build_path_algebra(const Quiver& q, const std::vector<Relation>& relations,
                                  int lengthBound = kDefaultLengthBound) {
  q.validate();
  if (lengthBound < 1) throw InputError("length bound must be positive");
  std::vector<detail::ResolvedRel> rels = detail::resolve_relations(q, relations);
  bool homogeneous = true;
  for (const auto& r : rels)
    if (r.minLen != r.maxLen) homogeneous = false;

  detail::PathSpace P(q);
  int deathLevel = -1;

  P.build_level(1);
  if (P.level[1].empty()) {
    deathLevel = 1;
  } else if (homogeneous) {
    // The ideal is graded by path length: padded relations of total length W
    // are exactly its degree-W stratum, so each window settles for good.
    for (int w = 2; w <= lengthBound && deathLevel < 0; ++w) {
      P.build_level(w);
      for (const auto& r : rels) {
        int L = r.minLen;
        if (L > w) continue;
        for (int qlen = 0; qlen + L <= w; ++qlen) {
          int plen = w - L - qlen;
          for (int qp : P.level[qlen]) {
            if (P.paths[qp].target != r.src) continue;
            for (int pp : P.level[plen]) {
              if (P.paths[pp].source != r.tgt) continue;
              detail::PathSpace::Row v;
              for (const auto& t : r.terms) {
                std::vector<int> seq = P.paths[qp].arrows;
                seq.insert(seq.end(), t.arrows.begin(), t.arrows.end());
                seq.insert(seq.end(), P.paths[pp].arrows.begin(), P.paths[pp].arrows.end());
                auto [it, fresh] = v.try_emplace(P.idOf.at(seq), t.c);
                if (!fresh) {
                  it->second += t.c;
                  if (it->second == 0) v.erase(it);
                }
              }
              P.insert(std::move(v));
            }
          }
        }
      }
      if (P.alive[w] == 0) deathLevel = w;
    }
  } else {
    // Mixed-length relations. First certify a vanished stratum using only
    // paddings whose terms all fit in the window, so every inserted row is a
    // genuine ideal element and a fully dead stratum really means J^l lies in
    // the ideal. Terminates for admissible ideals, which the input contract
    // assumes.
    auto padded_row = [&](const detail::ResolvedRel& r, int qp, int pp, int cutoff) {
      detail::PathSpace::Row v;
      int qlen = P.paths[qp].length, plen = P.paths[pp].length;
      for (const auto& t : r.terms) {
        if (qlen + static_cast<int>(t.arrows.size()) + plen >= cutoff) continue;
        std::vector<int> seq = P.paths[qp].arrows;
        seq.insert(seq.end(), t.arrows.begin(), t.arrows.end());
        seq.insert(seq.end(), P.paths[pp].arrows.begin(), P.paths[pp].arrows.end());
        auto [it, fresh] = v.try_emplace(P.idOf.at(seq), t.c);
        if (!fresh) {
          it->second += t.c;
          if (it->second == 0) v.erase(it);
        }
      }
      return v;
    };
    for (int w = 2; w <= lengthBound && deathLevel < 0; ++w) {
      P.build_level(w);
      P.reset_rows();
      for (const auto& r : rels)
        for (int qlen = 0; qlen + r.maxLen <= w; ++qlen)
          for (int plen = 0; qlen + r.maxLen + plen <= w; ++plen)
            for (int qp : P.level[qlen]) {
              if (P.paths[qp].target != r.src) continue;
              for (int pp : P.level[plen]) {
                if (P.paths[pp].source != r.tgt) continue;
                detail::PathSpace::Row v = padded_row(r, qp, pp, w + 1);
                if (!v.empty()) P.insert(std::move(v));
              }
            }
      for (int l = 2; l <= w && deathLevel < 0; ++l)
        if (P.alive[l] == 0) deathLevel = l;
    }
    if (deathLevel >= 0) {
      // Exact rebuild below the dead stratum: terms of length >= deathLevel
      // are themselves in the ideal, so dropping them keeps rows inside it,
      // and every ideal element truncates to a combination of such rows.
      P.reset_rows();
      for (const auto& r : rels)
        for (int qlen = 0; qlen + r.minLen < deathLevel; ++qlen)
          for (int plen = 0; qlen + r.minLen + plen < deathLevel; ++plen)
            for (int qp : P.level[qlen]) {
              if (P.paths[qp].target != r.src) continue;
              for (int pp : P.level[plen]) {
                if (P.paths[pp].source != r.tgt) continue;
                detail::PathSpace::Row v = padded_row(r, qp, pp, deathLevel);
                if (!v.empty()) P.insert(std::move(v));
              }
            }
    }
  }

  if (deathLevel < 0)
    throw NotFiniteDimensional("no path-length stratum vanished within bound " +
                               std::to_string(lengthBound) +
                               " (algebra infinite-dimensional or ideal not admissible)");

  // basis = monomials that are not pivots of the ideal span
  const int n0 = static_cast<int>(P.paths.size());
  std::vector<int> basisOf(n0, -1);
  Algebra a;
  a.vertexNames = q.vertices;
  for (int mono = 0; mono < n0; ++mono) {
    if (P.paths[mono].length >= deathLevel) continue;
    if (P.rowOf.count(mono)) continue;
    const detail::PathRec& p = P.paths[mono];
    std::string name;
    if (p.length == 0) {
      name = "e_" + q.vertices[p.source];
    } else {
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!name.empty()) name += "*";
        name += q.arrows[*it].name;
      }
    }
    basisOf[mono] = a.dim();
    a.basis.push_back({p.source, p.target, p.length, name});
  }

  auto normal_form = [&](int mono) {
    SparseVec out;
    auto rit = P.rowOf.find(mono);
    if (rit == P.rowOf.end()) {
      out.push_back({basisOf[mono], Rational(1)});
      return out;
    }
    std::map<int, Rational> acc;
    for (const auto& [m2, c] : rit->second)
      if (m2 != mono) acc.emplace(basisOf[m2], -c);
    return detail::to_sparse(acc);
  };

  const int n = a.dim();
  a.table.assign(static_cast<std::size_t>(n) * n, {});
  std::vector<int> monoOf(n);
  for (int mono = 0; mono < n0; ++mono)
    if (basisOf[mono] >= 0) monoOf[basisOf[mono]] = mono;
  for (int x = 0; x < n; ++x) {
    const detail::PathRec& px = P.paths[monoOf[x]];
    for (int y = 0; y < n; ++y) {
      const detail::PathRec& py = P.paths[monoOf[y]];
      if (py.target != px.source) continue;
      int len = px.length + py.length;
      SparseVec value;
      if (len == 0) {
        value = {{x, Rational(1)}};
      } else if (len >= deathLevel) {
        // J^deathLevel lies inside the ideal
      } else {
        std::vector<int> seq = py.arrows;
        seq.insert(seq.end(), px.arrows.begin(), px.arrows.end());
        int mono = (len == px.length && py.length == 0) ? monoOf[x]
                  : (len == py.length && px.length == 0) ? monoOf[y]
                                                         : P.idOf.at(seq);
        if (!P.is_zero(mono)) value = normal_form(mono);
      }
      a.table[static_cast<std::size_t>(x) * n + y] = std::move(value);
    }
  }

  for (int x = a.m(); x < n; ++x) a.radical.push_back(x);
  a.dims = IMatrix(a.m(), a.m());
  for (const BasisElement& b : a.basis) ++a.dims.at(b.target, b.source);
  a.hasPresentation = true;
  a.quiver = q;
  a.relations = relations;
  return a;
}

// ---------------------------------------------------------------------------
// Module-theoretic analysis.
// ---------------------------------------------------------------------------

inline void check_vertex_range(const Algebra& a, int v, const char* what) {
  if (v < 0 || v >= a.m())
    throw SubsetOutOfRange(std::string(what) + " index " + std::to_string(v) + " out of range");
}

// validated sorted duplicate-free copy of a vertex subset
inline std::vector<int> normalize_subset(const Algebra& a, const std::vector<int>& u,
                                         bool allowEmpty = false) {
  if (u.empty() && !allowEmpty) throw SubsetOutOfRange("vertex subset must be non-empty");
  std::vector<int> s = u;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) check_vertex_range(a, v, "vertex");
  return s;
}

// dimension vector, graded by target vertex, of {x in Ae_j : rad·x = 0}
inline std::vector<long long> socle_dimvec(const Algebra& a, int j) {
  check_vertex_range(a, j, "vertex");
  const int n = a.dim();
  std::vector<long long> out(a.m(), 0);
  for (int i = 0; i < a.m(); ++i) {
    std::vector<int> domain;
    for (int b = 0; b < n; ++b)
      if (a.basis[b].source == j && a.basis[b].target == i) domain.push_back(b);
    if (domain.empty()) continue;
    QMatrix mat(static_cast<int>(a.radical.size()) * n, static_cast<int>(domain.size()));
    for (int r = 0; r < static_cast<int>(a.radical.size()); ++r)
      for (int c = 0; c < static_cast<int>(domain.size()); ++c)
        for (const auto& [z, coef] : a.prod(a.radical[r], domain[c]))
          mat.at(r * n + z, c) = coef;
    out[i] = static_cast<long long>(domain.size()) - rank(std::move(mat));
  }
  return out;
}

// Ae_j isomorphic to the dual of e_iA: simple socle S_i plus matching dimension
inline bool proj_inj_match(const Algebra& a, int i, int j) {
  check_vertex_range(a, i, "vertex");
  check_vertex_range(a, j, "vertex");
  long long dimAej = 0, dimEiA = 0;
  for (int l = 0; l < a.m(); ++l) {
    dimAej += a.dims.at(l, j);
    dimEiA += a.dims.at(i, l);
  }
  if (dimAej != dimEiA) return false;
  std::vector<long long> soc = socle_dimvec(a, j);
  for (int l = 0; l < a.m(); ++l)
    if (soc[l] != (l == i ? 1 : 0)) return false;
  return true;
}

// partial map j -> i with Ae_j isomorphic to (e_iA)^*
inline std::map<int, int> nakayama_partial(const Algebra& a) {
  std::map<int, int> pairs;
  for (int j = 0; j < a.m(); ++j)
    for (int i = 0; i < a.m(); ++i)
      if (proj_inj_match(a, i, j)) {
        pairs[j] = i;
        break;
      }
  return pairs;
}

inline bool is_self_injective(const Algebra& a) {
  std::map<int, int> p = nakayama_partial(a);
  if (static_cast<int>(p.size()) != a.m()) return false;
  std::set<int> image;
  for (const auto& [j, i] : p) image.insert(i);
  return static_cast<int>(image.size()) == a.m();
}

inline bool is_weakly_symmetric(const Algebra& a) {
  std::map<int, int> p = nakayama_partial(a);
  if (static_cast<int>(p.size()) != a.m()) return false;
  for (const auto& [j, i] : p)
    if (i != j) return false;
  return true;
}

struct CoreCheck {
  bool ok = false;
  int witness = -1;  // an i in U with no matching j in U, when !ok
};

inline CoreCheck is_core(const Algebra& a, const std::vector<int>& u) {
  std::vector<int> s = normalize_subset(a, u);
  for (int i : s) {
    bool matched = false;
    for (int j : s)
      if (proj_inj_match(a, i, j)) {
        matched = true;
        break;
      }
    if (!matched) return {false, i};
  }
  return {true, -1};
}

inline std::vector<std::vector<int>> enumerate_cores(const Algebra& a, int maxVertices = 16) {
  const int m = a.m();
  if (m > maxVertices)
    throw SubsetOutOfRange("core enumeration limited to " + std::to_string(maxVertices) +
                           " vertices");
  std::vector<std::vector<char>> match(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) match[i][j] = proj_inj_match(a, i, j);
  std::vector<std::vector<int>> cores;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      bool matched = false;
      for (int j = 0; j < m && !matched; ++j)
        if ((mask & (1u << j)) && match[i][j]) matched = true;
      ok = matched;
    }
    if (!ok) continue;
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) members.push_back(i);
    cores.push_back(std::move(members));
  }
  std::sort(cores.begin(), cores.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return cores;
}

inline Algebra corner_algebra(const Algebra& a, const std::vector<int>& u) {
  std::vector<int> s = normalize_subset(a, u);
  std::set<int> uset(s.begin(), s.end());
  std::vector<int> keep;
  std::vector<int> newIndex(a.dim(), -1);
  for (int b = 0; b < a.dim(); ++b)
    if (uset.count(a.basis[b].source) && uset.count(a.basis[b].target)) {
      newIndex[b] = static_cast<int>(keep.size());
      keep.push_back(b);
    }
  std::vector<int> vertexPos(a.m(), -1);
  for (int k = 0; k < static_cast<int>(s.size()); ++k) vertexPos[s[k]] = k;

  std::vector<std::string> names;
  for (int v : s) names.push_back(a.vertexNames[v]);
  std::vector<BasisElement> basis;
  for (int b : keep) {
    BasisElement e = a.basis[b];
    e.source = vertexPos[e.source];
    e.target = vertexPos[e.target];
    basis.push_back(std::move(e));
  }
  const int n = static_cast<int>(keep.size());
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SparseVec v;
      for (const auto& [z, c] : a.prod(keep[x], keep[y])) {
        if (newIndex[z] < 0)
          throw InvalidAlgebra("corner product escapes the corner");
        v.push_back({newIndex[z], c});
      }
      std::sort(v.begin(), v.end());
      table[static_cast<std::size_t>(x) * n + y] = std::move(v);
    }
  std::vector<int> radical;
  for (int x = static_cast<int>(s.size()); x < n; ++x) radical.push_back(x);
  return make_algebra_from_table(std::move(names), std::move(basis), std::move(table),
                                 std::move(radical));
}

// dim rad^k / rad^(k+1) for k = 1, 2, ... until the power vanishes
inline std::vector<int> radical_layer_dims(const Algebra& a) {
  const int n = a.dim();
  std::vector<SparseVec> power;
  for (int r : a.radical) power.push_back({{r, Rational(1)}});
  std::vector<int> ranks;
  while (!power.empty()) {
    QMatrix mat(static_cast<int>(power.size()), n);
    for (int r = 0; r < mat.rows; ++r)
      for (const auto& [z, c] : power[r]) mat.at(r, z) = c;
    int rk = rref(mat);
    if (rk == 0) break;
    ranks.push_back(rk);
    std::vector<SparseVec> basisVecs;
    for (int r = 0; r < rk; ++r) {
      std::map<int, Rational> acc;
      for (int c = 0; c < n; ++c)
        if (mat.at(r, c) != 0) acc.emplace(c, mat.at(r, c));
      basisVecs.push_back(detail::to_sparse(acc));
    }
    std::vector<SparseVec> next;
    for (const SparseVec& v : basisVecs)
      for (int r : a.radical) {
        SparseVec p = multiply(a, SparseVec{{r, Rational(1)}}, v);
        if (!p.empty()) next.push_back(std::move(p));
      }
    power = std::move(next);
  }
  std::vector<int> layers;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    int below = (k + 1 < ranks.size()) ? ranks[k + 1] : 0;
    layers.push_back(ranks[k] - below);
  }
  return layers;
}

}  // namespace cellcalc

#endif
