#ifndef CELLCALC_TWOREP_HPP
#define CELLCALC_TWOREP_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cellcalc/algebra.hpp"
#include "cellcalc/bimodcat.hpp"
#include "cellcalc/cells.hpp"
#include "cellcalc/errors.hpp"
#include "cellcalc/linalg.hpp"

namespace cellcalc {

inline constexpr int kTrivialColumn = -1;
inline constexpr int kPermutationCap = 10;

struct DecatRep {
  std::vector<std::string> objects;
  std::map<MorLabel, IMatrix> matrices;

  const IMatrix& matrix(const MorLabel& x) const {
    auto it = matrices.find(x);
    if (it == matrices.end())
      throw InputError("representation has no matrix for a required label");
    return it->second;
  }
};

// Action matrices of the cell 2-representation attached to column j0 of a
// U-superdiagonal label set: matrix(F(i,j)) is supported on row i with
// entries dims[j][k] over k in U. The trivial column marker yields the
// rank-one representation killing every F-label.
inline DecatRep cell_rep(const Algebra& a, const Subcat& s, int j0) {
  SubcatShape shape = classify(a, s);
  if (!shape.superdiagonal)
    throw NotSuperdiagonal("cell representations require a superdiagonal label set");
  const std::vector<int>& u = shape.NL;
  DecatRep rep;
  if (j0 == kTrivialColumn) {
    rep.objects.push_back("triv");
    rep.matrices[MorLabel::id()] = IMatrix::identity(1);
    for (auto [i, j] : s.labels) rep.matrices[MorLabel::f(i, j)] = IMatrix(1, 1);
    return rep;
  }
  check_vertex_range(a, j0, "column");
  if (!std::binary_search(shape.NR.begin(), shape.NR.end(), j0))
    throw ColumnNotPresent("column " + a.vertexNames[j0] + " does not occur in the label set");
  const int n = static_cast<int>(u.size());
  std::vector<int> pos(a.m(), -1);
  for (int k = 0; k < n; ++k) {
    pos[u[k]] = k;
    rep.objects.push_back(a.vertexNames[u[k]]);
  }
  rep.matrices[MorLabel::id()] = IMatrix::identity(n);
  for (auto [i, j] : s.labels) {
    IMatrix mat(n, n);
    for (int k = 0; k < n; ++k) mat.at(pos[i], k) = a.dims.at(j, u[k]);
    rep.matrices[MorLabel::f(i, j)] = std::move(mat);
  }
  return rep;
}

struct FunctorialityReport {
  bool ok = true;
  std::optional<std::pair<MorLabel, MorLabel>> counterexample;
};

inline FunctorialityReport check_functoriality(const Algebra& a, const Subcat& s,
                                               const DecatRep& rep) {
  const int n = static_cast<int>(rep.objects.size());
  std::vector<MorLabel> elements{MorLabel::id()};
  for (auto [i, j] : s.labels) elements.push_back(MorLabel::f(i, j));
  for (const MorLabel& x : elements)
    if (rep.matrix(x).rows != n || rep.matrix(x).cols != n)
      throw SizeMismatch("matrix size does not match the object count");
  if (rep.matrix(MorLabel::id()) != IMatrix::identity(n))
    return {false, std::make_pair(MorLabel::id(), MorLabel::id())};
  for (const MorLabel& x : elements)
    for (const MorLabel& y : elements) {
      IMatrix lhs = mul(rep.matrix(x), rep.matrix(y));
      IMatrix rhs(n, n);
      SumMor xy = compose(a, SumMor{{{x, 1}}}, SumMor{{{y, 1}}});
      for (const auto& [z, mult] : xy.multiplicities)
        rhs = add(rhs, scale(mult, rep.matrix(z)));
      if (lhs != rhs) return {false, std::make_pair(x, y)};
    }
  return {};
}

struct CandidateRep {
  DecatRep rep;
  IMatrix cartan;
};

namespace detail {

inline bool cartan_permutation_match(const IMatrix& lhs, const IMatrix& rhs) {
  const int n = lhs.rows;
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (lhs.at(perm[x], perm[y]) != rhs.at(x, y)) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace detail

// Decategorified shadow of the standard argument: the candidate's Cartan data
// must match the cell's, and each row must carry exactly one label acting by
// that row of the Cartan matrix (multiplicity one forced).
inline bool std_arg_check(const CandidateRep& c, const IMatrix& cellCartan, int l) {
  const int n = static_cast<int>(c.rep.objects.size());
  if (c.cartan.rows != n || c.cartan.cols != n)
    throw SizeMismatch("candidate Cartan matrix does not match the object count");
  if (cellCartan.rows != n || cellCartan.cols != n)
    throw SizeMismatch("cell Cartan matrix does not match the candidate size");
  for (const auto& [x, mat] : c.rep.matrices)
    if (mat.rows != n || mat.cols != n)
      throw SizeMismatch("action matrix does not match the object count");
  if (n > kPermutationCap)
    throw InputError("permutation search limited to " + std::to_string(kPermutationCap) +
                     " objects");
  if (l < 0 || l >= n) throw InputError("row index out of range");

  if (!detail::cartan_permutation_match(c.cartan, cellCartan)) return false;

  for (int k = 0; k < n; ++k) {
    int hits = 0;
    for (const auto& [x, mat] : c.rep.matrices) {
      if (!x.is_f()) continue;
      bool confined = true;
      for (int r = 0; r < n && confined; ++r)
        if (r != k)
          for (int col = 0; col < n; ++col)
            if (mat.at(r, col) != 0) {
              confined = false;
              break;
            }
      if (!confined) continue;
      bool rowMatches = true;
      for (int col = 0; col < n; ++col)
        if (mat.at(k, col) != c.cartan.at(l, col)) rowMatches = false;
      if (rowMatches) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

struct BlockReport {
  int blocks = 0;       // diagonal blocks equal to the cell block
  int zeroObjects = 0;  // objects acted on by zero
  std::vector<int> permutation;
};

// Searches for an object order making the total U x U action matrix
// block-lower-triangular with each diagonal block the cell block or zero.
inline BlockReport block_structure(const Algebra& a, const std::vector<int>& u,
                                   const DecatRep& rep) {
  std::vector<int> su = normalize_subset(a, u);
  const int n = static_cast<int>(rep.objects.size());
  if (n > kPermutationCap)
    throw InputError("block search limited to " + std::to_string(kPermutationCap) + " objects");
  IMatrix total(n, n);
  for (int i : su)
    for (int j : su) {
      const IMatrix& mat = rep.matrix(MorLabel::f(i, j));
      if (mat.rows != n || mat.cols != n)
        throw SizeMismatch("action matrix does not match the object count");
      total = add(total, mat);
    }
  const int blockSize = static_cast<int>(su.size());
  std::vector<long long> cellRow(blockSize, 0);
  for (int k = 0; k < blockSize; ++k)
    for (int j : su) cellRow[k] += a.dims.at(j, su[k]);
  std::vector<long long> cellSorted = cellRow;
  std::sort(cellSorted.begin(), cellSorted.end());

  std::vector<std::vector<int>> groups;
  std::vector<char> used(n, 0);
  std::set<std::vector<char>> failed;

  auto zeroToUnused = [&](const std::vector<int>& g) {
    for (int x : g)
      for (int y = 0; y < n; ++y)
        if (!used[y] && std::find(g.begin(), g.end(), y) == g.end() && total.at(x, y) != 0)
          return false;
    return true;
  };
  auto isCellGroup = [&](const std::vector<int>& g) {
    for (int x : g)
      for (int y : g)
        if (total.at(x, y) != total.at(g.front(), y)) return false;
    std::vector<long long> row;
    for (int y : g) row.push_back(total.at(g.front(), y));
    std::sort(row.begin(), row.end());
    return row == cellSorted;
  };

  auto search = [&](auto&& self) -> bool {
    int first = -1;
    for (int x = 0; x < n; ++x)
      if (!used[x]) {
        first = x;
        break;
      }
    if (first < 0) return true;
    if (failed.count(used)) return false;
    std::vector<int> unused;
    for (int x = 0; x < n; ++x)
      if (!used[x]) unused.push_back(x);
    std::vector<std::vector<int>> candidates;
    for (int x : unused)
      if (total.at(x, x) == 0) candidates.push_back({x});
    if (blockSize <= static_cast<int>(unused.size())) {
      std::vector<int> pick(blockSize);
      auto choose = [&](auto&& chooser, int from, int depth) -> void {
        if (depth == blockSize) {
          candidates.push_back(pick);
          return;
        }
        for (int at = from; at < static_cast<int>(unused.size()); ++at) {
          pick[depth] = unused[at];
          chooser(chooser, at + 1, depth + 1);
        }
      };
      choose(choose, 0, 0);
    }
    for (const auto& g : candidates) {
      bool isZero = static_cast<int>(g.size()) == 1 && total.at(g[0], g[0]) == 0;
      if (!isZero && !isCellGroup(g)) continue;
      if (!zeroToUnused(g)) continue;
      for (int x : g) used[x] = 1;
      groups.push_back(g);
      if (self(self)) return true;
      groups.pop_back();
      for (int x : g) used[x] = 0;
    }
    failed.insert(used);
    return false;
  };
  if (!search(search))
    throw NotConformant("no object order exhibits the required block structure");

  BlockReport report;
  for (const auto& g : groups) {
    if (g.size() == 1 && total.at(g[0], g[0]) == 0) {
      ++report.zeroObjects;
      report.permutation.push_back(g[0]);
      continue;
    }
    ++report.blocks;
    // order members so that within the block the columns read the cell row
    std::vector<std::pair<long long, int>> slots, members;
    for (int k = 0; k < blockSize; ++k) slots.push_back({cellRow[k], k});
    for (int y : g) members.push_back({total.at(g.front(), y), y});
    std::sort(slots.begin(), slots.end());
    std::sort(members.begin(), members.end());
    std::vector<int> ordered(blockSize);
    for (int t = 0; t < blockSize; ++t) ordered[slots[t].second] = members[t].second;
    for (int y : ordered) report.permutation.push_back(y);
  }
  return report;
}

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<int> u, v;
  std::vector<SuiteItem> items;
  bool allPass = false;
  std::string conclusion;
};

namespace detail {

inline std::string join_vertices(const Algebra& a, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ",";
    out += a.vertexNames[v];
  }
  return out;
}

}  // namespace detail

// Checkable consequences of the classification theorem for D_{U x V}.
inline SuiteReport theorem_consequence_suite(const Algebra& a, const std::vector<int>& u,
                                             const std::vector<int>& v) {
  std::vector<int> su = normalize_subset(a, u);
  std::vector<int> sv = normalize_subset(a, v);
  if (!std::includes(sv.begin(), sv.end(), su.begin(), su.end()))
    throw SubsetOutOfRange("U must be contained in V");
  CoreCheck core = is_core(a, su);
  if (!core.ok)
    throw NotACore("not a self-injective core: witness i = " + a.vertexNames[core.witness]);

  SuiteReport report;
  report.u = su;
  report.v = sv;
  report.items.push_back(
      {"self-injective core", true, "U = {" + detail::join_vertices(a, su) + "}"});

  Subcat s = product_subcat(a, su, sv);
  CellDecomposition cd = cell_decomposition(a, s);
  std::vector<int> idem = idempotent_jcells(a, s, cd);
  std::vector<int> vac = vacuous_cells(a, s, cd);
  std::vector<int> vacuousColumns;
  for (int j : sv) {
    bool allZero = true;
    for (int h : su)
      if (a.dims.at(j, h) != 0) allZero = false;
    if (allZero) vacuousColumns.push_back(j);
  }
  {
    std::string note = "found " + std::to_string(idem.size()) + " idempotent J-cells";
    note += vacuousColumns.empty()
                ? "; no vacuous columns"
                : "; vacuous columns: " + detail::join_vertices(a, vacuousColumns);
    note += "; vacuous J-cells: " + std::to_string(vac.size());
    report.items.push_back({"two idempotent J-cells", idem.size() == 2, note});
  }

  std::vector<DecatRep> reps;
  for (int j0 : sv) reps.push_back(cell_rep(a, s, j0));
  bool sameRestriction = true;
  for (std::size_t r = 1; r < reps.size(); ++r)
    for (int i : su)
      for (int j : su)
        if (reps[r].matrix(MorLabel::f(i, j)) != reps[0].matrix(MorLabel::f(i, j)))
          sameRestriction = false;
  report.items.push_back({"cell representations agree across columns", sameRestriction,
                          "compared " + std::to_string(reps.size()) + " columns on the U x U labels"});

  const int nu = static_cast<int>(su.size());
  IMatrix total(nu, nu);
  for (int i : su)
    for (int j : su) total = add(total, reps[0].matrix(MorLabel::f(i, j)));
  bool rowsNonzero = true;
  for (int r = 0; r < nu; ++r) {
    bool nonzero = false;
    for (int c = 0; c < nu; ++c)
      if (total.at(r, c) != 0) nonzero = true;
    if (!nonzero) rowsNonzero = false;
  }
  report.items.push_back({"restricted action is transitive", rowsNonzero,
                          "every row of the summed U x U action matrix is nonzero"});

  Algebra corner = corner_algebra(a, su);
  bool cartanOk = true;
  std::vector<int> pos(a.m(), -1);
  for (int k = 0; k < nu; ++k) pos[su[k]] = k;
  for (int i : su)
    for (int j : su)
      for (int l : su)
        if (reps[0].matrix(MorLabel::f(i, j)).at(pos[i], pos[l]) !=
            corner.dims.at(pos[j], pos[l]))
          cartanOk = false;
  report.items.push_back({"Cartan identity", cartanOk,
                          "action entries match the corner Cartan matrix with multiplicity 1"});

  bool stdArgOk = true;
  for (const DecatRep& rep : reps) {
    CandidateRep cand{rep, corner.dims};
    for (int l = 0; l < nu; ++l)
      if (!std_arg_check(cand, corner.dims, l)) stdArgOk = false;
  }
  report.items.push_back({"standard argument", stdArgOk,
                          "checked " + std::to_string(reps.size()) + " cell representations"});

  bool conclusionOk = idem.size() == 2;
  report.items.push_back({"classification count", conclusionOk,
                          "one class per idempotent J-cell"});

  report.allPass = true;
  for (const SuiteItem& item : report.items) report.allPass &= item.pass;
  if (report.allPass)
    report.conclusion = "2 equivalence classes of simple transitive 2-representations";
  return report;
}

}  // namespace cellcalc

#endif
