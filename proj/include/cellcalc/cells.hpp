#ifndef CELLCALC_CELLS_HPP
#define CELLCALC_CELLS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cellcalc/algebra.hpp"
#include "cellcalc/bimodcat.hpp"
#include "cellcalc/errors.hpp"
#include "cellcalc/linalg.hpp"

namespace cellcalc {

// Left/right/two-sided preorders on the elements of s plus Id, stored as
// reflexive-transitive reachability matrices: leqL[x][y] means x <=_L y.
struct Preorders {
  std::vector<MorLabel> elements;  // Id first, then F labels in label order
  std::vector<std::vector<char>> leqL, leqR, leqJ;

  int index_of(const MorLabel& x) const {
    for (int e = 0; e < static_cast<int>(elements.size()); ++e)
      if (elements[e] == x) return e;
    return -1;
  }
};

namespace detail {

// the single label (possibly Zero) representing x composed with y
inline MorLabel step(const Algebra& a, const MorLabel& x, const MorLabel& y) {
  return *mu(a, x, y).begin();
}

inline std::vector<std::vector<char>> reach_closure(
    const std::vector<std::set<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int start = 0; start < n; ++start) {
    std::vector<int> stack{start};
    reach[start][start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!reach[start][y]) {
          reach[start][y] = 1;
          stack.push_back(y);
        }
    }
  }
  return reach;
}

struct StepDigraphs {
  std::vector<MorLabel> elements;
  std::vector<std::set<int>> left, right, twosided;  // edges x -> y with y above x
};

inline StepDigraphs step_digraphs(const Algebra& a, const Subcat& s) {
  StepDigraphs g;
  g.elements.push_back(MorLabel::id());
  for (auto [i, j] : s.labels) {
    check_label_range(a, {i, j});
    g.elements.push_back(MorLabel::f(i, j));
  }
  std::map<MorLabel, int> index;
  for (int e = 0; e < static_cast<int>(g.elements.size()); ++e) index[g.elements[e]] = e;
  const int n = static_cast<int>(g.elements.size());
  g.left.resize(n);
  g.right.resize(n);
  g.twosided.resize(n);
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h) {
      MorLabel l = step(a, g.elements[h], g.elements[x]);
      if (!l.is_zero()) g.left[x].insert(index.at(l));
      MorLabel r = step(a, g.elements[x], g.elements[h]);
      if (!r.is_zero()) g.right[x].insert(index.at(r));
      for (int h2 = 0; h2 < n; ++h2) {
        MorLabel t = step(a, step(a, g.elements[h], g.elements[x]), g.elements[h2]);
        if (!t.is_zero()) g.twosided[x].insert(index.at(t));
      }
    }
  return g;
}

// Tarjan's strongly connected components; returns component id per node
inline std::vector<int> scc_ids(const std::vector<std::set<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
  std::vector<char> onStack(n, 0);
  int counter = 0, comps = 0;
  auto dfs = [&](auto&& self, int x) -> void {
    num[x] = low[x] = counter++;
    stack.push_back(x);
    onStack[x] = 1;
    for (int y : adj[x]) {
      if (num[y] < 0) {
        self(self, y);
        low[x] = std::min(low[x], low[y]);
      } else if (onStack[y]) {
        low[x] = std::min(low[x], num[y]);
      }
    }
    if (low[x] == num[x]) {
      while (true) {
        int y = stack.back();
        stack.pop_back();
        onStack[y] = 0;
        comp[y] = comps;
        if (y == x) break;
      }
      ++comps;
    }
  };
  for (int x = 0; x < n; ++x)
    if (num[x] < 0) dfs(dfs, x);
  return comp;
}

// partitions nodes into cells sorted by minimal member
inline std::vector<std::vector<int>> cells_from_components(const std::vector<int>& comp) {
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> cells(count);
  for (int x = 0; x < static_cast<int>(comp.size()); ++x) cells[comp[x]].push_back(x);
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return cells;
}

}  // namespace detail

inline Preorders preorders(const Algebra& a, const Subcat& s) {
  detail::StepDigraphs g = detail::step_digraphs(a, s);
  Preorders p;
  p.elements = g.elements;
  p.leqL = detail::reach_closure(g.left);
  p.leqR = detail::reach_closure(g.right);
  p.leqJ = detail::reach_closure(g.twosided);
  return p;
}

// grid of right-cell x left-cell intersections inside one J-cell
struct Eggbox {
  std::vector<std::vector<int>> rowCells, colCells;        // element indices
  std::vector<std::vector<std::vector<int>>> grid;         // intersections
};

struct CellDecomposition {
  Preorders pre;
  std::vector<std::vector<int>> leftCells, rightCells;
  std::vector<std::vector<int>> jCells;       // decreasing J-order, min-label tie-break
  std::vector<int> leftCellOf, rightCellOf, jCellOf;
  std::vector<std::pair<int, int>> jOrder;    // Hasse edges, first strictly J-above second
  std::vector<Eggbox> eggboxes;               // aligned with jCells

  const MorLabel& element(int e) const { return pre.elements[e]; }
};

inline CellDecomposition cell_decomposition(const Algebra& a, const Subcat& s) {
  if (!is_closed(a, s))
    throw InputError("label set is not closed under composition");
  detail::StepDigraphs g = detail::step_digraphs(a, s);
  CellDecomposition cd;
  cd.pre.elements = g.elements;
  cd.pre.leqL = detail::reach_closure(g.left);
  cd.pre.leqR = detail::reach_closure(g.right);
  cd.pre.leqJ = detail::reach_closure(g.twosided);
  cd.leftCells = detail::cells_from_components(detail::scc_ids(g.left));
  cd.rightCells = detail::cells_from_components(detail::scc_ids(g.right));

  std::vector<std::vector<int>> jRaw =
      detail::cells_from_components(detail::scc_ids(g.twosided));
  const int n = static_cast<int>(g.elements.size());

  // order J-cells greatest first; ties broken by smallest member label
  const int jCount = static_cast<int>(jRaw.size());
  std::vector<std::vector<char>> cellLeq(jCount, std::vector<char>(jCount, 0));
  for (int x = 0; x < jCount; ++x)
    for (int y = 0; y < jCount; ++y)
      cellLeq[x][y] = cd.pre.leqJ[jRaw[x].front()][jRaw[y].front()];
  std::vector<int> order;
  std::vector<char> placed(jCount, 0);
  for (int round = 0; round < jCount; ++round) {
    int pick = -1;
    for (int c = 0; c < jCount; ++c) {
      if (placed[c]) continue;
      bool maximal = true;
      for (int d = 0; d < jCount; ++d)
        if (!placed[d] && d != c && cellLeq[c][d]) maximal = false;
      if (!maximal) continue;
      if (pick < 0 || jRaw[c].front() < jRaw[pick].front()) pick = c;
    }
    order.push_back(pick);
    placed[pick] = 1;
  }
  for (int c : order) cd.jCells.push_back(jRaw[c]);

  cd.leftCellOf.assign(n, -1);
  cd.rightCellOf.assign(n, -1);
  cd.jCellOf.assign(n, -1);
  for (int c = 0; c < static_cast<int>(cd.leftCells.size()); ++c)
    for (int e : cd.leftCells[c]) cd.leftCellOf[e] = c;
  for (int c = 0; c < static_cast<int>(cd.rightCells.size()); ++c)
    for (int e : cd.rightCells[c]) cd.rightCellOf[e] = c;
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c)
    for (int e : cd.jCells[c]) cd.jCellOf[e] = c;

  // Hasse edges of the strict J-order between cells
  auto strictlyAbove = [&](int upper, int lower) {
    int u = cd.jCells[upper].front(), l = cd.jCells[lower].front();
    return cd.pre.leqJ[l][u] && !cd.pre.leqJ[u][l];
  };
  for (int upper = 0; upper < static_cast<int>(cd.jCells.size()); ++upper)
    for (int lower = 0; lower < static_cast<int>(cd.jCells.size()); ++lower) {
      if (!strictlyAbove(upper, lower)) continue;
      bool covering = true;
      for (int mid = 0; mid < static_cast<int>(cd.jCells.size()); ++mid)
        if (mid != upper && mid != lower && strictlyAbove(upper, mid) &&
            strictlyAbove(mid, lower))
          covering = false;
      if (covering) cd.jOrder.push_back({upper, lower});
    }
  std::sort(cd.jOrder.begin(), cd.jOrder.end());

  // eggboxes: rows = right cells by minimal (i,j), columns = left cells by (j,i)
  auto labelKey = [&](int e, bool flip) {
    const MorLabel& x = cd.pre.elements[e];
    return flip ? std::pair<int, int>{x.j, x.i} : std::pair<int, int>{x.i, x.j};
  };
  for (const auto& jc : cd.jCells) {
    Eggbox box;
    std::set<int> rids, cids;
    for (int e : jc) {
      rids.insert(cd.rightCellOf[e]);
      cids.insert(cd.leftCellOf[e]);
    }
    for (int r : rids) box.rowCells.push_back(cd.rightCells[r]);
    for (int c : cids) box.colCells.push_back(cd.leftCells[c]);
    auto minKey = [&](const std::vector<int>& cell, bool flip) {
      std::pair<int, int> best = labelKey(cell.front(), flip);
      for (int e : cell) best = std::min(best, labelKey(e, flip));
      return best;
    };
    std::sort(box.rowCells.begin(), box.rowCells.end(),
              [&](const auto& x, const auto& y) { return minKey(x, false) < minKey(y, false); });
    std::sort(box.colCells.begin(), box.colCells.end(),
              [&](const auto& x, const auto& y) { return minKey(x, true) < minKey(y, true); });
    box.grid.resize(box.rowCells.size());
    for (std::size_t r = 0; r < box.rowCells.size(); ++r) {
      box.grid[r].resize(box.colCells.size());
      for (std::size_t c = 0; c < box.colCells.size(); ++c)
        for (int e : box.rowCells[r])
          if (std::find(box.colCells[c].begin(), box.colCells[c].end(), e) !=
              box.colCells[c].end())
            box.grid[r][c].push_back(e);
    }
    cd.eggboxes.push_back(std::move(box));
  }
  return cd;
}

inline bool is_idempotent_jcell(const Algebra& a, const CellDecomposition& cd, int jcell) {
  const auto& members = cd.jCells.at(jcell);
  std::set<MorLabel> inCell;
  for (int e : members) inCell.insert(cd.element(e));
  for (int f : members)
    for (int g : members) {
      MorLabel h = detail::step(a, cd.element(g), cd.element(f));
      if (!h.is_zero() && inCell.count(h)) return true;
    }
  return false;
}

inline std::vector<int> idempotent_jcells(const Algebra& a, const Subcat& s,
                                          const CellDecomposition& cd) {
  (void)s;
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c)
    if (is_idempotent_jcell(a, cd, c)) out.push_back(c);
  return out;
}

// J-maximal non-idempotent cells
inline std::vector<int> vacuous_cells(const Algebra& a, const Subcat& s,
                                      const CellDecomposition& cd) {
  (void)s;
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c) {
    bool maximal = true;
    for (int d = 0; d < static_cast<int>(cd.jCells.size()); ++d)
      if (d != c && cd.pre.leqJ[cd.jCells[c].front()][cd.jCells[d].front()] &&
          !cd.pre.leqJ[cd.jCells[d].front()][cd.jCells[c].front()])
        maximal = false;
    if (maximal && !is_idempotent_jcell(a, cd, c)) out.push_back(c);
  }
  return out;
}

inline bool is_strongly_regular(const CellDecomposition& cd, int jcell) {
  const Eggbox& box = cd.eggboxes.at(jcell);
  for (const auto& row : box.grid)
    for (const auto& cell : row)
      if (cell.size() != 1) return false;
  for (std::size_t x = 0; x < box.colCells.size(); ++x)
    for (std::size_t y = 0; y < box.colCells.size(); ++y) {
      if (x == y) continue;
      if (cd.pre.leqL[box.colCells[x].front()][box.colCells[y].front()]) return false;
    }
  for (std::size_t x = 0; x < box.rowCells.size(); ++x)
    for (std::size_t y = 0; y < box.rowCells.size(); ++y) {
      if (x == y) continue;
      if (cd.pre.leqR[box.rowCells[x].front()][box.rowCells[y].front()]) return false;
    }
  return true;
}

struct ApexReport {
  int jcell = -1;
  bool idempotent = false;
};

// J-greatest cell among those the matrices do not annihilate
inline ApexReport apex(const Algebra& a, const Subcat& s, const CellDecomposition& cd,
                       const std::map<MorLabel, IMatrix>& matrices) {
  (void)s;
  std::vector<int> surviving;
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c) {
    bool nonzero = false;
    for (int e : cd.jCells[c]) {
      auto it = matrices.find(cd.element(e));
      if (it == matrices.end())
        throw InputError("representation does not cover " + to_string(a, cd.element(e)));
      if (!it->second.is_zero()) nonzero = true;
    }
    if (nonzero) surviving.push_back(c);
  }
  for (int c : surviving) {
    bool greatest = true;
    for (int d : surviving)
      if (!cd.pre.leqJ[cd.jCells[d].front()][cd.jCells[c].front()]) greatest = false;
    if (greatest) return {c, is_idempotent_jcell(a, cd, c)};
  }
  throw NoGreatestElement("no J-greatest cell among the non-annihilated ones");
}

// the left preorder computed inside s equals the ambient one restricted to s
inline bool check_sided_preservation(const Algebra& a, const Subcat& s) {
  if (!classify(a, s).superdiagonal)
    throw NotSuperdiagonal("sided preservation requires a superdiagonal label set");
  Preorders inner = preorders(a, s);
  Subcat full;
  for (int i = 0; i < a.m(); ++i)
    for (int j = 0; j < a.m(); ++j) full.labels.insert({i, j});
  Preorders ambient = preorders(a, full);
  for (int x = 0; x < static_cast<int>(inner.elements.size()); ++x)
    for (int y = 0; y < static_cast<int>(inner.elements.size()); ++y) {
      int ax = ambient.index_of(inner.elements[x]);
      int ay = ambient.index_of(inner.elements[y]);
      if (inner.leqL[x][y] != ambient.leqL[ax][ay]) return false;
    }
  return true;
}

// one block per J-cell, greatest first; rows are right cells, columns left cells
inline std::string eggbox_ascii(const Algebra& a, const CellDecomposition& cd,
                                const std::vector<int>& idempotents,
                                const std::vector<int>& vacuous) {
  std::set<int> idem(idempotents.begin(), idempotents.end());
  std::set<int> vac(vacuous.begin(), vacuous.end());
  std::string out;
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c) {
    out += "J-cell " + std::to_string(c + 1);
    if (idem.count(c)) out += " [idempotent]";
    if (vac.count(c)) out += " [vacuous]";
    out += "\n";
    const Eggbox& box = cd.eggboxes[c];
    std::vector<std::vector<std::string>> text(box.grid.size());
    std::size_t width = 1;
    for (std::size_t r = 0; r < box.grid.size(); ++r)
      for (std::size_t col = 0; col < box.grid[r].size(); ++col) {
        std::string entry;
        for (int e : box.grid[r][col]) {
          if (!entry.empty()) entry += "+";
          entry += to_string(a, cd.element(e));
        }
        if (entry.empty()) entry = ".";
        width = std::max(width, entry.size());
        text[r].push_back(std::move(entry));
      }
    for (const auto& row : text) {
      out += " ";
      for (const std::string& entry : row) {
        out += " " + entry;
        out.append(width - entry.size(), ' ');
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace cellcalc

#endif
