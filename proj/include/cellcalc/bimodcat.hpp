#ifndef CELLCALC_BIMODCAT_HPP
#define CELLCALC_BIMODCAT_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cellcalc/algebra.hpp"
#include "cellcalc/errors.hpp"

namespace cellcalc {

// Label of an indecomposable 1-morphism: the identity bimodule, a projective
// bimodule F(i,j), or the zero bimodule (composition output only).
struct MorLabel {
  enum class Kind { Zero = 0, Id = 1, F = 2 };
  Kind kind = Kind::Zero;
  int i = -1, j = -1;

  static MorLabel zero() { return {}; }
  static MorLabel id() { return {Kind::Id, -1, -1}; }
  static MorLabel f(int i, int j) { return {Kind::F, i, j}; }

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_id() const { return kind == Kind::Id; }
  bool is_f() const { return kind == Kind::F; }

  auto operator<=>(const MorLabel&) const = default;
};

inline std::string to_string(const Algebra& a, const MorLabel& x) {
  switch (x.kind) {
    case MorLabel::Kind::Zero: return "0";
    case MorLabel::Kind::Id: return "Id";
    default: return "F(" + a.vertexNames[x.i] + "," + a.vertexNames[x.j] + ")";
  }
}

// Direct sum with multiplicities; the empty map is the zero 1-morphism.
struct SumMor {
  std::map<MorLabel, long long> multiplicities;

  bool is_zero() const { return multiplicities.empty(); }
  void add(const MorLabel& x, long long count) {
    if (count == 0 || x.is_zero()) return;
    auto [it, fresh] = multiplicities.try_emplace(x, count);
    if (!fresh) it->second += count;
    if (it->second == 0) multiplicities.erase(it);
  }
  bool operator==(const SumMor&) const = default;
};

// Set of F-labels closed under composition; Id is always an implicit member.
struct Subcat {
  std::set<std::pair<int, int>> labels;
  bool operator==(const Subcat&) const = default;
};

inline void check_label_range(const Algebra& a, std::pair<int, int> lab) {
  check_vertex_range(a, lab.first, "label");
  check_vertex_range(a, lab.second, "label");
}

// multisemigroup product of two labels
inline std::set<MorLabel> mu(const Algebra& a, const MorLabel& x, const MorLabel& y) {
  if (x.is_zero() || y.is_zero()) return {MorLabel::zero()};
  if (x.is_id()) return {y};
  if (y.is_id()) return {x};
  if (a.dims.at(x.j, y.i) != 0) return {MorLabel::f(x.i, y.j)};
  return {MorLabel::zero()};
}

inline SumMor compose(const Algebra& a, const SumMor& x, const SumMor& y) {
  SumMor out;
  for (const auto& [lx, mx] : x.multiplicities)
    for (const auto& [ly, my] : y.multiplicities) {
      if (lx.is_id()) {
        out.add(ly, mx * my);
      } else if (ly.is_id()) {
        out.add(lx, mx * my);
      } else {
        out.add(MorLabel::f(lx.i, ly.j), mx * my * a.dims.at(lx.j, ly.i));
      }
    }
  return out;
}

inline bool is_closed(const Algebra& a, const Subcat& s) {
  for (auto [i, j] : s.labels)
    for (auto [k, l] : s.labels)
      if (a.dims.at(j, k) != 0 && !s.labels.count({i, l})) return false;
  return true;
}

inline Subcat closure(const Algebra& a, const std::set<std::pair<int, int>>& gens) {
  Subcat s;
  for (auto lab : gens) {
    check_label_range(a, lab);
    s.labels.insert(lab);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<int, int>> fresh;
    for (auto [i, j] : s.labels)
      for (auto [k, l] : s.labels)
        if (a.dims.at(j, k) != 0 && !s.labels.count({i, l})) fresh.push_back({i, l});
    for (auto lab : fresh) grew |= s.labels.insert(lab).second;
  }
  return s;
}

// U x V as a label set; such products are closed automatically
inline Subcat product_subcat(const Algebra& a, const std::vector<int>& u,
                             const std::vector<int>& v) {
  std::vector<int> su = normalize_subset(a, u);
  std::vector<int> sv = normalize_subset(a, v);
  Subcat s;
  for (int i : su)
    for (int j : sv) s.labels.insert({i, j});
  return s;
}

struct SubcatShape {
  std::vector<int> NL, NR;  // vertices appearing on the left / right of labels
  bool superdiagonal = false;
  bool subdiagonal = false;
  bool diagonal = false;
};

inline SubcatShape classify(const Algebra& a, const Subcat& s) {
  for (auto lab : s.labels) check_label_range(a, lab);
  SubcatShape shape;
  std::set<int> nl, nr;
  for (auto [i, j] : s.labels) {
    nl.insert(i);
    nr.insert(j);
  }
  shape.NL.assign(nl.begin(), nl.end());
  shape.NR.assign(nr.begin(), nr.end());
  bool product = s.labels.size() == nl.size() * nr.size();
  bool lInR = std::includes(nr.begin(), nr.end(), nl.begin(), nl.end());
  bool rInL = std::includes(nl.begin(), nl.end(), nr.begin(), nr.end());
  shape.superdiagonal = product && lInR;
  shape.subdiagonal = product && rInL;
  shape.diagonal = shape.superdiagonal && shape.subdiagonal;
  return shape;
}

struct AdjointResult {
  enum class Why { Ok, NoPartner, NotInSubcat };
  Why why = Why::NoPartner;
  std::optional<MorLabel> label;      // set when why == Ok
  std::optional<MorLabel> candidate;  // the adjoint in the ambient category, when it exists

  bool present() const { return why == Why::Ok; }
};

// partner vertex k with Ae_k isomorphic to (e_jA)^*, if any
inline std::optional<int> dual_vertex(const Algebra& a, int j) {
  for (int k = 0; k < a.m(); ++k)
    if (proj_inj_match(a, j, k)) return k;
  return std::nullopt;
}

inline AdjointResult right_adjoint(const Algebra& a, const Subcat& s, const MorLabel& x) {
  if (!x.is_f()) return {AdjointResult::Why::Ok, x, x};
  std::optional<int> k = dual_vertex(a, x.j);
  if (!k) return {AdjointResult::Why::NoPartner, std::nullopt, std::nullopt};
  MorLabel adj = MorLabel::f(*k, x.i);
  if (!s.labels.count({adj.i, adj.j}))
    return {AdjointResult::Why::NotInSubcat, std::nullopt, adj};
  return {AdjointResult::Why::Ok, adj, adj};
}

inline AdjointResult left_adjoint(const Algebra& a, const Subcat& s, const MorLabel& x) {
  if (!x.is_f()) return {AdjointResult::Why::Ok, x, x};
  std::optional<MorLabel> cand;
  for (int l = 0; l < a.m(); ++l)
    if (proj_inj_match(a, l, x.i)) {
      cand = MorLabel::f(x.j, l);
      break;
    }
  if (!cand) return {AdjointResult::Why::NoPartner, std::nullopt, std::nullopt};
  if (!s.labels.count({cand->i, cand->j}))
    return {AdjointResult::Why::NotInSubcat, std::nullopt, cand};
  return {AdjointResult::Why::Ok, cand, cand};
}

struct FiatReport {
  bool weaklyFiat = false;
  std::map<MorLabel, MorLabel> star;  // right adjoints on s plus Id, when weakly fiat
  std::optional<MorLabel> failureLabel;
  AdjointResult::Why failureWhy = AdjointResult::Why::Ok;
  bool failureOnLeft = false;
};

inline FiatReport is_weakly_fiat(const Algebra& a, const Subcat& s) {
  FiatReport report;
  report.star[MorLabel::id()] = MorLabel::id();
  for (auto [i, j] : s.labels) {
    MorLabel x = MorLabel::f(i, j);
    AdjointResult r = right_adjoint(a, s, x);
    if (!r.present()) {
      report.failureLabel = x;
      report.failureWhy = r.why;
      report.star.clear();
      return report;
    }
    AdjointResult l = left_adjoint(a, s, x);
    if (!l.present()) {
      report.failureLabel = x;
      report.failureWhy = l.why;
      report.failureOnLeft = true;
      report.star.clear();
      return report;
    }
    report.star[x] = *r.label;
  }
  report.weaklyFiat = true;
  return report;
}

// brute-force census of closed label sets; oracle-sized inputs only
inline std::vector<Subcat> enumerate_closed_subcats(const Algebra& a, int maxVertices = 3) {
  const int m = a.m();
  if (m > maxVertices)
    throw SubsetOutOfRange("subcategory enumeration limited to " + std::to_string(maxVertices) +
                           " vertices");
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) all.push_back({i, j});
  std::vector<Subcat> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    Subcat s;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask & (1u << b)) s.labels.insert(all[b]);
    if (is_closed(a, s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cellcalc

#endif
