#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "cellcalc/errors.hpp"
#include "cellcalc/families.hpp"
#include "cellcalc/tworep.hpp"

using namespace cellcalc;

namespace {

IMatrix make(std::vector<std::vector<long long>> rows) {
  IMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

DecatRep doubled(const DecatRep& rep) {
  DecatRep out = rep;
  for (auto& [x, mat] : out.matrices)
    if (x.is_f()) mat = scale(2, mat);
  return out;
}

DecatRep direct_sum(const Algebra& a, const Subcat& s, const DecatRep& x, const DecatRep& y) {
  DecatRep out;
  out.objects = x.objects;
  out.objects.insert(out.objects.end(), y.objects.begin(), y.objects.end());
  const int nx = static_cast<int>(x.objects.size());
  const int n = nx + static_cast<int>(y.objects.size());
  std::vector<MorLabel> labels{MorLabel::id()};
  for (auto [i, j] : s.labels) labels.push_back(MorLabel::f(i, j));
  for (const MorLabel& lab : labels) {
    IMatrix m(n, n);
    const IMatrix& mx = x.matrix(lab);
    const IMatrix& my = y.matrix(lab);
    for (int r = 0; r < mx.rows; ++r)
      for (int c = 0; c < mx.cols; ++c) m.at(r, c) = mx.at(r, c);
    for (int r = 0; r < my.rows; ++r)
      for (int c = 0; c < my.cols; ++c) m.at(nx + r, nx + c) = my.at(r, c);
    out.matrices[lab] = std::move(m);
  }
  return out;
}

}  // namespace

TEST_CASE("cell representation matrices for the standard example") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {1, 0}, {1, 0, 2});

  DecatRep rep = cell_rep(z, s, 0);
  CHECK(rep.objects == std::vector<std::string>{"0", "1"});
  CHECK(rep.matrix(MorLabel::id()) == IMatrix::identity(2));
  CHECK(rep.matrix(MorLabel::f(1, 0)) == make({{0, 0}, {2, 1}}));
  CHECK(rep.matrix(MorLabel::f(0, 0)) == make({{2, 1}, {0, 0}}));
  CHECK(rep.matrix(MorLabel::f(1, 2)) == make({{0, 0}, {1, 0}}));
  CHECK(rep.matrix(MorLabel::f(0, 2)) == make({{1, 0}, {0, 0}}));

  // explicit composite: [F(1,0)][F(0,0)] = 2 [F(1,0)]
  CHECK(mul(rep.matrix(MorLabel::f(1, 0)), rep.matrix(MorLabel::f(0, 0))) ==
        make({{0, 0}, {4, 2}}));
}

TEST_CASE("trivial representation from the marker column") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {1, 0}, {1, 0, 2});
  DecatRep rep = cell_rep(z, s, kTrivialColumn);
  CHECK(rep.objects == std::vector<std::string>{"triv"});
  CHECK(rep.matrix(MorLabel::id()) == IMatrix::identity(1));
  for (auto [i, j] : s.labels) CHECK(rep.matrix(MorLabel::f(i, j)).is_zero());
  CHECK(check_functoriality(z, s, rep).ok);
}

TEST_CASE("cell representation input validation") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {1, 0}, {1, 0, 2});
  CHECK_THROWS_AS(cell_rep(z, s, 5), SubsetOutOfRange);
  CHECK_THROWS_AS(cell_rep(z, product_subcat(z, {0, 1}, {0}), 0), NotSuperdiagonal);

  Subcat uu = product_subcat(z, {0, 1}, {0, 1});
  CHECK_THROWS_AS(cell_rep(z, uu, 2), ColumnNotPresent);
}

TEST_CASE("functoriality of cell representations") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {1, 0}, {1, 0, 2});
  for (int j0 : {0, 1, 2}) {
    FunctorialityReport r = check_functoriality(z, s, cell_rep(z, s, j0));
    CHECK(r.ok);
    CHECK_FALSE(r.counterexample.has_value());
  }

  DecatRep broken = cell_rep(z, s, 0);
  IMatrix& m = broken.matrices.at(MorLabel::f(1, 0));
  IMatrix t(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) t.at(r, c) = m.at(c, r);
  m = t;
  FunctorialityReport bad = check_functoriality(z, s, broken);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.counterexample.has_value());

  DecatRep shrunk = cell_rep(z, s, 0);
  shrunk.matrices.at(MorLabel::f(0, 0)) = IMatrix(3, 3);
  CHECK_THROWS_AS(check_functoriality(z, s, shrunk), SizeMismatch);

  DecatRep incomplete = cell_rep(z, s, 0);
  incomplete.matrices.erase(MorLabel::f(0, 2));
  CHECK_THROWS_AS(check_functoriality(z, s, incomplete), InputError);
}

TEST_CASE("standard-argument check accepts cell representations") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {0, 1}, {0, 1, 2});
  Algebra corner = corner_algebra(z, {0, 1});
  for (int j0 : {0, 1, 2}) {
    CandidateRep cand{cell_rep(z, s, j0), corner.dims};
    for (int l = 0; l < 2; ++l) CHECK(std_arg_check(cand, corner.dims, l));
  }
}

TEST_CASE("standard-argument check rejects scaled impostors") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {0, 1}, {0, 1, 2});
  Algebra corner = corner_algebra(z, {0, 1});
  CandidateRep mutant{doubled(cell_rep(z, s, 0)), corner.dims};
  CHECK_FALSE(std_arg_check(mutant, corner.dims, 0));

  for (int k : {2, 3}) {
    Algebra star = zigzag_star(k);
    std::vector<int> v;
    for (int j = 0; j <= k; ++j) v.push_back(j);
    Subcat hub = product_subcat(star, {0}, v);
    Algebra hubCorner = corner_algebra(star, {0});
    CandidateRep mutantHub{doubled(cell_rep(star, hub, 0)), hubCorner.dims};
    CHECK_FALSE(std_arg_check(mutantHub, hubCorner.dims, 0));
  }
}

TEST_CASE("standard-argument check validates shapes") {
  Algebra z = zigzag_star(2);
  Subcat s = product_subcat(z, {0, 1}, {0, 1, 2});
  Algebra corner = corner_algebra(z, {0, 1});
  CandidateRep cand{cell_rep(z, s, 0), corner.dims};
  CHECK_THROWS_AS(std_arg_check(cand, IMatrix::identity(3), 0), SizeMismatch);
  CHECK_THROWS_AS(std_arg_check(cand, corner.dims, 2), InputError);
  CandidateRep badCartan{cell_rep(z, s, 0), IMatrix::identity(3)};
  CHECK_THROWS_AS(std_arg_check(badCartan, corner.dims, 0), SizeMismatch);
}

TEST_CASE("block structure of sums of cell representations") {
  Algebra z = zigzag_star(2);
  Subcat uu = product_subcat(z, {0, 1}, {0, 1});
  DecatRep one = cell_rep(z, uu, 0);

  BlockReport single = block_structure(z, {0, 1}, one);
  CHECK(single.blocks == 1);
  CHECK(single.zeroObjects == 0);
  CHECK(single.permutation.size() == 2);

  BlockReport two = block_structure(z, {0, 1}, direct_sum(z, uu, one, cell_rep(z, uu, 1)));
  CHECK(two.blocks == 2);
  CHECK(two.zeroObjects == 0);
  CHECK(two.permutation.size() == 4);

  BlockReport withTrivial =
      block_structure(z, {0, 1}, direct_sum(z, uu, one, cell_rep(z, uu, kTrivialColumn)));
  CHECK(withTrivial.blocks == 1);
  CHECK(withTrivial.zeroObjects == 1);

  DecatRep bogus = one;
  bogus.matrices.at(MorLabel::f(0, 0)) = make({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(block_structure(z, {0, 1}, bogus), NotConformant);
}

TEST_CASE("consequence suite passes on the positive corpus") {
  for (int k : {1, 2, 3}) {
    Algebra star = zigzag_star(k);
    std::vector<int> v;
    for (int j = 0; j <= k; ++j) v.push_back(j);
    SuiteReport report = theorem_consequence_suite(star, {0}, v);
    CHECK(report.allPass);
    CHECK(report.items.size() == 7);
    CHECK(report.conclusion == "2 equivalence classes of simple transitive 2-representations");
  }

  Algebra t = two_vertex_ab();
  SuiteReport tr = theorem_consequence_suite(t, {0}, {0, 1});
  CHECK(tr.allPass);

  Algebra z = zigzag_star(2);
  SuiteReport zr = theorem_consequence_suite(z, {0, 1}, {0, 1, 2});
  CHECK(zr.allPass);
  for (const SuiteItem& item : zr.items) CHECK(item.pass);
}

TEST_CASE("consequence suite rejects bad input") {
  Algebra a2 = hereditary_an(2);
  CHECK_THROWS_AS(theorem_consequence_suite(a2, {0}, {0, 1}), NotACore);
  CHECK_THROWS_WITH(theorem_consequence_suite(a2, {0}, {0, 1}),
                    "not a self-injective core: witness i = 1");

  Algebra z = zigzag_star(2);
  CHECK_THROWS_AS(theorem_consequence_suite(z, {0, 1}, {0}), SubsetOutOfRange);
  CHECK_THROWS_AS(theorem_consequence_suite(z, {}, {0}), SubsetOutOfRange);
}
