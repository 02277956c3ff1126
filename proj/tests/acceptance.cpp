// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// argv[1] (optional) is the path to the command-line binary for the
// end-to-end criterion.

#include <sys/wait.h>

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "cellcalc/cells.hpp"
#include "cellcalc/families.hpp"
#include "cellcalc/json_io.hpp"
#include "cellcalc/tworep.hpp"
#include "oracles.hpp"

using namespace cellcalc;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name << note << "\n";
  if (!ok) ++failures;
}

struct SweepCase {
  const Algebra* a;
  std::vector<int> u, v;
};

// all (core U, V containing U) pairs over the small self-injective-core corpus
std::vector<SweepCase> core_sweep(const std::vector<Algebra>& algebras) {
  std::vector<SweepCase> out;
  for (const Algebra& a : algebras)
    for (const auto& u : enumerate_cores(a)) {
      for (unsigned mask = 1; mask < (1u << a.m()); ++mask) {
        std::vector<int> v;
        for (int j = 0; j < a.m(); ++j)
          if (mask & (1u << j)) v.push_back(j);
        if (std::includes(v.begin(), v.end(), u.begin(), u.end()))
          out.push_back({&a, u, v});
      }
    }
  return out;
}

bool mutant_rejected(const Algebra& a, const std::vector<int>& u, const std::vector<int>& v) {
  Subcat s = product_subcat(a, u, v);
  Algebra corner = corner_algebra(a, u);
  DecatRep mutant = cell_rep(a, s, v.front());
  for (auto& [x, mat] : mutant.matrices)
    if (x.is_f()) mat = scale(2, mat);
  CandidateRep cand{mutant, corner.dims};
  for (int l = 0; l < static_cast<int>(u.size()); ++l)
    if (std_arg_check(cand, corner.dims, l)) return false;
  return true;
}

int run_cli(const std::string& cli, const std::string& args, std::string& output) {
  std::string cmd = "'" + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[512];
  output.clear();
  while (fgets(buf, sizeof(buf), pipe)) output += buf;
  int status = pclose(pipe);
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  std::vector<Algebra> sweepCorpus;
  sweepCorpus.push_back(zigzag_star(2));
  sweepCorpus.push_back(zigzag_star(3));
  sweepCorpus.push_back(two_vertex_ab());
  std::vector<SweepCase> sweep = core_sweep(sweepCorpus);

  criterion(1, "star zigzag dimension formula 4k+2 against the path-enumeration oracle", [&] {
    for (int k = 1; k <= 4; ++k) {
      Algebra a = zigzag_star(k);
      if (a.dim() != 4 * k + 2) return false;
      oracle::GradedDims g = oracle::quotient_dims(a.quiver, a.relations);
      if (g.total != 4 * k + 2) return false;
    }
    return true;
  });

  criterion(2, "core census on the corpus", [&] {
    Algebra z = zigzag_star(2);
    auto zc = enumerate_cores(z);
    if (zc.size() != 7) return false;
    std::set<std::vector<int>> seen(zc.begin(), zc.end());
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<int> s;
      for (int v = 0; v < 3; ++v)
        if (mask & (1u << v)) s.push_back(v);
      if (!seen.count(s)) return false;
    }
    for (int n = 2; n <= 5; ++n)
      if (!enumerate_cores(hereditary_an(n)).empty()) return false;
    Algebra t = two_vertex_ab();
    if (enumerate_cores(t) != std::vector<std::vector<int>>{{0}}) return false;
    CoreCheck rejected = is_core(t, {1});
    return !rejected.ok && rejected.witness == 1;
  });

  criterion(3, "weak fiatness of products holds exactly over matching cores", [&] {
    for (const Algebra& a : {zigzag_star(2), two_vertex_ab()}) {
      std::vector<std::vector<int>> subsets;
      for (unsigned mask = 1; mask < (1u << a.m()); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < a.m(); ++v)
          if (mask & (1u << v)) s.push_back(v);
        subsets.push_back(std::move(s));
      }
      for (const auto& u1 : subsets)
        for (const auto& u2 : subsets) {
          bool expected = (u1 == u2) && is_core(a, u1).ok;
          if (is_weakly_fiat(a, product_subcat(a, u1, u2)).weaklyFiat != expected)
            return false;
        }
    }
    return true;
  });

  criterion(4, "a weakly fiat subcategory that is not a product", [&] {
    Algebra z = zigzag_star(2);
    Subcat s = closure(z, {{1, 1}, {2, 2}});
    if (!is_weakly_fiat(z, s).weaklyFiat) return false;
    SubcatShape shape = classify(z, s);
    bool product = s.labels.size() == shape.NL.size() * shape.NR.size();
    return !product && !shape.superdiagonal && !shape.subdiagonal && !shape.diagonal;
  });

  criterion(5, "eggbox of the two-row superdiagonal example", [&] {
    Algebra z = zigzag_star(2);
    Subcat s = product_subcat(z, {1, 0}, {1, 0, 2});
    CellDecomposition cd = cell_decomposition(z, s);
    if (cd.jCells.size() != 2 || cd.jCells[0].size() != 6 || cd.jCells[1].size() != 1)
      return false;
    if (cd.element(cd.jCells[1][0]) != MorLabel::id()) return false;
    const Eggbox& box = cd.eggboxes[0];
    if (box.rowCells.size() != 2 || box.colCells.size() != 3) return false;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 3; ++c) {
        if (box.grid[r][c].size() != 1) return false;
        if (cd.element(box.grid[r][c][0]) != MorLabel::f(r, c)) return false;
      }
    return is_strongly_regular(cd, 0);
  });

  criterion(6, "vacuous cells are exactly the dead columns; two idempotent J-cells", [&] {
    for (const SweepCase& c : sweep) {
      Subcat s = product_subcat(*c.a, c.u, c.v);
      CellDecomposition cd = cell_decomposition(*c.a, s);
      std::set<std::set<MorLabel>> expected;
      for (int j : c.v) {
        long long live = 0;
        for (int h : c.u) live += c.a->dims.at(j, h);
        if (live == 0) {
          std::set<MorLabel> col;
          for (int i : c.u) col.insert(MorLabel::f(i, j));
          expected.insert(std::move(col));
        }
      }
      std::set<std::set<MorLabel>> actual;
      for (int cell : vacuous_cells(*c.a, s, cd)) {
        std::set<MorLabel> members;
        for (int e : cd.jCells[cell]) members.insert(cd.element(e));
        actual.insert(std::move(members));
      }
      if (actual != expected) return false;
      if (idempotent_jcells(*c.a, s, cd).size() != 2) return false;
    }
    return true;
  });

  criterion(7, "decategorified functoriality of every cell representation in the sweep", [&] {
    for (const SweepCase& c : sweep) {
      Subcat s = product_subcat(*c.a, c.u, c.v);
      for (int j0 : c.v)
        if (!check_functoriality(*c.a, s, cell_rep(*c.a, s, j0)).ok) return false;
      if (!check_functoriality(*c.a, s, cell_rep(*c.a, s, kTrivialColumn)).ok) return false;
    }
    return true;
  });

  criterion(8, "Cartan identity and standard-argument check, with the scaled mutant rejected",
            [&] {
    for (const SweepCase& c : sweep) {
      Subcat s = product_subcat(*c.a, c.u, c.v);
      Algebra corner = corner_algebra(*c.a, c.u);
      const int nu = static_cast<int>(c.u.size());
      std::vector<int> pos(c.a->m(), -1);
      for (int k = 0; k < nu; ++k) pos[c.u[k]] = k;
      DecatRep rep = cell_rep(*c.a, s, c.v.front());
      for (int i : c.u)
        for (int j : c.u)
          for (int l : c.u)
            if (rep.matrix(MorLabel::f(i, j)).at(pos[i], pos[l]) !=
                corner.dims.at(pos[j], pos[l]))
              return false;
      for (int j0 : c.v) {
        CandidateRep cand{cell_rep(*c.a, s, j0), corner.dims};
        for (int l = 0; l < nu; ++l)
          if (!std_arg_check(cand, corner.dims, l)) return false;
      }
    }
    if (!mutant_rejected(sweepCorpus[0], {0, 1}, {0, 1, 2})) return false;
    if (!mutant_rejected(sweepCorpus[0], {0}, {0, 1, 2})) return false;
    if (!mutant_rejected(sweepCorpus[1], {0}, {0, 1, 2, 3})) return false;
    return true;
  });

  criterion(9, "restricted transitivity and block counts of direct sums", [&] {
    for (const SweepCase& c : sweep) {
      Subcat s = product_subcat(*c.a, c.u, c.v);
      DecatRep rep = cell_rep(*c.a, s, c.v.front());
      const int nu = static_cast<int>(c.u.size());
      IMatrix total(nu, nu);
      for (int i : c.u)
        for (int j : c.u) total = add(total, rep.matrix(MorLabel::f(i, j)));
      for (int r = 0; r < nu; ++r) {
        bool nonzero = false;
        for (int col = 0; col < nu; ++col)
          if (total.at(r, col) != 0) nonzero = true;
        if (!nonzero) return false;
      }
    }
    Algebra z = zigzag_star(2);
    Subcat uu = product_subcat(z, {0, 1}, {0, 1});
    DecatRep one = cell_rep(z, uu, 0);
    DecatRep sum = one;
    for (int copies = 1; copies <= 3; ++copies) {
      BlockReport report = block_structure(z, {0, 1}, sum);
      if (report.blocks != copies || report.zeroObjects != 0) return false;
      if (copies < 3) {
        DecatRep next;
        next.objects = sum.objects;
        next.objects.insert(next.objects.end(), one.objects.begin(), one.objects.end());
        const int n0 = static_cast<int>(sum.objects.size());
        const int n = n0 + 2;
        for (const auto& [lab, mat] : sum.matrices) {
          IMatrix m(n, n);
          for (int r = 0; r < mat.rows; ++r)
            for (int col = 0; col < mat.cols; ++col) m.at(r, col) = mat.at(r, col);
          const IMatrix& tail = one.matrix(lab);
          for (int r = 0; r < 2; ++r)
            for (int col = 0; col < 2; ++col) m.at(n0 + r, n0 + col) = tail.at(r, col);
          next.matrices[lab] = std::move(m);
        }
        sum = std::move(next);
      }
    }
    return true;
  });

  criterion(10, "corner algebras over every core are self-injective", [&] {
    for (const Algebra& a : {zigzag_star(2), two_vertex_ab()})
      for (const auto& u : enumerate_cores(a))
        if (!is_self_injective(corner_algebra(a, u))) return false;
    return true;
  });

  criterion(11, "multisemigroup associativity over the small corpus", [&] {
    for (const Algebra& a :
         {hereditary_an(1), hereditary_an(2), hereditary_an(3), two_vertex_ab(), zigzag_star(1),
          zigzag_star(2), corner_algebra(zigzag_star(2), {0, 1})}) {
      std::vector<MorLabel> labels{MorLabel::zero(), MorLabel::id()};
      for (int i = 0; i < a.m(); ++i)
        for (int j = 0; j < a.m(); ++j) labels.push_back(MorLabel::f(i, j));
      auto muSet = [&](const std::set<MorLabel>& xs, const MorLabel& y, bool leftFold) {
        std::set<MorLabel> out;
        for (const MorLabel& x : xs)
          for (const MorLabel& z : (leftFold ? mu(a, x, y) : mu(a, y, x))) out.insert(z);
        return out;
      };
      for (const MorLabel& x : labels)
        for (const MorLabel& y : labels)
          for (const MorLabel& z : labels)
            if (muSet(mu(a, x, y), z, true) != muSet(mu(a, y, z), x, false)) return false;
    }
    return true;
  });

  criterion(12, "command-line verification of the hub families", [&] {
    if (cli.empty()) return false;
    for (int k = 1; k <= 3; ++k) {
      std::string range = "0.." + std::to_string(k);
      std::string output;
      int code = run_cli(cli, "verify --builtin zigzag-star:" + std::to_string(k) +
                                  " --u 0 --v " + range,
                         output);
      if (code != 0) return false;
      if (output.find("2 equivalence classes") == std::string::npos) return false;
    }
    return true;
  });

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
