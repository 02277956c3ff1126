#ifndef CELLCALC_LINALG_HPP
#define CELLCALC_LINALG_HPP

#include <vector>

#include "cellcalc/errors.hpp"
#include "cellcalc/rational.hpp"

namespace cellcalc {

// Dense matrix over exact rationals, row-major.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// In-place reduced row echelon form; returns the rank.
inline int rref(QMatrix& m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    Rational inv = Rational(1) / m.at(rank, c);
    for (int k = c; k < m.cols; ++k) m.at(rank, k) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (int k = c; k < m.cols; ++k) m.at(r, k) -= f * m.at(rank, k);
    }
    ++rank;
  }
  return rank;
}

inline int rank(QMatrix m) { return rref(m); }

// Dimension of the right nullspace {x : m x = 0}.
inline int nullity(const QMatrix& m) { return m.cols - rank(m); }

// Dense non-negative/small integer matrix, row-major.
struct IMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IMatrix() = default;
  IMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  static IMatrix identity(int n) {
    IMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const {
    for (long long v : a)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const IMatrix&, const IMatrix&) = default;
};

inline IMatrix mul(const IMatrix& x, const IMatrix& y) {
  if (x.cols != y.rows) throw SizeMismatch("matrix product size mismatch");
  IMatrix z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < y.cols; ++c) z.at(r, c) += v * y.at(k, c);
    }
  return z;
}

inline IMatrix add(const IMatrix& x, const IMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw SizeMismatch("matrix sum size mismatch");
  IMatrix z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
  return z;
}

inline IMatrix scale(long long c, const IMatrix& x) {
  IMatrix z = x;
  for (auto& v : z.a) v *= c;
  return z;
}

}  // namespace cellcalc

#endif
