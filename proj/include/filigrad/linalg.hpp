#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "filigrad/rational.hpp"

namespace filigrad {

/// Dense row-major matrix over Q.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// Dense row-major matrix over Z.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline RatMatrix mul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  RatMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

inline RatVec mul(const RatMatrix& m, const RatVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("mul: shape mismatch");
  RatVec w(m.rows, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (sgn(m.at(i, j)) != 0) w[i] += m.at(i, j) * v[j];
  return w;
}

/// In-place reduced row echelon form. Returns the pivot columns in order.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && sgn(m.at(p, c)) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) /= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m.at(i, c)) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

/// Basis of {v : m v = 0}, canonical: one vector per free column, with the
/// free coordinates forming an identity pattern (reduced column echelon form).
inline std::vector<RatVec> kernel_basis(RatMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  std::vector<std::size_t> pivot_row(m.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    pivot_row[pivots[r]] = r;
  }
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols, Rat(0));
    v[f] = 1;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (is_pivot[c]) v[c] = -m.at(pivot_row[c], f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution x of m x = b, or empty if inconsistent.
inline std::pair<bool, RatVec> solve(RatMatrix m, RatVec b) {
  if (m.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return {false, {}};
  RatVec x(m.cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return {true, x};
}

}  // namespace filigrad
