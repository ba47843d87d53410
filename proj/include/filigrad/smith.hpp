#pragma once

#include <algorithm>
#include <cstddef>

#include "filigrad/linalg.hpp"

namespace filigrad {

/// U * input * V = S with U, V unimodular and S = diag(s_1 | s_2 | ...), s_i >= 0.
struct SmithResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
inline void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}
inline void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Smallest nonzero |entry| in the trailing submatrix, if any.
inline bool min_pivot(const IntMatrix& s, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < s.rows; ++i)
    for (std::size_t j = k; j < s.cols; ++j) {
      if (sgn(s.at(i, j)) == 0) continue;
      Int v = abs(s.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

inline bool cross_clear(const IntMatrix& s, std::size_t k) {
  for (std::size_t i = k + 1; i < s.rows; ++i)
    if (sgn(s.at(i, k)) != 0) return false;
  for (std::size_t j = k + 1; j < s.cols; ++j)
    if (sgn(s.at(k, j)) != 0) return false;
  return true;
}

}  // namespace detail

inline SmithResult smith_normal_form(const IntMatrix& m) {
  using namespace detail;
  SmithResult res{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
  IntMatrix& S = res.S;
  const std::size_t nmin = std::min(m.rows, m.cols);

  for (std::size_t k = 0; k < nmin; ++k) {
    std::size_t pi, pj;
    if (!min_pivot(S, k, pi, pj)) break;
    for (;;) {
      swap_rows(S, k, pi), swap_rows(res.U, k, pi);
      swap_cols(S, k, pj), swap_cols(res.V, k, pj);
      for (std::size_t i = k + 1; i < S.rows; ++i) {
        if (sgn(S.at(i, k)) == 0) continue;
        Int q = S.at(i, k) / S.at(k, k);  // truncated division keeps remainders small
        if (sgn(q) != 0) add_row(S, i, k, -q), add_row(res.U, i, k, -q);
      }
      for (std::size_t j = k + 1; j < S.cols; ++j) {
        if (sgn(S.at(k, j)) == 0) continue;
        Int q = S.at(k, j) / S.at(k, k);
        if (sgn(q) != 0) add_col(S, j, k, -q), add_col(res.V, j, k, -q);
      }
      if (!cross_clear(S, k)) {
        min_pivot(S, k, pi, pj);
        continue;
      }
      // Pivot must divide the whole trailing block for the divisibility chain.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < S.rows && divides_all; ++i)
        for (std::size_t j = k + 1; j < S.cols && divides_all; ++j)
          if (sgn(S.at(i, j) % S.at(k, k)) != 0) {
            add_row(S, k, i, 1);
            add_row(res.U, k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
      min_pivot(S, k, pi, pj);
    }
    if (sgn(S.at(k, k)) < 0) negate_row(S, k), negate_row(res.U, k);
  }
  return res;
}

/// det of a square integer matrix by fraction-free elimination (used in tests
/// to certify |det U| = |det V| = 1).
inline Int det(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  const std::size_t n = m.rows;
  Int sign = 1, denom = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m.at(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      detail::swap_rows(m, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / denom;
      m.at(i, k) = 0;
    }
    denom = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace filigrad
