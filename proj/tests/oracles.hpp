// Test-only oracles, independent of the library's elimination paths.
#pragma once

#include <cstdint>
#include <random>

#include "filigrad/linalg.hpp"
#include "filigrad/lie.hpp"

namespace oracle {

using filigrad::Int;
using filigrad::IntMatrix;
using filigrad::LieAlgebra;
using filigrad::Rat;
using filigrad::RatMatrix;
using filigrad::RatVec;

/// Rank by fraction-free (Bareiss) elimination over the integers. The input
/// rational matrix is cleared of denominators row by row first.
inline std::size_t bareiss_rank(const RatMatrix& m) {
  IntMatrix w(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols; ++j) lcm = lcm / gcd(lcm, m.at(i, j).get_den()) * m.at(i, j).get_den();
    for (std::size_t j = 0; j < m.cols; ++j) {
      Rat v = m.at(i, j) * Rat(lcm);
      w.at(i, j) = v.get_num();
    }
  }
  std::size_t rank = 0;
  Int denom = 1;
  for (std::size_t col = 0; col < w.cols && rank < w.rows; ++col) {
    std::size_t piv = rank;
    while (piv < w.rows && sgn(w.at(piv, col)) == 0) ++piv;
    if (piv == w.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(rank, j));
    for (std::size_t i = rank + 1; i < w.rows; ++i) {
      for (std::size_t j = col + 1; j < w.cols; ++j)
        w.at(i, j) = (w.at(rank, col) * w.at(i, j) - w.at(i, col) * w.at(rank, j)) / denom;
      w.at(i, col) = 0;
    }
    denom = w.at(rank, col);
    ++rank;
  }
  return rank;
}

/// The Leibniz linear system of a Lie algebra, assembled directly from the
/// definition (rows: one per (pair, coordinate); columns: D_{rc} = r*n+c).
inline RatMatrix leibniz_system(const LieAlgebra& a) {
  const std::size_t n = a.dim;
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        RatVec eq(n * n, Rat(0));
        for (const auto& [k, c] : a.bracket_basis(i, j)) eq[m * n + k] += c;
        for (std::size_t r = 0; r < n; ++r) {
          for (const auto& [t, c] : a.bracket_basis(r, j))
            if (t == m) eq[r * n + i] -= c;
          for (const auto& [t, c] : a.bracket_basis(i, r))
            if (t == m) eq[r * n + j] -= c;
        }
        rows.push_back(std::move(eq));
      }
  RatMatrix sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys.at(r, c) = rows[r][c];
  return sys;
}

/// Jacobi residuals by direct triple-loop evaluation over dense vectors.
inline bool jacobi_holds_bruteforce(const LieAlgebra& a) {
  const std::size_t n = a.dim;
  std::vector<RatVec> e(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RatVec r = a.bracket(a.bracket(e[i], e[j]), e[k]);
        RatVec s = a.bracket(a.bracket(e[j], e[k]), e[i]);
        RatVec t = a.bracket(a.bracket(e[k], e[i]), e[j]);
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(r[m] + s[m] + t[m]) != 0) return false;
      }
  return true;
}

inline IntMatrix random_int_matrix(std::mt19937& rng, std::size_t max_dim, int max_abs) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> val(-max_abs, max_abs);
  IntMatrix m(dim(rng), dim(rng));
  for (auto& x : m.a) x = val(rng);
  return m;
}

inline RatMatrix random_rat_matrix(std::mt19937& rng, std::size_t max_dim, int max_abs) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, 4);
  RatMatrix m(dim(rng), dim(rng));
  for (auto& x : m.a) x = filigrad::rat(num(rng), den(rng));
  return m;
}

}  // namespace oracle
