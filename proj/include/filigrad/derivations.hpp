#pragma once

#include "filigrad/lie.hpp"

namespace filigrad {

/// Basis of Der(a): all D with D[x,y] = [Dx,y] + [x,Dy], as the canonical
/// kernel of the Leibniz system (n^2 unknowns D_{rc}, n equations per pair).
inline std::vector<RatMatrix> derivation_space(const LieAlgebra& a) {
  const std::size_t n = a.dim;
  auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<RatVec> eq(n, RatVec(n * n, Rat(0)));
      // D[e_i,e_j] contributes +c_k at D_{m k}
      for (const auto& [k, c] : a.bracket_basis(i, j))
        for (std::size_t m = 0; m < n; ++m) eq[m][idx(m, k)] += c;
      // -[D e_i, e_j]: D e_i = sum_r D_{r i} e_r
      for (std::size_t r = 0; r < n; ++r)
        for (const auto& [m, c] : a.bracket_basis(r, j)) eq[m][idx(r, i)] -= c;
      // -[e_i, D e_j]
      for (std::size_t r = 0; r < n; ++r)
        for (const auto& [m, c] : a.bracket_basis(i, r)) eq[m][idx(r, j)] -= c;
      for (auto& e : eq)
        if (!is_zero_vec(e)) rows.push_back(std::move(e));
    }
  RatMatrix sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys.at(r, c) = rows[r][c];
  std::vector<RatMatrix> basis;
  for (const auto& v : kernel_basis(sys)) {
    RatMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d.at(r, c) = v[idx(r, c)];
    basis.push_back(std::move(d));
  }
  return basis;
}

/// Descending flag V_0 = K^n, V_{k+1} = span{D v : D in Der basis, v in V_k}:
/// vanishes by step n iff every derivation is nilpotent (Engel).
inline bool is_characteristically_nilpotent(const LieAlgebra& a) {
  auto ders = derivation_space(a);
  Subspace v = full_space(a.dim);
  for (std::size_t step = 0; step < a.dim; ++step) {
    std::vector<RatVec> images;
    for (const auto& d : ders)
      for (const auto& w : v.basis) images.push_back(mul(d, w));
    Subspace next = span(a.dim, images);
    if (next == v) break;
    v = std::move(next);
  }
  return v.dim() == 0;
}

/// Dimension of the space of derivations diagonal in the given basis.
inline std::size_t diagonal_derivation_dim(const LieAlgebra& a) {
  const std::size_t n = a.dim;
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& [k, c] : a.bracket_basis(i, j)) {
        (void)c;
        RatVec eq(n, Rat(0));
        eq[i] += 1;
        eq[j] += 1;
        eq[k] -= 1;
        if (!is_zero_vec(eq)) rows.push_back(std::move(eq));
      }
  RatMatrix sys(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) sys.at(r, c) = rows[r][c];
  return kernel_basis(sys).size();
}

/// Rank of a catalog model, computed as the dimension of the diagonal torus
/// in the supplied (quasi-)adapted basis. A maximal-torus computation in an
/// arbitrary basis is out of scope; for the catalog families the maximal
/// torus is diagonal here.
inline std::size_t diagonal_torus_rank(const LieAlgebra& a) {
  if (!is_filiform(a).filiform)
    throw std::invalid_argument("diagonal_torus_rank: input not filiform");
  return diagonal_derivation_dim(a);
}

}  // namespace filigrad
