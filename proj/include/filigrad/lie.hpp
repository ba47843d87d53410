#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "filigrad/linalg.hpp"

namespace filigrad {

/// Sparse vector: (basis index, coefficient), sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

inline SparseVec normalize_sparse(SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return sgn(t.second) == 0; }),
            out.end());
  return out;
}

struct JacobiViolation {
  std::size_t i, j, k;
  RatVec residual;
};

class JacobiError : public std::runtime_error {
 public:
  std::vector<JacobiViolation> violations;
  explicit JacobiError(std::vector<JacobiViolation> v)
      : std::runtime_error("structure constants violate the Jacobi identity"),
        violations(std::move(v)) {}
};

/// Lie algebra given by structure constants over a labeled basis.
/// Only pairs i < j are stored; antisymmetry is implicit.
struct LieAlgebra {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> table;
  std::vector<std::string> basis_labels;

  /// [e_i, e_j] as a sparse vector, any i, j.
  SparseVec bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table.find({i, j});
    if (it == table.end()) return {};
    SparseVec v = it->second;
    if (flip)
      for (auto& [k, c] : v) c = -c;
    return v;
  }

  RatVec bracket(const RatVec& x, const RatVec& y) const {
    if (x.size() != dim || y.size() != dim)
      throw std::invalid_argument("bracket: vector length != dim");
    RatVec z(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (sgn(y[j]) == 0) continue;
        Rat f = x[i] * y[j];
        for (const auto& [k, c] : bracket_basis(i, j)) z[k] += f * c;
      }
    }
    return z;
  }

  RatMatrix ad(const RatVec& x) const {
    RatMatrix m(dim, dim);
    RatVec e(dim, Rat(0));
    for (std::size_t j = 0; j < dim; ++j) {
      e[j] = 1;
      RatVec col = bracket(x, e);
      e[j] = 0;
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  bool same_table(const LieAlgebra& o) const { return dim == o.dim && table == o.table; }
};

inline LieAlgebra unchecked_lie(std::size_t dim,
                                std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl,
                                std::vector<std::string> labels = {}) {
  LieAlgebra a;
  a.dim = dim;
  for (auto& [ij, v] : tbl) {
    if (ij.first >= ij.second || ij.second >= dim)
      throw std::invalid_argument("lie table: bad index pair");
    SparseVec nv = normalize_sparse(std::move(v));
    for (const auto& [k, c] : nv)
      if (k >= dim) throw std::invalid_argument("lie table: target out of range");
    if (!nv.empty()) a.table[ij] = std::move(nv);
  }
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("X" + std::to_string(i + 1));
  if (labels.size() != dim) throw std::invalid_argument("lie: label count != dim");
  a.basis_labels = std::move(labels);
  return a;
}

/// All basis triples where the Jacobi identity fails, with residuals.
inline std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& a) {
  std::vector<JacobiViolation> out;
  std::vector<RatVec> e(a.dim, RatVec(a.dim, Rat(0)));
  for (std::size_t i = 0; i < a.dim; ++i) e[i][i] = 1;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      for (std::size_t k = j + 1; k < a.dim; ++k) {
        RatVec r = a.bracket(a.bracket(e[i], e[j]), e[k]);
        RatVec s = a.bracket(a.bracket(e[j], e[k]), e[i]);
        RatVec t = a.bracket(a.bracket(e[k], e[i]), e[j]);
        for (std::size_t m = 0; m < a.dim; ++m) r[m] += s[m] + t[m];
        if (!is_zero_vec(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

/// Checked constructor: rejects tables violating Jacobi.
inline LieAlgebra make_lie(std::size_t dim,
                           std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl,
                           std::vector<std::string> labels = {}) {
  LieAlgebra a = unchecked_lie(dim, std::move(tbl), std::move(labels));
  auto bad = jacobi_violations(a);
  if (!bad.empty()) throw JacobiError(std::move(bad));
  return a;
}

/// Subspace of Q^n held as a reduced-row-echelon basis (canonical).
struct Subspace {
  std::size_t ambient = 0;
  std::vector<RatVec> basis;  // rref rows

  std::size_t dim() const { return basis.size(); }

  bool contains(const RatVec& v) const {
    if (v.size() != ambient) throw std::invalid_argument("contains: length mismatch");
    RatVec w = v;
    for (const auto& row : basis) {
      std::size_t lead = 0;
      while (lead < ambient && sgn(row[lead]) == 0) ++lead;
      if (lead == ambient) continue;
      if (sgn(w[lead]) != 0) {
        Rat f = w[lead];
        for (std::size_t j = 0; j < ambient; ++j) w[j] -= f * row[j];
      }
    }
    return is_zero_vec(w);
  }

  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

inline Subspace span(std::size_t ambient, const std::vector<RatVec>& vectors) {
  RatMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("span: length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
  }
  auto pivots = rref(m);
  Subspace s{ambient, {}};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RatVec row(ambient);
    for (std::size_t j = 0; j < ambient; ++j) row[j] = m.at(r, j);
    s.basis.push_back(std::move(row));
  }
  return s;
}

inline Subspace full_space(std::size_t n) {
  std::vector<RatVec> e(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return span(n, e);
}

inline Subspace span_sum(const Subspace& x, const Subspace& y) {
  std::vector<RatVec> v = x.basis;
  v.insert(v.end(), y.basis.begin(), y.basis.end());
  return span(x.ambient, v);
}

/// span { [x, y] : x in S, y in T }.
inline Subspace bracket_span(const LieAlgebra& a, const Subspace& s, const Subspace& t) {
  std::vector<RatVec> gens;
  for (const auto& x : s.basis)
    for (const auto& y : t.basis) gens.push_back(a.bracket(x, y));
  return span(a.dim, gens);
}

/// g^1 >= g^2 >= ..., ending at the first repeated term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  std::vector<Subspace> series{full_space(a.dim)};
  for (;;) {
    Subspace next = bracket_span(a, series.back(), series.front());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

struct FiliformInfo {
  bool filiform = false;
  std::size_t nilindex = 0;  // largest k with g^k != 0; 0 if not nilpotent
};

inline FiliformInfo is_filiform(const LieAlgebra& a) {
  auto series = lower_central_series(a);
  if (series.back().dim() != 0) return {false, 0};
  std::size_t nilindex = series.size() - 1;
  bool fil = a.dim >= 1 && nilindex == a.dim - 1;
  if (fil && a.dim >= 2) fil = series[1].dim() == a.dim - 2;
  for (std::size_t k = 1; fil && k + 1 < series.size(); ++k)
    fil = series[k].dim() == series[k + 1].dim() + 1;
  return {fil, nilindex};
}

/// gr g = sum g^i / g^{i+1} with the induced bracket. Input must be nilpotent.
/// Basis: echelon representatives of each layer, lifted in order.
inline LieAlgebra associated_graded(const LieAlgebra& a) {
  auto series = lower_central_series(a);
  if (series.back().dim() != 0)
    throw std::invalid_argument("associated_graded: input not nilpotent");
  std::size_t levels = series.size() - 1;  // g^1 .. g^levels nonzero

  std::vector<RatVec> reps;
  std::vector<std::size_t> level_of;
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    // series[lvl-1] = g^lvl, series[lvl] = g^{lvl+1}; reps extend the latter.
    Subspace current = series[lvl];
    for (const auto& row : series[lvl - 1].basis) {
      if (!current.contains(row)) {
        reps.push_back(row);
        level_of.push_back(lvl);
        current = span_sum(current, span(a.dim, {row}));
      }
    }
  }
  if (reps.size() != a.dim)
    throw std::logic_error("associated_graded: representative count mismatch");

  // Coordinates of any vector in the rep basis via one linear solve.
  RatMatrix p(a.dim, a.dim);
  for (std::size_t c = 0; c < a.dim; ++c)
    for (std::size_t r = 0; r < a.dim; ++r) p.at(r, c) = reps[c][r];

  std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl;
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = u + 1; v < a.dim; ++v) {
      std::size_t lvl = level_of[u] + level_of[v];
      if (lvl > levels) continue;
      RatVec b = a.bracket(reps[u], reps[v]);
      auto [ok, coords] = solve(p, b);
      if (!ok) throw std::logic_error("associated_graded: projection failed");
      SparseVec sv;
      for (std::size_t k = 0; k < a.dim; ++k)
        if (level_of[k] == lvl && sgn(coords[k]) != 0) sv.emplace_back(k, coords[k]);
      if (!sv.empty()) tbl[{u, v}] = normalize_sparse(sv);
    }
  return make_lie(a.dim, std::move(tbl));
}

/// Characteristic vector test: u not in g^2 and ad(u)^{n-2} != 0.
inline bool is_characteristic_vector(const LieAlgebra& a, const RatVec& u) {
  auto info = is_filiform(a);
  if (!info.filiform)
    throw std::invalid_argument("is_characteristic_vector: algebra not filiform");
  auto series = lower_central_series(a);
  if (series.size() > 1 && series[1].contains(u)) return false;
  RatMatrix m = a.ad(u);
  RatMatrix pw = RatMatrix::identity(a.dim);
  for (std::size_t k = 0; k + 2 < a.dim; ++k) pw = mul(pw, m);
  for (const auto& x : pw.a)
    if (sgn(x) != 0) return true;
  return false;
}

}  // namespace filigrad
