#pragma once

#include <optional>
#include <string>

#include "filigrad/lie.hpp"

namespace filigrad {

class InvalidSpec : public std::runtime_error {
 public:
  explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

enum class Kind { L, Q, A, B };

inline std::string kind_str(Kind k) {
  switch (k) {
    case Kind::L: return "L";
    case Kind::Q: return "Q";
    case Kind::A: return "A";
    case Kind::B: return "B";
  }
  return "?";
}

/// Parameters of a catalog model L_n, Q_n, A_n^p(alpha), B_n^p(alpha).
struct ModelSpec {
  Kind kind = Kind::L;
  std::size_t n = 0;
  std::size_t p = 0;   // kinds A, B only
  RatVec alphas;       // kinds A, B only

  /// Number of alpha parameters the bracket table actually uses.
  static std::size_t alpha_count(Kind kind, std::size_t n, std::size_t p) {
    if (kind == Kind::A) return (n - p) / 2 - 1;
    if (kind == Kind::B) return (n - p - 3) / 2;
    return 0;
  }

  void validate() const {
    switch (kind) {
      case Kind::L:
        if (n < 3) throw InvalidSpec("L_n requires n >= 3");
        break;
      case Kind::Q:
        if (n < 6 || n % 2 != 0) throw InvalidSpec("Q_n requires even n >= 6");
        break;
      case Kind::A:
        if (n < 4) throw InvalidSpec("A_n^p requires n >= 4");
        if (p < 1 || p > n - 4) throw InvalidSpec("A_n^p requires 1 <= p <= n-4");
        if (alphas.size() != alpha_count(kind, n, p))
          throw InvalidSpec("A_n^p expects " + std::to_string(alpha_count(kind, n, p)) +
                            " alpha parameters");
        break;
      case Kind::B:
        if (n < 6 || n % 2 != 0) throw InvalidSpec("B_n^p requires even n >= 6");
        if (p < 1 || p > n - 5) throw InvalidSpec("B_n^p requires 1 <= p <= n-5");
        if (alphas.size() != alpha_count(kind, n, p))
          throw InvalidSpec("B_n^p expects " + std::to_string(alpha_count(kind, n, p)) +
                            " alpha parameters");
        break;
    }
  }

  std::string str() const {
    std::string s = kind_str(kind) + "_" + std::to_string(n);
    if (kind == Kind::A || kind == Kind::B) {
      s += "^" + std::to_string(p) + "(";
      for (std::size_t i = 0; i < alphas.size(); ++i)
        s += (i ? "," : "") + rat_str(alphas[i]);
      s += ")";
    }
    return s;
  }
};

/// The a_{i,j} coefficients: a_{i,i} = 0, a_{i,i+1} = alpha_i,
/// a_{i,j} = a_{i+1,j} + a_{i,j+1}, populated for i <= j, i+j <= max_sum.
struct CoeffTable {
  std::size_t max_sum = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rat> values;

  const Rat& at(std::size_t i, std::size_t j) const {
    auto it = values.find({i, j});
    if (it == values.end()) throw std::out_of_range("CoeffTable::at: (i,j) outside domain");
    return it->second;
  }
};

/// Solve the recursion along increasing anti-diagonals from the boundary data.
/// alphas[i-1] = alpha_i; exactly floor((max_sum-1)/2) values are consumed.
inline CoeffTable coeff_table(std::size_t max_sum, const RatVec& alphas) {
  std::size_t need = max_sum >= 3 ? (max_sum - 1) / 2 : 0;
  if (alphas.size() < need)
    throw InvalidSpec("coeff_table: need " + std::to_string(need) + " alphas for max_sum " +
                      std::to_string(max_sum));
  CoeffTable t;
  t.max_sum = max_sum;
  for (std::size_t d = 2; d <= max_sum; ++d) {
    for (std::size_t i = d / 2; i >= 1; --i) {  // a(i,j) needs a(i+1,j-1) on the same diagonal
      std::size_t j = d - i;
      Rat v;
      if (j == i)
        v = 0;
      else if (j == i + 1)
        v = alphas[i - 1];
      else
        v = t.at(i, j - 1) - t.at(i + 1, j - 1);
      t.values[{i, j}] = v;
    }
  }
  return t;
}

/// Bracket tables of the four classified families. Kinds L, A come out in an
/// adapted basis X1..Xn, kinds Q, B in a quasi-adapted basis Y1..Yn.
/// Throws JacobiError when the alpha parameters do not define a Lie algebra.
inline LieAlgebra make_model(const ModelSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl;
  std::vector<std::string> labels;
  const bool quasi = spec.kind == Kind::Q || spec.kind == Kind::B;
  for (std::size_t i = 1; i <= n; ++i)
    labels.push_back((quasi ? "Y" : "X") + std::to_string(i));

  // thread [e1, e_i] = e_{i+1}; stops one short in the quasi-adapted basis
  std::size_t thread_top = quasi ? n - 2 : n - 1;
  for (std::size_t i = 2; i <= thread_top; ++i) tbl[{0, i - 1}] = {{i, Rat(1)}};

  if (quasi) {
    std::size_t m = n / 2;
    for (std::size_t i = 2; i <= m; ++i) {
      Rat sign = (i % 2 == 1) ? Rat(1) : Rat(-1);  // (-1)^{i+1}
      tbl[{i - 1, n - i}] = {{n - 1, sign}};
    }
  }

  if (spec.kind == Kind::A || spec.kind == Kind::B) {
    std::size_t max_pair_sum = spec.kind == Kind::A ? n - spec.p + 1 : n - spec.p;
    CoeffTable ct = coeff_table(max_pair_sum - 2, spec.alphas);
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t j = i + 1; i + j <= max_pair_sum; ++j) {
        const Rat& c = ct.at(i - 1, j - 1);
        if (sgn(c) == 0) continue;
        std::size_t target = i + j + spec.p - 1;  // 1-based
        auto& cell = tbl[{i - 1, j - 1}];
        cell.emplace_back(target - 1, c);
      }
  }
  return make_lie(n, std::move(tbl), std::move(labels));
}

/// The 7-dimensional characteristically nilpotent (indeed unipotent) algebra.
inline LieAlgebra n7_4() {
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl;
  for (std::size_t i = 1; i <= 5; ++i) tbl[{0, i}] = {{i + 1, Rat(1)}};
  tbl[{1, 2}] = {{5, Rat(-1)}};
  tbl[{1, 3}] = {{6, Rat(-1)}};
  tbl[{1, 4}] = {{6, Rat(-1)}};
  tbl[{2, 3}] = {{6, Rat(1)}};
  return make_lie(7, std::move(tbl));
}

/// Dixmier-Lister: 8-dimensional, nilindex 3, characteristically nilpotent,
/// not filiform.
inline LieAlgebra dixmier_lister() {
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl;
  tbl[{0, 1}] = {{4, Rat(1)}};
  tbl[{0, 2}] = {{5, Rat(1)}};
  tbl[{0, 3}] = {{6, Rat(1)}};
  tbl[{0, 4}] = {{7, Rat(-1)}};
  tbl[{1, 2}] = {{7, Rat(1)}};
  tbl[{1, 3}] = {{5, Rat(1)}};
  tbl[{1, 5}] = {{6, Rat(-1)}};
  tbl[{2, 3}] = {{4, Rat(-1)}};
  tbl[{2, 4}] = {{6, Rat(-1)}};
  tbl[{3, 5}] = {{7, Rat(-1)}};
  return make_lie(8, std::move(tbl));
}

/// Order-2 non-unipotent automorphism of the Dixmier-Lister algebra:
/// X1, X3, X6 are fixed, the other basis vectors are negated.
inline RatMatrix dixmier_lister_sigma() {
  RatMatrix s(8, 8);
  for (std::size_t i = 0; i < 8; ++i) s.at(i, i) = (i == 0 || i == 2 || i == 5) ? 1 : -1;
  return s;
}

/// Is phi (column j = phi(e_j)) an automorphism of a?
inline bool is_automorphism(const LieAlgebra& a, const RatMatrix& phi) {
  if (phi.rows != a.dim || phi.cols != a.dim) return false;
  if (rank(phi) != a.dim) return false;
  std::vector<RatVec> img(a.dim, RatVec(a.dim));
  for (std::size_t j = 0; j < a.dim; ++j)
    for (std::size_t i = 0; i < a.dim; ++i) img[j][i] = phi.at(i, j);
  RatVec ei(a.dim, Rat(0)), ej(a.dim, Rat(0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      ei[i] = 1;
      ej[j] = 1;
      RatVec lhs = a.bracket(img[i], img[j]);
      RatVec rhs = mul(phi, a.bracket(ei, ej));
      ei[i] = 0;
      ej[j] = 0;
      if (lhs != rhs) return false;
    }
  return true;
}

/// Conjugate a by the basis change P (column j = new basis vector f_j in old
/// coordinates): returns the algebra in the f basis.
inline LieAlgebra conjugate(const LieAlgebra& a, const RatMatrix& p,
                            std::vector<std::string> labels = {}) {
  if (p.rows != a.dim || p.cols != a.dim) throw std::invalid_argument("conjugate: bad shape");
  std::vector<RatVec> f(a.dim, RatVec(a.dim));
  for (std::size_t j = 0; j < a.dim; ++j)
    for (std::size_t i = 0; i < a.dim; ++i) f[j][i] = p.at(i, j);
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> tbl;
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = u + 1; v < a.dim; ++v) {
      auto [ok, coords] = solve(p, a.bracket(f[u], f[v]));
      if (!ok) throw std::invalid_argument("conjugate: matrix not invertible");
      SparseVec sv;
      for (std::size_t k = 0; k < a.dim; ++k)
        if (sgn(coords[k]) != 0) sv.emplace_back(k, coords[k]);
      if (!sv.empty()) tbl[{u, v}] = std::move(sv);
    }
  return unchecked_lie(a.dim, std::move(tbl), std::move(labels));
}

/// Check the adapted-basis conditions: pure thread [X1,Xi]=X_{i+1} (i=2..n-1),
/// [X2,X3] in <X5..Xn>, [Xi,X_{n-i+1}] = (-1)^{i+1} alpha Xn with one alpha
/// (alpha = 0 forced for odd n), and g^i = <X_{i+1}..Xn> for i >= 2.
inline std::optional<std::string> adapted_basis_defect(const LieAlgebra& a) {
  const std::size_t n = a.dim;
  if (n < 3) return "dimension below 3";
  for (std::size_t i = 1; i + 1 < n; ++i) {
    SparseVec v = a.bracket_basis(0, i);
    if (v.size() != 1 || v[0].first != i + 1 || v[0].second != 1)
      return "thread bracket [X1,X" + std::to_string(i + 1) + "] is not X" + std::to_string(i + 2);
  }
  if (!a.bracket_basis(0, n - 1).empty()) return "[X1,Xn] nonzero";
  for (const auto& [k, c] : a.bracket_basis(1, 2))
    if (k < 4) return "[X2,X3] leaves <X5..Xn>";
  std::optional<Rat> alpha;
  for (std::size_t i = 2; 2 * i <= n; ++i) {
    SparseVec v = a.bracket_basis(i - 1, n - i);  // [X_i, X_{n-i+1}]
    Rat c(0);
    for (const auto& [k, cc] : v) {
      if (k != n - 1) return "[Xi,X_{n-i+1}] leaves <Xn>";
      c = cc;
    }
    Rat this_alpha = (i % 2 == 1) ? c : -c;  // divide by (-1)^{i+1}
    if (!alpha)
      alpha = this_alpha;
    else if (*alpha != this_alpha)
      return "inconsistent alpha in [Xi,X_{n-i+1}] relations";
  }
  if (n % 2 == 1 && alpha && sgn(*alpha) != 0) return "odd dimension requires alpha = 0";
  auto series = lower_central_series(a);
  for (std::size_t i = 2; i < series.size(); ++i) {
    std::vector<RatVec> tail;
    for (std::size_t k = i; k < n; ++k) {
      RatVec e(n, Rat(0));
      e[k] = 1;
      tail.push_back(e);
    }
    if (!(series[i - 1] == span(n, tail)))
      return "g^" + std::to_string(i) + " differs from <X" + std::to_string(i + 1) + "..Xn>";
  }
  return std::nullopt;
}

/// Basis change from a quasi-adapted basis to an adapted one. Returns the
/// change matrix (column j = adapted X_{j+1} in the given coordinates). For an
/// already adapted input this is the identity; otherwise the adapted basis is
/// generated from X1 = Y1 - Y2, X2 = Y2 by the thread X_{i+1} = [X1, X_i].
inline RatMatrix quasi_to_adapted(const LieAlgebra& a) {
  if (!adapted_basis_defect(a)) return RatMatrix::identity(a.dim);
  const std::size_t n = a.dim;
  std::vector<RatVec> x(n, RatVec(n, Rat(0)));
  x[0][0] = 1;
  x[0][1] = -1;
  x[1][1] = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) x[i + 1] = a.bracket(x[0], x[i]);
  RatMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) = x[j][i];
  if (rank(p) != n)
    throw std::invalid_argument("quasi_to_adapted: generated thread is not a basis");
  LieAlgebra b = conjugate(a, p);
  if (auto defect = adapted_basis_defect(b))
    throw std::invalid_argument("quasi_to_adapted: " + *defect);
  return p;
}

}  // namespace filigrad
