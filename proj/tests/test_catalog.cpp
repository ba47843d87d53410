#include <gtest/gtest.h>

#include "filigrad/catalog.hpp"
#include "oracles.hpp"

using namespace filigrad;

namespace {

// Independent oracle: solve the a_{i,j} recursion as one linear system
// (boundary rows plus the untransposed relation a_{i,j} - a_{i+1,j} - a_{i,j+1} = 0).
std::map<std::pair<std::size_t, std::size_t>, Rat> coeff_oracle(std::size_t max_sum,
                                                                const RatVec& alphas) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t i = 1; 2 * i <= max_sum; ++i)
    for (std::size_t j = i; i + j <= max_sum; ++j) {
      pos[{i, j}] = cells.size();
      cells.emplace_back(i, j);
    }
  std::vector<RatVec> rows;
  RatVec rhs;
  for (const auto& [i, j] : cells) {
    if (j == i) {
      RatVec r(cells.size(), Rat(0));
      r[pos.at({i, j})] = 1;
      rows.push_back(r);
      rhs.push_back(Rat(0));
    } else if (j == i + 1) {
      RatVec r(cells.size(), Rat(0));
      r[pos.at({i, j})] = 1;
      rows.push_back(r);
      rhs.push_back(alphas[i - 1]);
    }
    if (pos.count({i + 1, j}) && pos.count({i, j + 1})) {
      RatVec r(cells.size(), Rat(0));
      r[pos.at({i, j})] = 1;
      r[pos.at({i + 1, j})] -= 1;
      r[pos.at({i, j + 1})] -= 1;
      rows.push_back(r);
      rhs.push_back(Rat(0));
    }
  }
  RatMatrix sys(rows.size(), cells.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cells.size(); ++c) sys.at(r, c) = rows[r][c];
  EXPECT_TRUE(kernel_basis(sys).empty()) << "recursion system should pin every entry";
  auto [ok, x] = solve(sys, rhs);
  EXPECT_TRUE(ok);
  std::map<std::pair<std::size_t, std::size_t>, Rat> out;
  for (std::size_t c = 0; c < cells.size(); ++c) out[cells[c]] = x[c];
  return out;
}

}  // namespace

TEST(CoeffTable, ZeroAlphasGiveZeroTable) {
  CoeffTable t = coeff_table(7, RatVec(3, Rat(0)));
  for (const auto& [ij, v] : t.values) EXPECT_EQ(sgn(v), 0) << ij.first << "," << ij.second;
}

TEST(CoeffTable, BoundaryAndRecursion) {
  RatVec alphas{rat(1), rat(0), rat(0)};
  CoeffTable t = coeff_table(8, alphas);
  EXPECT_EQ(t.at(1, 2), rat(1));
  EXPECT_EQ(t.at(2, 3), rat(0));
  // frozen from the oracle run: with alphas (1,0,...), a_{1,j} = 1 for all j
  EXPECT_EQ(t.at(1, 4), rat(1));
  auto expect = coeff_oracle(8, alphas);
  for (const auto& [ij, v] : expect) EXPECT_EQ(t.at(ij.first, ij.second), v);
}

TEST(CoeffTable, MatchesOracleOnGenericAlphas) {
  RatVec alphas{rat(2), rat(-1, 3), rat(5, 2)};
  CoeffTable t = coeff_table(8, alphas);
  auto expect = coeff_oracle(8, alphas);
  ASSERT_EQ(expect.size(), t.values.size());
  for (const auto& [ij, v] : expect) EXPECT_EQ(t.at(ij.first, ij.second), v);
  // defining recursion holds identically on its domain
  for (const auto& [ij, v] : t.values) {
    auto [i, j] = ij;
    if (t.values.count({i + 1, j}) && t.values.count({i, j + 1}))
      EXPECT_EQ(v, t.at(i + 1, j) + t.at(i, j + 1));
  }
}

TEST(MakeModel, L5Brackets) {
  LieAlgebra l5 = make_model({Kind::L, 5});
  EXPECT_EQ(l5.table.size(), 3u);
  for (std::size_t i = 2; i <= 4; ++i) {
    SparseVec v = l5.bracket_basis(0, i - 1);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].first, i);
    EXPECT_EQ(v[0].second, rat(1));
  }
}

TEST(MakeModel, Q6Table) {
  LieAlgebra q6 = make_model({Kind::Q, 6});
  EXPECT_EQ(q6.table.size(), 5u);  // thread (3) + two symplectic pairs
  EXPECT_EQ(q6.bracket_basis(1, 4), (SparseVec{{5, rat(-1)}}));
  EXPECT_EQ(q6.bracket_basis(2, 3), (SparseVec{{5, rat(1)}}));
  EXPECT_TRUE(q6.bracket_basis(0, 4).empty());  // quasi-adapted thread stops at Y_{n-2}
}

TEST(MakeModel, AZeroAlphasIsL) {
  LieAlgebra a = make_model({Kind::A, 6, 1, {rat(0)}});
  EXPECT_TRUE(a.same_table(make_model({Kind::L, 6})));
}

TEST(MakeModel, A61EmbedsCoeffTable) {
  LieAlgebra a = make_model({Kind::A, 6, 1, {rat(1)}});
  EXPECT_EQ(a.bracket_basis(1, 2), (SparseVec{{4, rat(1)}}));  // [X2,X3] = a_{1,2} X5
  EXPECT_EQ(a.bracket_basis(1, 3), (SparseVec{{5, rat(1)}}));  // [X2,X4] = a_{1,3} X6
  EXPECT_TRUE(a.bracket_basis(2, 3).empty());
}

TEST(MakeModel, InvalidSpecs) {
  EXPECT_THROW(make_model({Kind::L, 2}), InvalidSpec);
  EXPECT_THROW(make_model({Kind::Q, 7}), InvalidSpec);
  EXPECT_THROW(make_model({Kind::Q, 4}), InvalidSpec);
  EXPECT_THROW(make_model({Kind::A, 6, 3, {rat(1)}}), InvalidSpec);
  EXPECT_THROW(make_model({Kind::A, 6, 1, {rat(1), rat(1)}}), InvalidSpec);
  EXPECT_THROW(make_model({Kind::B, 8, 4, {}}), InvalidSpec);
}

TEST(MakeModel, CatalogIsFiliform) {
  for (std::size_t n = 3; n <= 10; ++n) {
    auto info = is_filiform(make_model({Kind::L, n}));
    EXPECT_TRUE(info.filiform);
    EXPECT_EQ(info.nilindex, n - 1);
  }
  for (std::size_t n : {6u, 8u, 10u}) {
    auto info = is_filiform(make_model({Kind::Q, n}));
    EXPECT_TRUE(info.filiform);
    EXPECT_EQ(info.nilindex, n - 1);
  }
}

TEST(MakeModel, Deterministic) {
  ModelSpec s{Kind::B, 8, 1, {rat(1), rat(-2)}};
  EXPECT_TRUE(make_model(s).same_table(make_model(s)));
}

TEST(QuasiToAdapted, AlreadyAdaptedGivesIdentity) {
  EXPECT_EQ(quasi_to_adapted(make_model({Kind::L, 7})), RatMatrix::identity(7));
  EXPECT_EQ(quasi_to_adapted(make_model({Kind::A, 6, 1, {rat(1)}})), RatMatrix::identity(6));
}

TEST(QuasiToAdapted, Q6) {
  LieAlgebra q6 = make_model({Kind::Q, 6});
  RatMatrix p = quasi_to_adapted(q6);
  RatMatrix expect = RatMatrix::identity(6);
  expect.at(1, 0) = -1;  // X1 = Y1 - Y2
  EXPECT_EQ(p, expect);
  LieAlgebra adapted = conjugate(q6, p);
  EXPECT_FALSE(adapted_basis_defect(adapted).has_value());
  for (std::size_t i = 1; i <= 4; ++i)
    EXPECT_EQ(adapted.bracket_basis(0, i), (SparseVec{{i + 1, rat(1)}}));
}

TEST(QuasiToAdapted, B81SatisfiesAdaptedConditions) {
  // oracle: explicit conjugation checked bracket by bracket for n = 8
  LieAlgebra b = make_model({Kind::B, 8, 1, {rat(1), rat(-2)}});
  RatMatrix p = quasi_to_adapted(b);
  LieAlgebra adapted = conjugate(b, p);
  EXPECT_FALSE(adapted_basis_defect(adapted).has_value());
  // [X_i, X_{n-i+1}] = (-1)^{i+1} alpha X_n with alpha = 1
  EXPECT_EQ(adapted.bracket_basis(1, 6), (SparseVec{{7, rat(-1)}}));
  EXPECT_EQ(adapted.bracket_basis(2, 5), (SparseVec{{7, rat(1)}}));
  EXPECT_EQ(adapted.bracket_basis(3, 4), (SparseVec{{7, rat(-1)}}));
  // jacobi is preserved by the change of basis
  EXPECT_TRUE(oracle::jacobi_holds_bruteforce(adapted));
}

TEST(MakeModel, InvalidAlphasSurfaceViolatingTriples) {
  // B_8^1 closes under Jacobi only when alpha_2 = -2 alpha_1
  try {
    make_model({Kind::B, 8, 1, {rat(1), rat(0)}});
    FAIL() << "expected JacobiError";
  } catch (const JacobiError& e) {
    ASSERT_FALSE(e.violations.empty());
    EXPECT_EQ(e.violations[0].i, 1u);
    EXPECT_EQ(e.violations[0].j, 2u);
    EXPECT_EQ(e.violations[0].k, 3u);
  }
}

TEST(NamedAlgebras, ConstructorsVerifyJacobi) {
  EXPECT_TRUE(oracle::jacobi_holds_bruteforce(n7_4()));
  EXPECT_TRUE(oracle::jacobi_holds_bruteforce(dixmier_lister()));
}

TEST(NamedAlgebras, DixmierListerInvolution) {
  LieAlgebra dl = dixmier_lister();
  RatMatrix sigma = dixmier_lister_sigma();
  EXPECT_TRUE(is_automorphism(dl, sigma));
  EXPECT_EQ(mul(sigma, sigma), RatMatrix::identity(8));
  EXPECT_FALSE(sigma == RatMatrix::identity(8));
  // a plain basis swap X1<->X5, X2<->X7, X4<->X8 is ruled out by ad ranks
  RatMatrix swap(8, 8);
  swap.at(4, 0) = 1, swap.at(0, 4) = 1;
  swap.at(6, 1) = 1, swap.at(1, 6) = 1;
  swap.at(7, 3) = 1, swap.at(3, 7) = 1;
  swap.at(2, 2) = -1, swap.at(5, 5) = -1;
  EXPECT_FALSE(is_automorphism(dl, swap));
}
