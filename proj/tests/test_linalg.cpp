#include <gtest/gtest.h>

#include "filigrad/linalg.hpp"
#include "oracles.hpp"

using namespace filigrad;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(rat_str(parse_rat("6/4")), "3/2");
  EXPECT_EQ(rat_str(parse_rat("-6/4")), "-3/2");
  EXPECT_EQ(rat_str(parse_rat("5")), "5");
  EXPECT_EQ(parse_rat("2/3") + parse_rat("1/3"), Rat(1));
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
  EXPECT_THROW(rat(1, 0), std::invalid_argument);
}

TEST(Kernel, FullRankIdentityIsEmpty) {
  EXPECT_TRUE(kernel_basis(RatMatrix::identity(2)).empty());
}

TEST(Kernel, SingleEquation) {
  RatMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  auto basis = kernel_basis(m);
  ASSERT_EQ(basis.size(), 1u);
  // canonical form: free coordinate set to 1
  EXPECT_EQ(basis[0], (RatVec{Rat(-1), Rat(1)}));
  // spans the stated solution (1, -1)
  EXPECT_EQ(basis[0][0] * Rat(-1), Rat(1));
  EXPECT_EQ(basis[0][1] * Rat(-1), Rat(-1));
}

TEST(Kernel, RankNullityOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 80; ++iter) {
    RatMatrix m = oracle::random_rat_matrix(rng, 6, 5);
    auto basis = kernel_basis(m);
    EXPECT_EQ(rank(m) + basis.size(), m.cols);
    EXPECT_EQ(oracle::bareiss_rank(m) + basis.size(), m.cols);
    for (const auto& v : basis) EXPECT_TRUE(is_zero_vec(mul(m, v)));
  }
}

TEST(Kernel, Canonical) {
  std::mt19937 rng(11);
  RatMatrix m = oracle::random_rat_matrix(rng, 6, 5);
  auto a = kernel_basis(m);
  auto b = kernel_basis(m);
  EXPECT_EQ(a, b);
}

TEST(Solve, ConsistentAndInconsistent) {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  auto [ok, x] = solve(m, RatVec{Rat(3), Rat(6)});
  ASSERT_TRUE(ok);
  EXPECT_TRUE(is_zero_vec({m.at(0, 0) * x[0] + m.at(0, 1) * x[1] - 3,
                           m.at(1, 0) * x[0] + m.at(1, 1) * x[1] - 6}));
  auto [ok2, x2] = solve(m, RatVec{Rat(3), Rat(7)});
  EXPECT_FALSE(ok2);
  (void)x2;
}
