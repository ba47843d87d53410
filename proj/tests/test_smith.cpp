#include <gtest/gtest.h>

#include "filigrad/smith.hpp"
#include "oracles.hpp"

using namespace filigrad;

namespace {

void check_snf(const IntMatrix& m) {
  SmithResult r = smith_normal_form(m);
  EXPECT_EQ(mul(mul(r.U, m), r.V), r.S);
  Int du = det(r.U), dv = det(r.V);
  EXPECT_TRUE(du == 1 || du == -1);
  EXPECT_TRUE(dv == 1 || dv == -1);
  std::size_t nmin = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (i != j) EXPECT_EQ(sgn(r.S.at(i, j)), 0);
  for (std::size_t i = 0; i + 1 < nmin; ++i) {
    EXPECT_GE(sgn(r.S.at(i, i)), 0);
    if (sgn(r.S.at(i + 1, i + 1)) != 0) {
      ASSERT_NE(sgn(r.S.at(i, i)), 0);
      EXPECT_EQ(sgn(r.S.at(i + 1, i + 1) % r.S.at(i, i)), 0);
    }
  }
}

}  // namespace

TEST(Smith, Diag23) {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  SmithResult r = smith_normal_form(m);
  EXPECT_EQ(r.S.at(0, 0), 1);
  EXPECT_EQ(r.S.at(1, 1), 6);
  check_snf(m);
}

TEST(Smith, ZeroMatrix) {
  IntMatrix m(3, 2);
  SmithResult r = smith_normal_form(m);
  EXPECT_EQ(r.U, IntMatrix::identity(3));
  EXPECT_EQ(r.V, IntMatrix::identity(2));
  EXPECT_EQ(r.S, m);
}

TEST(Smith, RandomProperties) {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 120; ++iter) check_snf(oracle::random_int_matrix(rng, 6, 9));
}

TEST(Smith, Deterministic) {
  std::mt19937 rng(17);
  IntMatrix m = oracle::random_int_matrix(rng, 6, 9);
  SmithResult a = smith_normal_form(m), b = smith_normal_form(m);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.S, b.S);
  EXPECT_EQ(a.V, b.V);
}
