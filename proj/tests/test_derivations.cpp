#include <gtest/gtest.h>

#include "filigrad/catalog.hpp"
#include "filigrad/derivations.hpp"
#include "oracles.hpp"

using namespace filigrad;

namespace {

bool satisfies_leibniz(const LieAlgebra& a, const RatMatrix& d) {
  RatVec ei(a.dim, Rat(0)), ej(a.dim, Rat(0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      ei[i] = 1;
      ej[j] = 1;
      RatVec lhs = mul(d, a.bracket(ei, ej));
      RatVec r1 = a.bracket(mul(d, ei), ej);
      RatVec r2 = a.bracket(ei, mul(d, ej));
      ei[i] = 0;
      ej[j] = 0;
      for (std::size_t m = 0; m < a.dim; ++m)
        if (lhs[m] != r1[m] + r2[m]) return false;
    }
  return true;
}

}  // namespace

TEST(DerivationSpace, AbelianIsFullGl) {
  EXPECT_EQ(derivation_space(make_lie(2, {})).size(), 4u);
}

TEST(DerivationSpace, N74HasDimensionTen) {
  EXPECT_EQ(derivation_space(n7_4()).size(), 10u);
}

TEST(DerivationSpace, L4AgainstEliminationOracle) {
  LieAlgebra l4 = make_model({Kind::L, 4});
  RatMatrix sys = oracle::leibniz_system(l4);
  std::size_t nullity = sys.cols - oracle::bareiss_rank(sys);
  auto ders = derivation_space(l4);
  EXPECT_EQ(ders.size(), nullity);
  EXPECT_EQ(ders.size(), 7u);  // frozen from the oracle
}

TEST(DerivationSpace, BasisSatisfiesLeibnizAndContainsAd) {
  for (const LieAlgebra& a :
       {make_model({Kind::Q, 6}), make_model({Kind::A, 7, 2, {rat(1)}}), dixmier_lister()}) {
    auto ders = derivation_space(a);
    for (const auto& d : ders) EXPECT_TRUE(satisfies_leibniz(a, d));
    // inner derivations lie in the computed space
    RatMatrix span_sys(a.dim * a.dim, ders.size() + 1);
    RatVec e(a.dim, Rat(0));
    for (std::size_t g = 0; g < a.dim; ++g) {
      e[g] = 1;
      RatMatrix ad = a.ad(e);
      e[g] = 0;
      for (std::size_t c = 0; c < ders.size(); ++c)
        for (std::size_t r = 0; r < a.dim; ++r)
          for (std::size_t s = 0; s < a.dim; ++s)
            span_sys.at(r * a.dim + s, c) = ders[c].at(r, s);
      RatVec rhs(a.dim * a.dim);
      for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t s = 0; s < a.dim; ++s) rhs[r * a.dim + s] = ad.at(r, s);
      RatMatrix coeffs(a.dim * a.dim, ders.size());
      for (std::size_t r = 0; r < a.dim * a.dim; ++r)
        for (std::size_t c = 0; c < ders.size(); ++c) coeffs.at(r, c) = span_sys.at(r, c);
      auto [ok, x] = solve(coeffs, rhs);
      EXPECT_TRUE(ok) << "ad(e_" << g << ") outside Der";
      (void)x;
    }
  }
}

TEST(CharNilpotent, SpecExamples) {
  EXPECT_FALSE(is_characteristically_nilpotent(make_model({Kind::L, 6})));
  EXPECT_FALSE(is_characteristically_nilpotent(make_model({Kind::L, 8})));
  EXPECT_TRUE(is_characteristically_nilpotent(n7_4()));
  EXPECT_TRUE(is_characteristically_nilpotent(dixmier_lister()));
  EXPECT_FALSE(is_characteristically_nilpotent(make_lie(3, {})));
}

TEST(DiagonalTorusRank, CatalogTable) {
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::L, 5})), 2u);
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::L, 9})), 2u);
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::Q, 6})), 2u);
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::Q, 8})), 2u);
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::A, 6, 1, {rat(1)}})), 1u);
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::A, 8, 2, {rat(1), rat(0)}})), 1u);
  EXPECT_EQ(diagonal_torus_rank(make_model({Kind::B, 8, 1, {rat(1), rat(-2)}})), 1u);
  EXPECT_EQ(diagonal_torus_rank(n7_4()), 0u);
  EXPECT_THROW(diagonal_torus_rank(dixmier_lister()), std::invalid_argument);
  EXPECT_EQ(diagonal_derivation_dim(dixmier_lister()), 0u);
}

TEST(CharNilpotent, ImpliesRankZero) {
  for (const LieAlgebra& a : {n7_4(), dixmier_lister()}) {
    ASSERT_TRUE(is_characteristically_nilpotent(a));
    EXPECT_EQ(diagonal_derivation_dim(a), 0u);
  }
}
