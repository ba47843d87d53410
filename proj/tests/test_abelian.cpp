#include <gtest/gtest.h>

#include "filigrad/abelian.hpp"

using namespace filigrad;

TEST(Abelian, CanonicalForms) {
  EXPECT_EQ(canonical_group(2, {}).str(), "Z^2");
  EXPECT_EQ(canonical_group(0, {IntVec::value_type(2), IntVec::value_type(3)}).str(), "Z_6");
  FGAbelianGroup g = canonical_group(1, {IntVec::value_type(4), IntVec::value_type(2)});
  EXPECT_EQ(g.free_rank, 1u);
  ASSERT_EQ(g.torsion.size(), 2u);
  EXPECT_EQ(g.torsion[0], 2);
  EXPECT_EQ(g.torsion[1], 4);
  EXPECT_EQ(canonical_group(0, {IntVec::value_type(1)}).str(), "0");
}

// Relation b = a^k b over generators (a, b): the row (k, 0), giving Z_k x Z.
TEST(Abelian, UniversalGroupRelationRow) {
  IntMatrix rel(1, 2);
  rel.at(0, 0) = 3;
  Cokernel ck = cokernel(rel, 2);
  EXPECT_EQ(ck.group.free_rank, 1u);
  ASSERT_EQ(ck.group.torsion.size(), 1u);
  EXPECT_EQ(ck.group.torsion[0], 3);
  // generator images satisfy the relation: 3 * a = 0
  GroupElement a3 = scale(ck.group, 3, ck.gen_images[0]);
  EXPECT_EQ(a3, zero_element(ck.group));
  EXPECT_FALSE(ck.gen_images[0] == zero_element(ck.group));
  EXPECT_FALSE(ck.gen_images[1] == zero_element(ck.group));
}

TEST(Abelian, ElementArithmetic) {
  FGAbelianGroup g = canonical_group(1, {IntVec::value_type(4)});
  GroupElement x = zero_element(g);
  x.free_part[0] = 2;
  x.torsion_part[0] = 3;
  GroupElement y = add(g, x, x);
  EXPECT_EQ(y.free_part[0], 4);
  EXPECT_EQ(y.torsion_part[0], 2);
  EXPECT_EQ(add(g, x, neg(g, x)), zero_element(g));
}

TEST(Abelian, HomValidation) {
  FGAbelianGroup src = canonical_group(0, {IntVec::value_type(4)});
  FGAbelianGroup dst = canonical_group(0, {IntVec::value_type(2)});
  GroupElement one = zero_element(dst);
  one.torsion_part[0] = 1;
  GroupHom h{src, dst, {one}};
  EXPECT_TRUE(h.valid());  // 4 * 1 = 0 mod 2
  FGAbelianGroup dst3 = canonical_group(0, {IntVec::value_type(3)});
  GroupElement one3 = zero_element(dst3);
  one3.torsion_part[0] = 1;
  GroupHom bad{src, dst3, {one3}};
  EXPECT_FALSE(bad.valid());
  GroupHom id = identity_hom(src);
  GroupElement x = zero_element(src);
  x.torsion_part[0] = 3;
  EXPECT_EQ(id.apply(x), x);
}
