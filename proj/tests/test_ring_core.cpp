#include <gtest/gtest.h>

#include "nuore/nuore.hpp"

using namespace nuore;

TEST(FiniteTable, RejectsNonAssociativeTable) {
  // g1 g1 = g2, g1 g2 = g1 makes (g1 g1) g1 != g1 (g1 g1)
  EXPECT_THROW(make_finite_table({2, 2}, {{{0, 1}, {1, 0}}, {{1, 0}, {0, 0}}}),
               Error);
}

TEST(FiniteTable, TruncatedPolynomialArithmetic) {
  // Z/3[t]/(t^2): (1 + t)(1 + 2t) = 1 + 3t + 2t^2 = 1
  auto r = make_finite_table({3, 3}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
  Element a = el_coords(r, {1, 1});
  Element b = el_coords(r, {1, 2});
  EXPECT_EQ(r->mul(a, b), el_coords(r, {1, 0}));
  EXPECT_TRUE(r->identity());
  EXPECT_EQ(*r->identity(), el_coords(r, {1, 0}));
}

TEST(Zmod, FlagsAndIdempotents) {
  auto r = make_zmod(12);
  EXPECT_TRUE(r->flags().unital.yes());
  EXPECT_TRUE(r->flags().commutative.yes());
  auto idems = enumerate_idempotents(r);
  ASSERT_EQ(idems.size(), 4u);  // 0, 1, 4, 9
  EXPECT_EQ(idems[0], el_zmod(r, 0));
  EXPECT_EQ(idems[1], el_zmod(r, 1));
  EXPECT_EQ(idems[2], el_zmod(r, 4));
  EXPECT_EQ(idems[3], el_zmod(r, 9));
  EXPECT_TRUE(make_zmod(7)->flags().simple.yes());
  EXPECT_FALSE(make_zmod(6)->flags().simple.yes());
}

TEST(Matrix, ProductsAndCenter) {
  auto z2 = make_zmod(2);
  auto m = make_matrix(z2, 2);
  Element e12 = el_matrix(m, {z2->zero(), *z2->identity(), z2->zero(), z2->zero()});
  Element e21 = el_matrix(m, {z2->zero(), z2->zero(), *z2->identity(), z2->zero()});
  Element e11 = el_matrix(m, {*z2->identity(), z2->zero(), z2->zero(), z2->zero()});
  EXPECT_EQ(m->mul(e12, e21), e11);
  EXPECT_TRUE(m->is_zero(m->mul(e12, e12)));
  auto center = center_of(m);
  ASSERT_EQ(center.size(), 2u);  // 0 and I
  EXPECT_TRUE(m->flags().simple.yes());
}

TEST(MInf, MatrixUnitsMultiplyByIndexMatching) {
  auto m = make_minf_q();
  Element a = el_unit(m, 1, 2);
  Element b = el_unit(m, 2, 3);
  EXPECT_EQ(m->mul(a, b), el_unit(m, 1, 3));
  EXPECT_TRUE(m->is_zero(m->mul(b, a)));
  EXPECT_FALSE(m->identity());
  EXPECT_TRUE(m->flags().enough_idempotents.yes());
  EXPECT_FALSE(m->flags().unital.yes());
}

TEST(MInf, SUnitCoversAnyFiniteSet) {
  auto m = make_minf_q();
  Element a = m->add(el_unit(m, 1, 4), el_unit(m, 3, 2));
  auto d = find_s_unit(m, {a});
  ASSERT_TRUE(d);
  EXPECT_EQ(m->mul(*d, a), a);
  EXPECT_EQ(m->mul(a, *d), a);
}

TEST(Poly, DegreesAndProducts) {
  auto q = make_rationals();
  auto p = make_poly(q, "y");
  Element y = el_poly(p, {el_rat(q, Rat(0)), el_rat(q, Rat(1))});
  Element y2 = p->mul(y, y);
  EXPECT_EQ(y2, el_poly(p, {el_rat(q, Rat(0)), el_rat(q, Rat(0)), el_rat(q, Rat(1))}));
  EXPECT_TRUE(p->flags().commutative.yes());
  EXPECT_FALSE(p->flags().simple.yes());
}

TEST(Unitalize, DorrohProductRule) {
  auto r = make_zmod(6);
  auto u = unitalize(r);
  // (r,n)(s,m) = (rs + ns + mr, nm)
  Element x = el_pair(u, el_zmod(r, 4), 2);
  Element y = el_pair(u, el_zmod(r, 5), -1);
  Element xy = u->mul(x, y);
  auto [base, n] = pair_parts(xy);
  EXPECT_EQ(base, el_zmod(r, 2));  // 4*5 + 2*5 - 1*4 = 26 = 2 mod 6
  EXPECT_EQ(n, -2);
  EXPECT_TRUE(u->flags().unital.yes());
}

TEST(Corner, SubringOfFiniteRing) {
  auto z2 = make_zmod(2);
  auto m = make_matrix(z2, 2);
  Element e11 = el_matrix(m, {*z2->identity(), z2->zero(), z2->zero(), z2->zero()});
  auto corner = corner_ring(m, e11);
  EXPECT_EQ(corner->carrier_size(), 2u);  // 0 and e11
  EXPECT_TRUE(corner->flags().unital.yes());
  EXPECT_EQ(*corner->identity(), corner->tag(e11.value));
}

TEST(Classify, ChainMembershipMatchesConstruction) {
  EXPECT_EQ(classify_unitality(make_zmod(6)).finest, "unital");
  auto rowring = make_finite_table({2, 2}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}});
  EXPECT_EQ(classify_unitality(rowring).finest, "idempotent");
  auto zero = make_finite_table({2}, {{{0}}});
  EXPECT_EQ(classify_unitality(zero).finest, "none");
  EXPECT_EQ(classify_unitality(make_minf_q()).finest, "enough-idempotents");
}

TEST(Classify, ChainIsMonotone) {
  for (const auto& ent : builtin_corpus()) {
    const auto& f = ent.ring->flags();
    const Flag* chain[5] = {&f.unital, &f.enough_idempotents, &f.locally_unital,
                            &f.s_unital, &f.idempotent_ring};
    for (int i = 0; i + 1 < 5; ++i) {
      if (chain[i]->yes()) EXPECT_TRUE(chain[i + 1]->yes()) << ent.name << " " << i;
      if (chain[i + 1]->no()) EXPECT_TRUE(chain[i]->no()) << ent.name << " " << i;
    }
  }
}

TEST(CanonicalSamples, NonemptyAndDistinctOnEveryBackend) {
  for (const auto& ring :
       {make_zmod(4), make_rationals(), make_minf_q(),
        make_matrix(make_rationals(), 2), make_poly(make_rationals(), "t"),
        unitalize(make_zmod(6))}) {
    auto s = canonical_samples(ring);
    EXPECT_GE(s.size(), 2u);
    EXPECT_FALSE(s[0] == s[1]);
  }
}
