#include <gtest/gtest.h>

#include "nuore/nuore.hpp"

using namespace nuore;

TEST(Unitalization, EmbeddingIsAMultiplicativeAdditiveInjection) {
  auto r = make_zmod(6);
  auto u = unitalize(r);
  for (const auto& a : r->carrier())
    for (const auto& b : r->carrier()) {
      EXPECT_EQ(embed(u, r->mul(a, b)), u->mul(embed(u, a), embed(u, b)));
      EXPECT_EQ(embed(u, r->add(a, b)), u->add(embed(u, a), embed(u, b)));
    }
  EXPECT_FALSE(embed(u, el_zmod(r, 1)) == *u->identity());
}

TEST(Unitalization, AdjoinsAFreshIdentityEvenWhenBaseIsUnital) {
  auto r = make_zmod(6);
  auto u = unitalize(r);
  Element one = *u->identity();
  auto [base, n] = pair_parts(one);
  EXPECT_TRUE(r->is_zero(base));
  EXPECT_EQ(n, 1);
  for (const auto& a : r->carrier()) {
    EXPECT_EQ(u->mul(one, embed(u, a)), embed(u, a));
    EXPECT_EQ(u->mul(embed(u, a), one), embed(u, a));
  }
}

TEST(Unitalization, LiftedMapsValidateAndTreatIdentityCorrectly) {
  for (const char* name : {"tp2k2", "tp3k3", "m2z2_e12", "rowring", "zero2"}) {
    auto ent = corpus_entry(name);
    ASSERT_TRUE(ent) << name;
    auto u = unitalize(ent->ring);
    LiftedMaps lm = lift_maps(u, ent->sigma, ent->delta);
    EXPECT_TRUE(lm.sigma_check.ok) << name;
    EXPECT_TRUE(lm.delta_check.ok) << name;
    EXPECT_TRUE(lm.identity_fixed) << name;
    EXPECT_TRUE(lm.identity_killed) << name;
    // lift formula: sigma (r,n) -> (sigma r, n); delta (r,n) -> (delta r, 0)
    for (const auto& g : ent->ring->additive_generators()) {
      Element lifted = el_pair(u, g, 3);
      auto [sb, sn] = pair_parts(lm.sigma->apply(lifted));
      EXPECT_EQ(sb, ent->sigma->apply(g));
      EXPECT_EQ(sn, 3);
      auto [db, dn] = pair_parts(lm.delta->apply(lifted));
      EXPECT_EQ(db, ent->delta->apply(g));
      EXPECT_EQ(dn, 0);
    }
  }
}

TEST(Unitalization, LiftedLeibnizHoldsOnEmbeddedGeneratorPairs) {
  auto ent = corpus_entry("tp3k3");
  ASSERT_TRUE(ent);
  auto u = unitalize(ent->ring);
  LiftedMaps lm = lift_maps(u, ent->sigma, ent->delta);
  std::vector<Element> gens;
  for (const auto& g : ent->ring->additive_generators()) gens.push_back(embed(u, g));
  gens.push_back(*u->identity());
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Element lhs = lm.delta->apply(u->mul(a, b));
      Element rhs = u->add(u->mul(lm.sigma->apply(a), lm.delta->apply(b)),
                           u->mul(lm.delta->apply(a), b));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Unitalization, OreContextLiftsToTheUnitalization) {
  // x r = r x + delta(r) must keep holding after adjoining 1
  auto ent = corpus_entry("tp2k2");
  ASSERT_TRUE(ent);
  auto u = unitalize(ent->ring);
  LiftedMaps lm = lift_maps(u, ent->sigma, ent->delta);
  OrePtr ctx = make_ore_context(u, lm.sigma, lm.delta);
  OrePoly x = ore_monomial(ctx, *u->identity(), 1);
  for (const auto& g : ent->ring->additive_generators()) {
    OrePoly r = ore_monomial(ctx, embed(u, g), 0);
    OrePoly lhs = ore_mul(x, r);
    OrePoly rhs = ore_add(ore_mul(r, x),
                          ore_monomial(ctx, embed(u, ent->delta->apply(g)), 0));
    EXPECT_TRUE(ore_equal(lhs, rhs));
  }
}
