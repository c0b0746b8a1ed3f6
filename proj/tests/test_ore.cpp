#include <gtest/gtest.h>

#include "nuore/nuore.hpp"
#include "oracles.hpp"

using namespace nuore;

namespace {

// Z/3[t]/(t^3) with a genuine non-identity twist:
//   sigma: 1 -> 1, t -> 2t, t^2 -> t^2   (the automorphism t -> 2t)
//   delta: 1 -> 0, t -> t,  t^2 -> 0     (a sigma-derivation for that twist)
struct TwistedFixture {
  RingPtr ring;
  MapPtr sigma;
  MapPtr delta;
  TwistedFixture() {
    auto ent = corpus_entry("tp3k3");
    ring = ent->ring;
    sigma = map_table(ring, {el_coords(ring, {1, 0, 0}), el_coords(ring, {0, 2, 0}),
                             el_coords(ring, {0, 0, 1})});
    delta = map_table(ring, {ring->zero(), el_coords(ring, {0, 1, 0}), ring->zero()});
  }
};

}  // namespace

TEST(OrePoly, DegreeAndTrimEdgeCases) {
  auto ent = corpus_entry("tp2k2");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  EXPECT_EQ(ore_degree(ore_zero(ctx)), kNegInfDegree);
  OrePoly p = ore_monomial(ctx, *ent->ring->identity(), 3);
  EXPECT_EQ(ore_degree(p), 3);
  OrePoly q = ore_sub(p, p);
  EXPECT_EQ(ore_degree(q), kNegInfDegree);
  EXPECT_TRUE(ore_equal(q, ore_zero(ctx)));
}

TEST(OrePoly, CommutationRuleOnGenerators) {
  // x r = sigma(r) x + delta(r) for every additive generator of every entry
  for (const auto& ent : builtin_corpus()) {
    if (!ent.ring->is_finite()) continue;
    OrePtr ctx = make_ore_context(ent.ring, ent.sigma, ent.delta);
    auto one = ent.ring->identity();
    if (!one) continue;
    OrePoly x = ore_monomial(ctx, *one, 1);
    for (const auto& g : ent.ring->additive_generators()) {
      OrePoly r = ore_monomial(ctx, g, 0);
      OrePoly lhs = ore_mul(x, r);
      OrePoly rhs = ore_add(ore_monomial(ctx, ent.sigma->apply(g), 1),
                            ore_monomial(ctx, ent.delta->apply(g), 0));
      EXPECT_TRUE(ore_equal(lhs, rhs)) << ent.name;
    }
  }
}

TEST(PiMaps, MatchWordEnumerationInDifferentialCase) {
  for (const char* name : {"tp2k2", "tp3k3", "zmod6", "m2z2_e12"}) {
    auto ent = corpus_entry(name);
    ASSERT_TRUE(ent);
    for (int n = 0; n <= 4; ++n)
      for (int i = 0; i <= n; ++i) {
        MapPtr pi = pi_map(n, i, ent->sigma, ent->delta);
        for (const auto& a : ent->ring->carrier()) {
          Element want = oracle::pi_by_words(n, i, ent->sigma, ent->delta, a);
          EXPECT_EQ(pi->apply(a), want) << name << " n=" << n << " i=" << i;
        }
      }
  }
}

TEST(PiMaps, MatchWordEnumerationWithNonIdentityTwist) {
  TwistedFixture fx;
  ASSERT_TRUE(check_endomorphism(fx.sigma).ok);
  ASSERT_TRUE(check_sigma_derivation(fx.delta, fx.sigma).ok);
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      MapPtr pi = pi_map(n, i, fx.sigma, fx.delta);
      for (const auto& a : fx.ring->carrier())
        EXPECT_EQ(pi->apply(a), oracle::pi_by_words(n, i, fx.sigma, fx.delta, a))
            << "n=" << n << " i=" << i;
    }
}

TEST(OreMul, MonomialProductsMatchWordOracle) {
  for (const char* name : {"tp2k2", "tp3k3", "rowring", "zero3"}) {
    auto ent = corpus_entry(name);
    ASSERT_TRUE(ent);
    OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
    auto samples = canonical_samples(ent->ring, 4);
    for (const auto& a : samples)
      for (const auto& b : samples)
        for (int n = 0; n <= 3; ++n)
          for (int m = 0; m <= 2; ++m) {
            OrePoly lhs =
                ore_mul(ore_monomial(ctx, a, n), ore_monomial(ctx, b, m));
            OrePoly rhs = oracle::monomial_product_by_words(ctx, a, n, b, m);
            EXPECT_TRUE(ore_equal(lhs, rhs)) << name << " n=" << n << " m=" << m;
          }
  }
}

TEST(OreMul, MonomialProductsMatchWordOracleWithTwist) {
  TwistedFixture fx;
  OrePtr ctx = make_ore_context(fx.ring, fx.sigma, fx.delta);
  EXPECT_FALSE(ctx->differential);
  auto samples = canonical_samples(fx.ring, 4);
  for (const auto& a : samples)
    for (const auto& b : samples)
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
          OrePoly lhs = ore_mul(ore_monomial(ctx, a, n), ore_monomial(ctx, b, m));
          OrePoly rhs = oracle::monomial_product_by_words(ctx, a, n, b, m);
          EXPECT_TRUE(ore_equal(lhs, rhs)) << "n=" << n << " m=" << m;
        }
}

TEST(OreMul, TwistedProductsAssociateOnSamples) {
  TwistedFixture fx;
  OrePtr ctx = make_ore_context(fx.ring, fx.sigma, fx.delta);
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    OrePoly p = random_ore_poly(rng, ctx, 3);
    OrePoly q = random_ore_poly(rng, ctx, 3);
    OrePoly r = random_ore_poly(rng, ctx, 3);
    EXPECT_TRUE(ore_equal(ore_mul(ore_mul(p, q), r), ore_mul(p, ore_mul(q, r))));
  }
}

TEST(OreMul, WeylRelationOnRationalPolynomials) {
  auto ent = corpus_entry("weylq");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  const RingPtr& r = ent->ring;
  Element y = parse_element(r, "0, 1");
  OrePoly yx = ore_monomial(ctx, y, 1);
  OrePoly sq = ore_mul(yx, yx);
  // (y x)(y x) = y^2 x^2 + y x
  EXPECT_EQ(ore_degree(sq), 2);
  EXPECT_EQ(ore_coeff(sq, 2), parse_element(r, "0, 0, 1"));
  EXPECT_EQ(ore_coeff(sq, 1), y);
  EXPECT_TRUE(r->is_zero(ore_coeff(sq, 0)));
  // x y - y x = 1
  OrePoly x = ore_monomial(ctx, *r->identity(), 1);
  OrePoly ypoly = ore_monomial(ctx, y, 0);
  OrePoly comm = ore_sub(ore_mul(x, ypoly), ore_mul(ypoly, x));
  EXPECT_TRUE(ore_equal(comm, ore_monomial(ctx, *r->identity(), 0)));
}

TEST(CornerOre, IdentityCornerKeepsTheWholeRing) {
  auto ent = corpus_entry("m2z2_e12");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  Element e = *ent->ring->identity();
  CornerContext cc = corner_ore_context(ctx, e);
  EXPECT_EQ(cc.corner->carrier_size(), ent->ring->carrier_size());
}

TEST(CornerOre, ProperCornerProjectsCoefficientwise) {
  auto ent = corpus_entry("minfq");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  const RingPtr& r = ent->ring;
  Element e = r->add(el_unit(r, 1, 1), el_unit(r, 2, 2));
  OrePoly p = ore_add(ore_monomial(ctx, el_unit(r, 1, 3), 1),
                      ore_monomial(ctx, el_unit(r, 2, 1), 0));
  OrePoly ep = corner_project(e, p);
  // e (E13 x + E21) e = 0 x + E21
  EXPECT_EQ(ore_degree(ep), 0);
  EXPECT_EQ(ore_coeff(ep, 0), el_unit(r, 2, 1));
}

TEST(ParseRoundTrip, OrePolynomialsSurviveStrAndParse) {
  for (const char* name : {"tp2k2", "weylq", "minfq"}) {
    auto ent = corpus_entry(name);
    OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      OrePoly p = random_ore_poly(rng, ctx, 3);
      OrePoly q = parse_ore_poly(ctx, ore_str(p));
      EXPECT_TRUE(ore_equal(p, q)) << name << ": " << ore_str(p);
    }
  }
}
