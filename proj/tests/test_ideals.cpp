#include <gtest/gtest.h>

#include "nuore/nuore.hpp"
#include "oracles.hpp"

using namespace nuore;

TEST(IdealEnumeration, ZmodIdealsAreDivisorSubgroups) {
  auto ideals6 = enumerate_ideals(make_zmod(6));
  EXPECT_EQ(ideals6.size(), 4u);  // (0), (3), (2), (1)
  auto ideals12 = enumerate_ideals(make_zmod(12));
  EXPECT_EQ(ideals12.size(), 6u);  // one per divisor
  auto ideals7 = enumerate_ideals(make_zmod(7));
  EXPECT_EQ(ideals7.size(), 2u);
}

TEST(IdealEnumeration, MatrixRingIsSimple) {
  auto ent = corpus_entry("m2z2_e12");
  auto ideals = enumerate_ideals(ent->ring);
  EXPECT_EQ(ideals.size(), 2u);
  // any nonzero principal closure is everything
  Element e12 = ent->delta->inner_element();
  Ideal j = ideal_closure(ent->ring, {e12});
  EXPECT_TRUE(j.is_whole_ring());
}

TEST(IdealEnumeration, RowRingHasTheExpectedLattice) {
  auto ent = corpus_entry("rowring");
  auto ideals = enumerate_ideals(ent->ring);
  // {0}, {0, g2}, R: g2 generates a minimal left-closed row
  ASSERT_EQ(ideals.size(), 3u);
  EXPECT_EQ(ideals[1].elements.size(), 2u);
  EXPECT_TRUE(ideals[1].contains(el_coords(ent->ring, {0, 1})));
}

TEST(DeltaSimple, DerivationDistinguishesInvariantIdeals) {
  // Z/2[t]/(t^2): the ideal (t) is not d/dt-invariant, so R is delta-simple;
  // with the zero derivation the same ideal certifies non-delta-simplicity.
  auto ent = corpus_entry("tp2k2");
  DeltaSimpleResult with_d = is_delta_simple(ent->ring, ent->sigma, ent->delta);
  EXPECT_TRUE(with_d.delta_simple);
  DeltaSimpleResult with_zero =
      is_delta_simple(ent->ring, ent->sigma, map_zero(ent->ring));
  EXPECT_FALSE(with_zero.delta_simple);
  ASSERT_TRUE(with_zero.witness);
  EXPECT_EQ(with_zero.witness->elements.size(), 2u);
  EXPECT_TRUE(with_zero.witness->contains(el_coords(ent->ring, {0, 1})));
}

TEST(DeltaSimple, CompositeZmodNeverIs) {
  for (I64 n : {4, 6, 8, 9, 10, 12}) {
    auto r = make_zmod(n);
    DeltaSimpleResult res = is_delta_simple(r, map_identity(r), map_zero(r));
    EXPECT_FALSE(res.delta_simple) << n;
  }
  for (I64 n : {2, 3, 5, 7, 11}) {
    auto r = make_zmod(n);
    EXPECT_TRUE(is_delta_simple(r, map_identity(r), map_zero(r)).delta_simple) << n;
  }
}

TEST(DeltaSimple, RowRingInnerDerivationLeavesTheRowInvariant) {
  auto ent = corpus_entry("rowring");
  DeltaSimpleResult res = is_delta_simple(ent->ring, ent->sigma, ent->delta);
  EXPECT_FALSE(res.delta_simple);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(res.witness->contains(el_coords(ent->ring, {0, 1})));
}

TEST(TruncatedClosure, GeneratorAndBoundValidation) {
  auto ent = corpus_entry("tp2k2");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  OrePoly tx = ore_monomial(ctx, el_coords(ent->ring, {0, 1}), 1);
  EXPECT_THROW(truncated_s_closure(ctx, {tx}, 0), BadBoundError);
  EXPECT_THROW(truncated_s_closure(ctx, {tx}, -1), BadBoundError);
  auto went = corpus_entry("weylq");
  OrePtr wctx = make_ore_context(went->ring, went->sigma, went->delta);
  EXPECT_THROW(truncated_s_closure(wctx, {ore_zero(wctx)}, 2), Error);
}

TEST(TruncatedClosure, MatchesNaiveClosureOnSmallCases) {
  auto ent = corpus_entry("tp2k2");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  const RingPtr& r = ent->ring;
  Element one = *r->identity();
  Element t = el_coords(r, {0, 1});
  std::vector<std::vector<OrePoly>> gen_sets = {
      {ore_monomial(ctx, t, 1)},
      {ore_monomial(ctx, t, 2)},
      {ore_add(ore_monomial(ctx, one, 1), ore_monomial(ctx, t, 0))},
      {ore_monomial(ctx, t, 1), ore_monomial(ctx, one, 2)},
  };
  for (int bound = 2; bound <= 3; ++bound) {
    for (const auto& gens : gen_sets) {
      bool fits = true;
      for (const auto& g : gens)
        if (ore_degree(g) > bound) fits = false;
      if (!fits) continue;
      TruncatedSIdeal lib = truncated_s_closure(ctx, gens, bound);
      oracle::NaiveClosure naive = oracle::naive_truncated_closure(ctx, gens, bound);
      EXPECT_EQ(lib.size(), naive.members.size());
      for (const auto& row : naive.members)
        EXPECT_TRUE(lib.contains(ore_from_coeffs(ctx, row)));
      for (int n = 0; n <= bound; ++n)
        EXPECT_EQ(lib.h_set(n), oracle::naive_h_set(naive, r, n)) << "n=" << n;
    }
  }
}

TEST(TruncatedClosure, SpecificClosureReachesTheWholeCoefficientRing) {
  // gens {t x} over Z/2[t]/(t^2), bound 3: multiplying down to degree zero
  // realizes every coefficient, so H_1 is the whole ring.
  auto ent = corpus_entry("tp2k2");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  OrePoly tx = ore_monomial(ctx, el_coords(ent->ring, {0, 1}), 1);
  TruncatedSIdeal s = truncated_s_closure(ctx, {tx}, 3);
  auto h1 = s.h_set(1);
  EXPECT_EQ(h1.size(), ent->ring->carrier_size());
}

TEST(TruncatedClosure, HSetsAreMonotoneIdealsWithInvariantImages) {
  for (const char* name : {"tp2k2", "tp3k3"}) {
    auto ent = corpus_entry(name);
    OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
    const RingPtr& r = ent->ring;
    Element one = *r->identity();
    std::vector<I64> tcoords(r->addgroup_moduli().size(), 0);
    tcoords[1] = 1;
    Element t = el_coords(r, tcoords);
    std::vector<std::vector<OrePoly>> gen_sets = {
        {ore_monomial(ctx, t, 1)},
        {ore_monomial(ctx, t, 2), ore_monomial(ctx, t, 1)},
        {ore_add(ore_monomial(ctx, one, 3), ore_monomial(ctx, t, 0))},
    };
    const int bound = 3;
    for (const auto& gens : gen_sets) {
      TruncatedSIdeal lo = truncated_s_closure(ctx, gens, bound);
      TruncatedSIdeal hi = truncated_s_closure(ctx, gens, bound + 1);
      for (int n = 0; n <= bound; ++n) {
        auto hn = lo.h_set(n);
        auto hn_next = lo.h_set(std::min(n + 1, bound));
        auto hn_hi = hi.h_set(n);
        // two-sided ideal
        Ideal closed = ideal_closure(r, hn);
        EXPECT_EQ(closed.elements, hn) << name << " n=" << n;
        // monotone in n and in the bound
        for (const auto& a : hn) {
          EXPECT_TRUE(std::binary_search(hn_next.begin(), hn_next.end(), a,
                                         ElementLess{}));
          EXPECT_TRUE(
              std::binary_search(hn_hi.begin(), hn_hi.end(), a, ElementLess{}));
          // delta image stays inside at the next bound
          EXPECT_TRUE(std::binary_search(hn_hi.begin(), hn_hi.end(),
                                         ent->delta->apply(a), ElementLess{}))
              << name << " n=" << n;
        }
      }
    }
  }
}
