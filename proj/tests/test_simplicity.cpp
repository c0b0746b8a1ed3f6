#include <gtest/gtest.h>

#include "nuore/nuore.hpp"

using namespace nuore;

namespace {
SimplicityVerdict verdict_for(const char* name, int bound = 4) {
  auto ent = corpus_entry(name);
  EXPECT_TRUE(ent) << name;
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  VerdictOptions opts;
  opts.bound = bound;
  return simplicity_verdict(ctx, opts);
}
}  // namespace

TEST(BoundedCenter, TruncatedPolynomialCenterIsTheExpectedSubgroup) {
  auto ent = corpus_entry("tp2k2");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  Element e = *ent->ring->identity();
  CenterResult c = bounded_center(ctx, e, 2);
  ASSERT_TRUE(c.exact);
  // degree-0 center of the corner: kernel of d/dt inside Z(R) = {0, 1}
  EXPECT_EQ(c.degree0.size(), 2u);
  EXPECT_TRUE(c.degree0_field.yes());
  // x^2 is central: delta^2 = 0 and binomial(2,1) = 0 in characteristic 2
  ASSERT_FALSE(c.positive.empty());
  bool found_x2 = false;
  for (const auto& p : c.positive)
    if (ore_degree(p) == 2) found_x2 = true;
  EXPECT_TRUE(found_x2);
}

TEST(BoundedCenter, WeylAlgebraCenterIsTrivial) {
  auto ent = corpus_entry("weylq");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  Element e = *ent->ring->identity();
  CenterResult c = bounded_center(ctx, e, 4);
  EXPECT_TRUE(c.positive.empty());
  EXPECT_TRUE(c.degree0_field.yes());
  EXPECT_FALSE(c.noninvertible);
}

TEST(BoundedCenter, InnerDerivationOnMatricesHasTheShiftedWitness) {
  // delta = [E12, -]: c = E12 + 1 x is central, the classical obstruction
  auto ent = corpus_entry("m2z2_e12");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  Element e = *ent->ring->identity();
  CenterResult c = bounded_center(ctx, e, 2);
  ASSERT_FALSE(c.positive.empty());
  Element a = ent->delta->inner_element();
  bool found = false;
  for (const auto& p : c.positive) {
    if (ore_degree(p) != 1) continue;
    if (ore_coeff(p, 1) == e && ore_coeff(p, 0) == a) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(BoundedCenter, RationalMatrixCornerUsesExactLinearAlgebra) {
  // M_inf(Q) with the zero derivation: x itself is central over the corner
  auto m = make_minf_q();
  OrePtr ctx = make_ore_context(m, map_identity(m), map_zero(m));
  Element e = el_unit(m, 1, 1);
  CenterResult c = bounded_center(ctx, e, 2);
  ASSERT_FALSE(c.positive.empty());
  EXPECT_EQ(ore_degree(c.positive.front()), 1);
}

TEST(BoundedCenter, RefusesBackendsWithoutAnExactRoute) {
  // polynomials over a finite-table base have no implemented corner solver
  auto z6 = make_zmod(6);
  auto p = make_poly(z6, "t");
  OrePtr ctx = make_ore_context(p, map_identity(p), map_zero(p));
  Element e = *p->identity();
  EXPECT_THROW(bounded_center(ctx, e, 2), UnsupportedBackendError);
}

TEST(Verdicts, TruncatedPolynomialRingsAreNotSimpleWithCentralPowers) {
  SimplicityVerdict v2 = verdict_for("tp2k2", 2);
  EXPECT_EQ(v2.outcome, SimplicityVerdict::Outcome::NotSimple);
  EXPECT_EQ(v2.certificate, SimplicityVerdict::Certificate::PositiveDegreeCentral);
  ASSERT_TRUE(v2.central_witness);
  EXPECT_EQ(ore_degree(*v2.central_witness), 2);
  EXPECT_EQ(v2.bound, 2);

  SimplicityVerdict v3 = verdict_for("tp3k3", 4);
  EXPECT_EQ(v3.outcome, SimplicityVerdict::Outcome::NotSimple);
  EXPECT_EQ(v3.certificate, SimplicityVerdict::Certificate::PositiveDegreeCentral);
  ASSERT_TRUE(v3.central_witness);
  EXPECT_EQ(ore_degree(*v3.central_witness), 3);
  EXPECT_EQ(v3.bound, 3);
}

TEST(Verdicts, CompositeZmodFailsDeltaSimplicity) {
  SimplicityVerdict v = verdict_for("zmod6");
  EXPECT_EQ(v.outcome, SimplicityVerdict::Outcome::NotSimple);
  EXPECT_EQ(v.certificate, SimplicityVerdict::Certificate::NotDeltaSimple);
  ASSERT_TRUE(v.ideal_witness);
  EXPECT_GT(v.ideal_witness->elements.size(), 1u);
}

TEST(Verdicts, PrimeZmodHasCentralXWithZeroDerivation) {
  SimplicityVerdict v = verdict_for("zmod5");
  EXPECT_EQ(v.outcome, SimplicityVerdict::Outcome::NotSimple);
  EXPECT_EQ(v.certificate, SimplicityVerdict::Certificate::PositiveDegreeCentral);
  ASSERT_TRUE(v.central_witness);
  EXPECT_EQ(ore_degree(*v.central_witness), 1);
}

TEST(Verdicts, InnerDerivationsYieldCornerWitnesses) {
  for (const char* name : {"m2z2_e12", "m2z2_e21", "minfq"}) {
    SimplicityVerdict v = verdict_for(name);
    EXPECT_EQ(v.outcome, SimplicityVerdict::Outcome::NotSimple) << name;
    EXPECT_EQ(v.certificate, SimplicityVerdict::Certificate::InnerDerivation) << name;
    ASSERT_TRUE(v.central_witness) << name;
    EXPECT_EQ(ore_degree(*v.central_witness), 1) << name;
  }
}

TEST(Verdicts, LocallyUnitalPolynomialCoefficientsGiveSimple) {
  for (const char* name : {"minfq_poly", "weylq"}) {
    SimplicityVerdict v = verdict_for(name);
    EXPECT_EQ(v.outcome, SimplicityVerdict::Outcome::Simple) << name;
    EXPECT_EQ(v.certificate, SimplicityVerdict::Certificate::StructuralLocalUnits)
        << name;
  }
}

TEST(Verdicts, EveryCorpusVerdictReplays) {
  for (const auto& ent : builtin_corpus()) {
    if (!ent.ring->flags().s_unital.yes()) continue;
    OrePtr ctx = make_ore_context(ent.ring, ent.sigma, ent.delta);
    VerdictOptions opts;
    SimplicityVerdict v = simplicity_verdict(ctx, opts);
    ReplayReport rep = replay_certificate(v, ctx);
    EXPECT_TRUE(rep.pass) << ent.name << ": "
                          << (rep.log.empty() ? "" : rep.log.back());
  }
}

TEST(Verdicts, PreconditionsRejectUnprovenHypotheses) {
  // not s-unital
  auto rowring = corpus_entry("rowring");
  OrePtr ctx = make_ore_context(rowring->ring, rowring->sigma, rowring->delta);
  EXPECT_THROW(simplicity_verdict(ctx, {}), PreconditionError);
  auto zero2 = corpus_entry("zero2");
  OrePtr zctx = make_ore_context(zero2->ring, zero2->sigma, zero2->delta);
  EXPECT_THROW(simplicity_verdict(zctx, {}), PreconditionError);
  // non-identity twist
  auto ent = corpus_entry("tp3k3");
  MapPtr sigma = map_table(
      ent->ring, {el_coords(ent->ring, {1, 0, 0}), el_coords(ent->ring, {0, 2, 0}),
                  el_coords(ent->ring, {0, 0, 1})});
  MapPtr delta = map_table(
      ent->ring, {ent->ring->zero(), el_coords(ent->ring, {0, 1, 0}),
                  ent->ring->zero()});
  OrePtr tctx = make_ore_context(ent->ring, sigma, delta);
  EXPECT_THROW(simplicity_verdict(tctx, {}), PreconditionError);
}

TEST(Verdicts, OutcomeAgreesAcrossKernelIdempotents) {
  // the equivalence clauses hold for all kernel idempotents at once, so
  // forcing different corners must not change the outcome
  for (const char* name : {"zmod12", "m2z2_e12", "tp3k3"}) {
    auto ent = corpus_entry(name);
    OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
    SimplicityVerdict base = simplicity_verdict(ctx, {});
    for (const auto& e : enumerate_idempotents(ent->ring)) {
      if (ent->ring->is_zero(e)) continue;
      if (!ent->ring->is_zero(ent->delta->apply(e))) continue;
      VerdictOptions opts;
      opts.corner = e;
      SimplicityVerdict v = simplicity_verdict(ctx, opts);
      EXPECT_EQ(v.outcome, base.outcome)
          << name << " at e=" << ent->ring->element_str(e);
    }
  }
}

TEST(Verdicts, EvidenceIsMonotoneInTheBound) {
  SimplicityVerdict low = verdict_for("tp2k2", 1);
  EXPECT_EQ(low.outcome, SimplicityVerdict::Outcome::Unknown);
  EXPECT_EQ(low.certificate, SimplicityVerdict::Certificate::BoundedEvidence);
  SimplicityVerdict high = verdict_for("tp2k2", 2);
  EXPECT_EQ(high.outcome, SimplicityVerdict::Outcome::NotSimple);
}

TEST(Verdicts, SimpleFiniteOutcomesWouldForceFieldCenters) {
  // no finite entry is Simple; if one ever is, its corner center must verify
  // as a field with no positive-degree central elements
  for (const auto& ent : builtin_corpus()) {
    if (!ent.ring->is_finite() || !ent.ring->flags().s_unital.yes()) continue;
    OrePtr ctx = make_ore_context(ent.ring, ent.sigma, ent.delta);
    SimplicityVerdict v = simplicity_verdict(ctx, {});
    if (v.outcome != SimplicityVerdict::Outcome::Simple) continue;
    ASSERT_TRUE(v.corner_idempotent);
    CenterResult c = bounded_center(ctx, *v.corner_idempotent, 4);
    EXPECT_TRUE(c.positive.empty()) << ent.name;
    EXPECT_TRUE(c.degree0_field.yes()) << ent.name;
  }
}

TEST(StructuralCertificate, RequiresTheFullHypothesisSet) {
  // base not simple
  auto z6 = make_zmod(6);
  auto p6 = make_poly(z6, "t");
  OrePtr c6 = make_ore_context(p6, map_identity(p6), map_formal_derivative(p6));
  EXPECT_THROW(structural_certificate(c6, *p6->identity()), HypothesisError);
  // base simple and unital but with torsion
  auto ent = corpus_entry("m2z2_e12");
  auto pm = make_poly(ent->ring, "t");
  OrePtr cm = make_ore_context(pm, map_identity(pm), map_formal_derivative(pm));
  EXPECT_THROW(structural_certificate(cm, *pm->identity()), TorsionError);
  // wrong backend entirely
  auto went = corpus_entry("minfq");
  OrePtr cw = make_ore_context(went->ring, went->sigma, went->delta);
  EXPECT_THROW(structural_certificate(cw, el_unit(went->ring, 1, 1)),
               UnsupportedBackendError);
}

TEST(InnerNonsimple, ProducesACommutingWitnessInTheCorner) {
  auto ent = corpus_entry("minfq");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  SimplicityVerdict v = inner_nonsimple(ctx);
  EXPECT_EQ(v.outcome, SimplicityVerdict::Outcome::NotSimple);
  ASSERT_TRUE(v.central_witness);
  ASSERT_TRUE(v.corner);
  // witness x - eae commutes with every corner sample
  const OrePoly& w = *v.central_witness;
  OrePtr cctx = v.corner->ctx;
  for (const auto& s : canonical_samples(cctx->ring, 4)) {
    OrePoly sp = ore_monomial(cctx, s, 0);
    EXPECT_TRUE(ore_equal(ore_mul(w, sp), ore_mul(sp, w)));
  }
}

TEST(InnerNonsimple, RefusesNonInnerDerivations) {
  auto ent = corpus_entry("tp2k2");
  OrePtr ctx = make_ore_context(ent->ring, ent->sigma, ent->delta);
  EXPECT_THROW(inner_nonsimple(ctx), PreconditionError);
}
