#include <gtest/gtest.h>

#include "gtoda/whittaker/verify.hpp"

using namespace gtoda;
using namespace gtoda::whittaker;
using algebra::Polynomial;
using algebra::RationalFunction;
using algebra::Scalar;

namespace {

void expect_all_pass(const std::vector<EigenReport>& reps) {
  ASSERT_FALSE(reps.empty());
  for (const auto& r : reps) EXPECT_TRUE(r.pass) << r.record().id << ": expected " << r.expected.str() << ", got " << r.computed.str();
}

void expect_all_pass(const Report& rep) {
  ASSERT_FALSE(rep.records.empty());
  for (const auto& r : rep.records) EXPECT_TRUE(r.pass) << r.id << ": expected " << r.expected << ", got " << r.computed;
}

}  // namespace

TEST(Cocycle, SinglePairFactorMultiplier) {
  WhittakerProduct p;
  p.n = 1;
  p.pairs.push_back({1, algebra::gamma_slot(1, 1), 1, algebra::gamma_slot(2, 1)});
  const WhittakerCocycle w(p);
  const Polynomial x = Polynomial::gamma(1, 1), y = Polynomial::gamma(2, 1), h = Polynomial::h();
  EXPECT_TRUE(w.ratio(algebra::gamma_slot(1, 1)).up.equals(RationalFunction(x + y + h * Scalar::frac(1, 2))));
}

TEST(Cocycle, ExponentialPrefactorQuarterTurn) {
  WhittakerProduct p;
  p.n = 1;
  p.exps.push_back({-1, 1});
  const WhittakerCocycle w(p);
  EXPECT_TRUE(w.ratio(algebra::gamma_slot(1, 1)).up.equals(RationalFunction(-Scalar::i())));
}

TEST(Cocycle, AbsentVariableThrows) {
  const WhittakerCocycle w = build_whittaker_cocycle(1, Side::Left, Frame::Gamma);
  EXPECT_THROW(w.ratio(algebra::gamma_slot(3, 1)), std::invalid_argument);
}

TEST(Cocycle, CartanOnRankOne) {
  gt::GeneratorTable t(3);
  const WhittakerCocycle w = build_whittaker_cocycle(1, Side::Left, Frame::Gamma);
  const RationalFunction m = act_on_whittaker(gt::F_cartan(t, 1), w);
  EXPECT_TRUE(m.equals(RationalFunction::quotient(Polynomial::gamma(1, 1), Polynomial::h())));
}

// 2 P^- acting on s(g11, g21): -(1/h)(g11 + g21 - h/2) / (g11 + g21 - h/2).
TEST(Cocycle, SimpleRootOnRankOne) {
  gt::GeneratorTable t(3);
  const WhittakerCocycle w = build_whittaker_cocycle(1, Side::Left, Frame::Gamma);
  const RationalFunction m = act_on_whittaker(gt::I_odd(1) + Scalar::i() * t.I(3, 1), w);
  EXPECT_TRUE(m.equals(RationalFunction::quotient(Polynomial(Scalar(-1)), Polynomial::h()))) << m.str();
}

class WhittakerRank : public ::testing::TestWithParam<int> {};

TEST_P(WhittakerRank, CocycleConsistentAndLocal) { expect_all_pass(verify_cocycle(GetParam())); }
TEST_P(WhittakerRank, EigenAgainstDerivedCharacter) {
  for (Side side : {Side::Left, Side::Right})
    for (Frame frame : {Frame::Gamma, Frame::Nu})
      expect_all_pass(verify_whittaker_eigen(GetParam(), side, frame, CocycleMutation::None,
                                             SimpleRootReference::Derived));
}

// The stated character (-1)^{k+1}/h agrees with the computed one exactly at even k.
TEST_P(WhittakerRank, StatedCharacterHoldsOnlyAtEvenK) {
  for (Side side : {Side::Left, Side::Right})
    for (const auto& r : verify_whittaker_eigen(GetParam(), side)) EXPECT_EQ(r.pass, r.k % 2 == 0) << r.record().id;
}
TEST_P(WhittakerRank, JAction) { expect_all_pass(verify_j_action(GetParam())); }
TEST_P(WhittakerRank, CartanGamma) { expect_all_pass(verify_cartan_action(GetParam(), Frame::Gamma)); }
TEST_P(WhittakerRank, CartanNu) { expect_all_pass(verify_cartan_action(GetParam(), Frame::Nu)); }
TEST_P(WhittakerRank, FrameEquivalence) { expect_all_pass(verify_frame_equivalence(GetParam())); }
TEST_P(WhittakerRank, ExtraFactorRescalesSimpleRoots) { expect_all_pass(verify_extra_factor(GetParam())); }

INSTANTIATE_TEST_SUITE_P(Ranks, WhittakerRank, ::testing::Values(1, 2, 3));

// Row 2 is shifted only from n = 2 on; at n = 1 it carries the unshifted top row.
TEST(WhittakerMutation, FlippedExponentialBreaksAnEquation) {
  for (int n = 2; n <= 3; ++n) {
    const auto reps = verify_whittaker_eigen(n, Side::Left, Frame::Gamma, CocycleMutation::FlipFirstExponential,
                                             SimpleRootReference::Derived);
    bool any_fail = false;
    for (const auto& r : reps) any_fail = any_fail || !r.pass;
    EXPECT_TRUE(any_fail) << "n = " << n;
  }
}

TEST(WhittakerRange, RankOutsideRangeThrows) {
  EXPECT_THROW(verify_whittaker_eigen(0), gt::IndexRangeError);
  EXPECT_THROW(verify_j_action(4), gt::IndexRangeError);
}

// Below the top row, w'_n = exp((pi/c) sum delta_odd) tau(w_n) ratio by ratio.
TEST(WhittakerTau, RelationHoldsBelowTopRow) {
  for (int n = 1; n <= 3; ++n) {
    const Report rep = tau_relation_diagnostic(n);
    ASSERT_FALSE(rep.records.empty());
    for (const auto& r : rep.records) {
      const std::string top = "tau_relation.g" + std::to_string(2 * n) + "_";
      if (r.id.rfind(top, 0) == 0) continue;
      EXPECT_TRUE(r.pass) << r.id << " " << r.note;
    }
  }
}
