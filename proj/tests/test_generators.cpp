#include <gtest/gtest.h>

#include "gtoda/gt/verify.hpp"

using namespace gtoda;
using namespace gtoda::algebra;
using namespace gtoda::gt;

namespace {

Polynomial g(int r, int c) { return Polynomial::gamma(r, c); }
const Polynomial h = Polynomial::h();

}  // namespace

TEST(Generators, OddGeneratorRankOne) {
  auto op = build_generator({.kind = GeneratorKind::IOdd, .N = 3, .k = 1}).op;
  const Scalar half = Scalar::frac(1, 2);
  auto up = RationalFunction::quotient((g(1, 1) - g(2, 1) + h * half) * Scalar::frac(-1, 2), h);
  auto down = RationalFunction::quotient((g(2, 1) + g(1, 1) - h * half) * Scalar::frac(-1, 2), h);
  auto expected = ShiftOperator::term(up, unit_shift(gamma_slot(1, 1), 1)) +
                  ShiftOperator::term(down, unit_shift(gamma_slot(1, 1), -1));
  EXPECT_TRUE((op - expected).is_zero()) << op.str();
}

TEST(Generators, EvenGeneratorAtZeroIsMultiplication) {
  auto op = build_generator({.kind = GeneratorKind::IEvenTimesI, .N = 3, .k = 0}).op;
  auto expected = ShiftOperator::multiplication(RationalFunction::quotient(-g(1, 1), h));
  EXPECT_TRUE((op - expected).is_zero()) << op.str();
}

TEST(Generators, FirstCartanGenerator) {
  auto op = build_generator({.kind = GeneratorKind::FCartan, .N = 3, .j = 1}).op;
  auto expected = ShiftOperator::multiplication(RationalFunction::quotient(g(1, 1), h));
  EXPECT_TRUE((op - expected).is_zero()) << op.str();
}

TEST(Generators, LastSimpleRootOfOddRankOmitsSqrt2) {
  auto res = build_generator({.kind = GeneratorKind::FSimple, .N = 5, .j = 2});
  EXPECT_TRUE(res.sqrt2_omitted);
  auto inner = build_generator({.kind = GeneratorKind::FSimple, .N = 5, .j = 1});
  EXPECT_FALSE(inner.sqrt2_omitted);
}

TEST(Generators, RangeErrorsNameTheBound) {
  try {
    build_generator({.kind = GeneratorKind::J, .N = 5, .k = 0, .j = 1, .eps = 1, .delta = -1});
    FAIL() << "expected IndexRangeError";
  } catch (const IndexRangeError& e) {
    EXPECT_EQ(e.bound(), "delta = +1 when k = 0");
  }
  EXPECT_THROW(build_generator({.kind = GeneratorKind::IOdd, .N = 3, .k = 2}), IndexRangeError);
  EXPECT_THROW(build_generator({.kind = GeneratorKind::P, .N = 5, .k = 2, .j = 3}), IndexRangeError);
  EXPECT_THROW(build_generator({.kind = GeneratorKind::INonsimple, .N = 4, .a = 5, .b = 1}), IndexRangeError);
  EXPECT_THROW(GeneratorTable(9), IndexRangeError);
}

TEST(Generators, JAtZeroIsConstant) {
  for (int eps : {1, -1}) {
    auto op = J(0, 1, 1, eps);
    auto expected = ShiftOperator::multiplication(RationalFunction(Scalar(eps) * Scalar::i()));
    EXPECT_TRUE((op - expected).is_zero()) << op.str();
  }
}

TEST(Generators, NonsimpleRankThreeByHand) {
  // [I32, I21] = i (P+ - P-) in so(3).
  GeneratorTable t(3);
  auto lhs = t.I(3, 1);
  auto rhs = Scalar::i() * (P(1, 1, 1) - P(1, 1, -1));
  EXPECT_TRUE((lhs - rhs).is_zero()) << lhs.str();
}

TEST(PartialFraction, HandExamples) {
  const Scalar x1[] = {Scalar(4)};
  EXPECT_TRUE(check_partial_fraction_identity(1, x1, std::span<const Scalar>{}));
  const Scalar x2[] = {Scalar(3), Scalar(5)};
  const Scalar y2[] = {Scalar(7)};
  EXPECT_TRUE(check_partial_fraction_identity(2, x2, y2));
  const Scalar xr[] = {Scalar(3), Scalar(3)};
  EXPECT_THROW(check_partial_fraction_identity(2, xr, y2), IndexRangeError);
}

TEST(PartialFraction, RandomSamples) {
  auto rep = verify_partial_fraction(6, 20);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Serre, SmallRanks) {
  for (int N = 3; N <= 5; ++N) {
    auto rep = verify_serre(N);
    for (const auto& r : rep.records) EXPECT_TRUE(r.pass) << "N=" << N << " " << r.id;
  }
  EXPECT_THROW(verify_serre(2), IndexRangeError);
}

class SerreLargeRank : public ::testing::TestWithParam<int> {};
TEST_P(SerreLargeRank, RelationsHold) {
  auto rep = verify_serre(GetParam());
  for (const auto& r : rep.records) EXPECT_TRUE(r.pass) << r.id;
}
INSTANTIATE_TEST_SUITE_P(Ranks, SerreLargeRank, ::testing::Values(6, 7));

TEST(Serre, MutationBreaksARelation) {
  for (int N = 3; N <= 5; ++N) EXPECT_FALSE(verify_serre(N, Mutation::FlipOddRaiseSign).all_pass()) << N;
}

TEST(Tau, ConjugationForAllSmallRanks) {
  for (int N = 3; N <= 7; ++N) {
    auto rep = verify_tau(N);
    EXPECT_FALSE(rep.records.empty());
    for (const auto& r : rep.records) EXPECT_TRUE(r.pass) << "N=" << N << " " << r.id;
  }
  EXPECT_THROW(verify_tau(9), IndexRangeError);
}

class LemmaA1 : public ::testing::TestWithParam<int> {};
TEST_P(LemmaA1, ClosedFormsMatchCommutators) {
  auto rep = verify_lemma_a1(GetParam());
  for (const auto& r : rep.records) EXPECT_TRUE(r.pass) << r.id;
}
INSTANTIATE_TEST_SUITE_P(Ranks, LemmaA1, ::testing::Values(1, 2, 3));
