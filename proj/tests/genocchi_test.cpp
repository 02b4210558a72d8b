#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgen/errors.hpp"
#include "qgen/genocchi.hpp"
#include "qgen/qcore.hpp"

using qgen::BigRational;
using qgen::RatFuncQ;
using qgen::WeightParams;

namespace {

const RatFuncQ q = RatFuncQ::q();

RatFuncQ one_plus_q_pow(long e) { return RatFuncQ(1) + q.pow(e); }

}  // namespace

TEST(WeightParams, RejectsNonPositive) {
  EXPECT_THROW(WeightParams::make(0, 1), qgen::DomainError);
  EXPECT_THROW(WeightParams::make(1, 0), qgen::DomainError);
  EXPECT_THROW(qgen::weighted_genocchi_number(2, WeightParams{-1, 1}), qgen::DomainError);
}

TEST(ClosedForm, LowIndices) {
  for (long alpha = 1; alpha <= 3; ++alpha) {
    for (long h = 1; h <= 3; ++h) {
      const WeightParams w{alpha, h};
      EXPECT_TRUE(qgen::weighted_genocchi_number(0, w).is_zero());
      for (long x = -1; x <= 2; ++x) EXPECT_EQ(qgen::weighted_genocchi_poly_closed(1, w, x), (1 + q) / one_plus_q_pow(h));
      EXPECT_EQ(qgen::weighted_genocchi_number(2, w),
                -2 * (1 + q) * q.pow(h) / (one_plus_q_pow(h) * one_plus_q_pow(alpha + h)));
    }
  }
  EXPECT_EQ(qgen::weighted_genocchi_number(1, {1, 1}), RatFuncQ(1));
  EXPECT_EQ(qgen::weighted_genocchi_number(2, {1, 1}).eval_at(1), BigRational(-1));
}

TEST(Recurrence, FirstSteps) {
  const auto g = qgen::weighted_genocchi_recurrence(2, {1, 2});
  EXPECT_TRUE(g[0].is_zero());
  EXPECT_EQ(g[1], (1 + q) / one_plus_q_pow(2));
  EXPECT_EQ(g[2], -2 * (1 + q) * q.pow(2) / (one_plus_q_pow(2) * one_plus_q_pow(3)));
}

TEST(Recurrence, MatchesClosedFormAlphaTwoHThree) {
  const WeightParams w{2, 3};
  const auto g = qgen::weighted_genocchi_recurrence(10, w);
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(g[static_cast<std::size_t>(n)], qgen::weighted_genocchi_number(n, w)) << n;
}

TEST(Umbral, ReducesToNumbersAtZero) {
  for (long n = 0; n <= 6; ++n)
    EXPECT_EQ(qgen::weighted_genocchi_poly_umbral(n, {2, 1}, 0), qgen::weighted_genocchi_number(n, {2, 1}));
}

TEST(Umbral, FirstPolynomialIsConstant) {
  const WeightParams w{1, 2};
  const RatFuncQ g1 = qgen::weighted_genocchi_number(1, w);
  EXPECT_EQ(qgen::weighted_genocchi_poly_umbral(1, w, 1), g1);
  // q^h G_1(1) + G_1 = [2]_q
  EXPECT_EQ(q.pow(w.h) * qgen::weighted_genocchi_poly_closed(1, w, 1) + g1, qgen::two_q());
}

TEST(Umbral, AgreesWithShiftByTwo) {
  const WeightParams w{1, 1};
  const RatFuncQ expected = 2 * q.pow(-1) * qgen::two_q() + q.pow(-2) * qgen::weighted_genocchi_number(2, w);
  EXPECT_EQ(qgen::weighted_genocchi_poly_umbral(2, w, 2), expected);
}

TEST(Routes, TableIsConsistent) {
  const long xs[] = {-1, 0, 1, 2};
  const auto table = qgen::build_genocchi_table(6, {2, 3}, xs);
  EXPECT_TRUE(table.consistent());
  const auto* e = table.find({3, 2, 3, 0});
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->routes.size(), 4u);
  EXPECT_EQ(table.find({3, 2, 3, 1})->routes.size(), 3u);
}

TEST(Routes, InconsistentInsertIsFlagged) {
  qgen::GenocchiTable table;
  EXPECT_TRUE(table.insert({1, 1, 1, 0}, RatFuncQ(1), qgen::Route::ClosedForm));
  EXPECT_FALSE(table.insert({1, 1, 1, 0}, RatFuncQ(2), qgen::Route::Umbral));
  EXPECT_FALSE(table.consistent());
}

TEST(ClassicalLimit, MatchesBernoulliOracle) {
  const auto expected = oracle::genocchi_from_bernoulli(14);
  const auto series = qgen::classical_genocchi_table(14);
  for (long n = 0; n <= 14; ++n) {
    EXPECT_EQ(series[static_cast<std::size_t>(n)], expected[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(qgen::weighted_genocchi_number(n, {1, 1}).eval_at(1), expected[static_cast<std::size_t>(n)]) << n;
  }
  EXPECT_EQ(expected[12], BigRational(2073));
}

TEST(LegacyFamilies, QAndHQGenocchi) {
  EXPECT_EQ(qgen::q_genocchi(1), (1 + q) / one_plus_q_pow(2));
  for (long h = 1; h <= 3; ++h) EXPECT_TRUE(qgen::hq_genocchi(0, h).is_zero());
  for (long n = 0; n <= 6; ++n) {
    EXPECT_TRUE(qgen::q_genocchi_recurrence_residual(n).is_zero()) << n;
    for (long h = 1; h <= 3; ++h) EXPECT_TRUE(qgen::hq_genocchi_recurrence_residual(n, h).is_zero()) << n << ' ' << h;
  }
}

TEST(IntegralRoute, ConstantIntegrand) {
  const long levels[] = {0, 1, 2};
  const auto route = qgen::weighted_genocchi_integral_route(1, {1, 1}, 0, 3, 4, levels);
  EXPECT_TRUE(route.limit_agrees);
  EXPECT_EQ(route.trace.limit, BigRational(1));
  for (const auto& e : route.trace.entries) EXPECT_FALSE(e.valuation.has_value());
}

TEST(IntegralRoute, ValuationsAgainstBruteForceSums) {
  struct Case {
    long n, alpha, h, x, p;
    BigRational q;
  };
  const Case cases[] = {{2, 1, 1, 0, 3, 4}, {3, 2, 2, 1, 5, 6}, {3, 1, 3, 2, 3, 4}};
  const long levels[] = {1, 2, 3};
  for (const auto& c : cases) {
    const auto route = qgen::weighted_genocchi_integral_route(c.n, {c.alpha, c.h}, c.x, c.p, c.q, levels);
    EXPECT_TRUE(route.limit_agrees);
    for (const auto& e : route.trace.entries) {
      const BigRational brute = oracle::truncated_sum(
          [&](long xi) { return oracle::genocchi_integrand(c.n, c.alpha, c.h, c.x, xi, c.q); }, c.p, e.N, c.q);
      EXPECT_EQ(e.value, brute);
      EXPECT_GE(oracle::valuation(brute - route.closed_form_value, c.p), e.N);
    }
  }
}
