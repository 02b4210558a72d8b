#include <random>

#include <gtest/gtest.h>

#include "qgen/errors.hpp"
#include "qgen/laurent.hpp"
#include "qgen/ratfunc.hpp"

using qgen::BigRational;
using qgen::LaurentPolyQ;
using qgen::RatFuncQ;

namespace {

const RatFuncQ q = RatFuncQ::q();

RatFuncQ one_plus_q_pow(long e) { return RatFuncQ(1) + RatFuncQ::monomial(1, e); }

RatFuncQ random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> expo(-3, 4);
  LaurentPolyQ num, den;
  for (int i = 0; i < 3; ++i) num.add_term(expo(rng), coeff(rng));
  for (int i = 0; i < 2; ++i) den.add_term(expo(rng), coeff(rng));
  if (den.is_zero()) den = LaurentPolyQ(BigRational(1));
  return RatFuncQ(num, den);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(qgen::parse_rational("4/1"), BigRational(4));
  EXPECT_EQ(qgen::parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(qgen::to_string(BigRational(5, 2)), "5/2");
  EXPECT_THROW(qgen::parse_rational("1/0"), qgen::ParseError);
  EXPECT_THROW(qgen::parse_rational("abc"), qgen::ParseError);
}

TEST(Laurent, ArithmeticAndRoundTrip) {
  LaurentPolyQ p;
  p.add_term(-2, BigRational(1, 3));
  p.add_term(1, -2);
  EXPECT_EQ(p.min_exponent(), -2);
  EXPECT_EQ(p.max_exponent(), 1);
  EXPECT_EQ(LaurentPolyQ::parse(p.to_string()), p);
  EXPECT_EQ(p.eval_at(BigRational(1, 2)), BigRational(4, 3) - 1);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(RatFunc, CancelsCommonFactors) {
  // (1 - q^2) / (1 - q) = 1 + q
  LaurentPolyQ num(BigRational(1)), den(BigRational(1));
  num.add_term(2, -1);
  den.add_term(1, -1);
  EXPECT_EQ(RatFuncQ(num, den), 1 + q);
  EXPECT_TRUE(RatFuncQ(num, den).is_polynomial());
}

TEST(RatFunc, ProductsAndInverse) {
  EXPECT_EQ((1 + q) * one_plus_q_pow(2), 1 + q + q * q + q.pow(3));
  const RatFuncQ f = (1 + q) / one_plus_q_pow(2);
  EXPECT_EQ(f.pow(-1), one_plus_q_pow(2) / (1 + q));
  EXPECT_EQ(f * f.inverse(), RatFuncQ(1));
  EXPECT_THROW(RatFuncQ().inverse(), qgen::ArithmeticError);
}

TEST(RatFunc, SubstituteInverse) {
  EXPECT_EQ(q.pow(3).subst_q_inverse(), q.pow(-3));
  // (1+q)/(1+q^2) at 1/q is q (1+q) / (1+q^2).
  const RatFuncQ f = (1 + q) / one_plus_q_pow(2);
  EXPECT_EQ(f.subst_q_inverse(), q * (1 + q) / one_plus_q_pow(2));
  EXPECT_EQ(f.subst_q_inverse().eval_at(5), f.eval_at(BigRational(1, 5)));
  EXPECT_TRUE(RatFuncQ().subst_q_inverse().is_zero());
}

TEST(RatFunc, Evaluation) {
  EXPECT_EQ((1 + q).eval_at(1), BigRational(2));
  EXPECT_EQ(((1 + q) / one_plus_q_pow(1)).eval_at(1), BigRational(1));
  EXPECT_EQ(q.pow(-1).eval_at(BigRational(1, 2)), BigRational(2));
  EXPECT_THROW((RatFuncQ(1) / (1 - q)).eval_at(1), qgen::PoleError);
  EXPECT_THROW(q.pow(-1).eval_at(0), qgen::PoleError);
}

TEST(RatFunc, StructuralEqualityIsValueEquality) {
  std::mt19937_64 rng(7);
  const BigRational points[] = {2, 3, BigRational(5, 2), BigRational(-7, 3)};
  for (int trial = 0; trial < 100; ++trial) {
    const RatFuncQ a = random_ratfunc(rng);
    const RatFuncQ b = random_ratfunc(rng);
    const RatFuncQ lhs = (a + b) * (a - b);
    const RatFuncQ rhs = a * a - b * b;
    EXPECT_EQ(lhs, rhs);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    for (const auto& x : points) {
      BigRational va, vb;
      try {
        va = a.eval_at(x);
        vb = b.eval_at(x);
      } catch (const qgen::PoleError&) {
        continue;
      }
      EXPECT_EQ((a * b).eval_at(x), va * vb);
      EXPECT_EQ((a + b).eval_at(x), va + vb);
    }
  }
}

TEST(RatFunc, TextRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RatFuncQ f = random_ratfunc(rng) / 3;
    EXPECT_EQ(RatFuncQ::parse(f.to_string()), f) << f.to_string();
  }
  EXPECT_TRUE(RatFuncQ::parse(RatFuncQ().to_string()).is_zero());
  EXPECT_THROW(RatFuncQ::parse("(1*q^0) / (0)"), qgen::ParseError);
}
