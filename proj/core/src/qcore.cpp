#include "qgen/qcore.hpp"

#include "qgen/errors.hpp"

namespace qgen {

RatFuncQ two_q() {
  static const RatFuncQ value(LaurentPolyQ(LaurentPolyQ::Terms{{0, 1}, {1, 1}}));
  return value;
}

RatFuncQ qbracket(long x, long a) {
  if (a == 0) throw InvalidScaleError("q-bracket with base q^0");
  // x >= 0: 1 + q^a + ... + q^{a(x-1)}
  // x <  0: -(q^{ax} + ... + q^{-a})
  LaurentPolyQ sum;
  if (x >= 0) {
    for (long i = 0; i < x; ++i) sum.add_term(a * i, 1);
  } else {
    for (long i = x; i < 0; ++i) sum.add_term(a * i, -1);
  }
  return RatFuncQ(sum);
}

std::pair<RatFuncQ, RatFuncQ> qbracket_reflect(long x, long alpha, long n) {
  if (alpha < 1) throw DomainError("qbracket_reflect: alpha must be positive");
  if (n < 0) throw DomainError("qbracket_reflect: n must be nonnegative");
  RatFuncQ lhs = qbracket(1 - x, -alpha).pow(n);
  RatFuncQ rhs = RatFuncQ::monomial(n % 2 == 0 ? 1 : -1, n * alpha) * qbracket(x - 1, alpha).pow(n);
  return {std::move(lhs), std::move(rhs)};
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qgen
