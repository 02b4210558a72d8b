#include "qgen/bernstein.hpp"

#include "qgen/errors.hpp"
#include "qgen/qcore.hpp"

namespace qgen {

namespace {

void check_index(const BernsteinIndex& idx) {
  if (idx.alpha < 1) throw DomainError("Bernstein weight alpha must be >= 1");
  if (idx.n < 0 || idx.k < 0 || idx.k > idx.n)
    throw IndexError("Bernstein index requires 0 <= k <= n, got k=" + std::to_string(idx.k) +
                     " n=" + std::to_string(idx.n));
}

}  // namespace

RatFuncQ bernstein_poly(const BernsteinIndex& idx, long x) {
  check_index(idx);
  return RatFuncQ(BigRational(binomial(idx.n, idx.k))) * qbracket(x, idx.alpha).pow(idx.k) *
         qbracket(1 - x, -idx.alpha).pow(idx.n - idx.k);
}

VerificationRecord bernstein_symmetry_check(const BernsteinIndex& idx, long x) {
  check_index(idx);
  RatFuncQ lhs = bernstein_poly(idx, x);
  RatFuncQ rhs = bernstein_poly({idx.n - idx.k, idx.n, idx.alpha}, 1 - x).subst_q_inverse();
  return make_record("bernstein-symmetry", {{"k", idx.k}, {"n", idx.n}, {"alpha", idx.alpha}, {"x", x}},
                     std::move(lhs), std::move(rhs));
}

VerificationRecord bernstein_completeness_check(long n, long alpha, long x) {
  if (n < 0) throw IndexError("Bernstein degree must be nonnegative");
  RatFuncQ lhs;
  for (long k = 0; k <= n; ++k) lhs += bernstein_poly({k, n, alpha}, x);
  RatFuncQ rhs = (qbracket(x, alpha) + qbracket(1 - x, -alpha)).pow(n);
  return make_record("bernstein-completeness", {{"n", n}, {"alpha", alpha}, {"x", x}}, std::move(lhs),
                     std::move(rhs));
}

RatFuncQ bernstein_operator(std::span<const BigRational> samples, long n, long alpha, long x) {
  if (n < 1) throw DomainError("Bernstein operator degree must be >= 1");
  if (static_cast<long>(samples.size()) != n + 1)
    throw ArityError("Bernstein operator of degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                     " samples, got " + std::to_string(samples.size()));
  RatFuncQ sum;
  for (long k = 0; k <= n; ++k) {
    const BigRational& s = samples[static_cast<std::size_t>(k)];
    if (s != 0) sum += RatFuncQ(s) * bernstein_poly({k, n, alpha}, x);
  }
  return sum;
}

}  // namespace qgen
