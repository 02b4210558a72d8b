#include "qgen/padic.hpp"

#include <algorithm>

#include "qgen/errors.hpp"
#include "qgen/laurent.hpp"
#include "qgen/qcore.hpp"

namespace qgen {

namespace {

BigInt ipow(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

long vp_int(BigInt n, long p) {
  long v = 0;
  v = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), BigInt(p).get_mpz_t()));
  return v;
}

// Residue of a p-integral rational modulo mod; PrecisionError if its
// denominator is not invertible.
BigInt residue(const BigRational& r, const BigInt& mod) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), mod.get_mpz_t()) == 0)
    throw PrecisionError("denominator divisible by p in modular truncated integral");
  BigInt out = r.get_num() * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), mod.get_mpz_t());
  return out;
}

BigInt mod_pow(const BigInt& base, long e, const BigInt& mod) {
  BigInt b = base;
  if (e < 0) {
    if (mpz_invert(b.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw PrecisionError("q is not a unit modulo p^M");
    e = -e;
  }
  BigInt r;
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e), mod.get_mpz_t());
  return r;
}

// sum_{xi < count} r^xi, exactly.
BigRational geometric_run(const BigRational& r, const BigInt& count) {
  BigRational sum = 0;
  BigRational term = 1;
  for (BigInt i = 0; i < count; ++i) {
    sum += term;
    term *= r;
  }
  return sum;
}

BigInt geometric_run_mod(const BigInt& r, const BigInt& count, const BigInt& mod) {
  BigInt sum = 0;
  BigInt term = 1;
  for (BigInt i = 0; i < count; ++i) {
    sum += term;
    term *= r;
    mpz_mod(term.get_mpz_t(), term.get_mpz_t(), mod.get_mpz_t());
  }
  mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), mod.get_mpz_t());
  return sum;
}

}  // namespace

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long vp(const BigRational& r, long p) {
  if (r == 0) throw ValuationUndefinedError("valuation of zero");
  return vp_int(r.get_num(), p) - vp_int(r.get_den(), p);
}

PadicContext PadicContext::make(long p, long N, long M, const BigRational& q) {
  if (!is_odd_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
  if (N < 0) throw DomainError("truncation level N must be nonnegative");
  if (M < N) throw DomainError("working precision M must be at least N");
  if (vp_int(q.get_den(), p) != 0) throw DomainError("q must have a denominator prime to p");
  const BigRational diff = q - 1;
  if (diff != 0 && vp(diff, p) < 1) throw DomainError("q must satisfy v_p(q - 1) >= 1");
  return PadicContext{p, N, M, q};
}

IntegrandSpec IntegrandSpec::monomial(long m, const RatFuncQ& c) {
  IntegrandSpec s;
  s.add_term(m, c);
  return s;
}

void IntegrandSpec::add_term(long m, const RatFuncQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

IntegrandSpec IntegrandSpec::shifted() const {
  IntegrandSpec s;
  for (const auto& [m, c] : terms_) s.add_term(m, c * RatFuncQ::monomial(1, m));
  return s;
}

RatFuncQ IntegrandSpec::at_zero() const {
  RatFuncQ sum;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

BigRational IntegrandSpec::value_at(long xi, const BigRational& q) const {
  BigRational sum = 0;
  for (const auto& [m, c] : terms_) sum += c.eval_at(q) * pow(q, m * xi);
  return sum;
}

IntegrandSpec IntegrandSpec::scaled(const RatFuncQ& s) const {
  IntegrandSpec out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * s);
  return out;
}

IntegrandSpec& IntegrandSpec::operator+=(const IntegrandSpec& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

IntegrandSpec operator*(const IntegrandSpec& a, const IntegrandSpec& b) {
  IntegrandSpec out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

RatFuncQ moment_integral(long m, Normalization norm) {
  LaurentPolyQ den(BigRational(1));
  den.add_term(m + 1, 1);
  const RatFuncQ numerator = norm == Normalization::Normalized ? two_q() : RatFuncQ(2);
  return numerator / RatFuncQ(den);
}

RatFuncQ integrate(const IntegrandSpec& spec, Normalization norm) {
  RatFuncQ sum;
  for (const auto& [m, c] : spec.terms()) sum += c * moment_integral(m, norm);
  return sum;
}

RatFuncQ functional_equation_residual(const IntegrandSpec& spec, Normalization norm) {
  return RatFuncQ::q() * integrate(spec.shifted(), norm) + integrate(spec, norm) - two_q() * spec.at_zero();
}

VerificationRecord functional_equation_check(const IntegrandSpec& spec) {
  std::vector<long> exponents;
  for (const auto& [m, c] : spec.terms()) exponents.push_back(m);
  RatFuncQ lhs = RatFuncQ::q() * integrate(spec.shifted()) + integrate(spec);
  RatFuncQ rhs = two_q() * spec.at_zero();
  return make_record("functional-equation", {{"m", exponents}}, std::move(lhs), std::move(rhs));
}

BigRational truncated_integral(const IntegrandSpec& spec, const PadicContext& ctx) {
  return ctx.N <= kExactTruncationLimit ? truncated_integral_exact(spec, ctx)
                                        : truncated_integral_modular(spec, ctx);
}

BigRational truncated_integral_exact(const IntegrandSpec& spec, const PadicContext& ctx) {
  const BigInt count = ipow(ctx.p, ctx.N);
  const BigRational& q = ctx.q;
  BigRational total = 0;
  for (const auto& [m, c] : spec.terms()) {
    const BigRational cq = c.eval_at(q);
    if (cq == 0) continue;
    total += cq * geometric_run(-pow(q, m + 1), count);
  }
  const BigRational normalizer = geometric_run(-q, count);
  return total / normalizer;
}

BigRational truncated_integral_modular(const IntegrandSpec& spec, const PadicContext& ctx) {
  const BigInt count = ipow(ctx.p, ctx.N);

  std::vector<std::pair<long, BigRational>> coeffs;
  long guard = 0;
  for (const auto& [m, c] : spec.terms()) {
    BigRational cq = c.eval_at(ctx.q);
    if (cq == 0) continue;
    guard = std::max(guard, -vp(cq, ctx.p));
    coeffs.emplace_back(m, std::move(cq));
  }

  const BigInt mod = ipow(ctx.p, ctx.M + guard);
  const BigInt p_guard = ipow(ctx.p, guard);
  const BigInt qmod = residue(ctx.q, mod);

  BigInt total = 0;
  for (const auto& [m, cq] : coeffs) {
    BigInt ratio = mod - mod_pow(qmod, m + 1, mod);
    BigInt term = residue(cq * BigRational(p_guard), mod) * geometric_run_mod(ratio, count, mod);
    total += term;
  }
  BigInt minus_q = mod - qmod;
  BigInt normalizer = geometric_run_mod(minus_q, count, mod);
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), normalizer.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw PrecisionError("normalizer [p^N]_{-q} is not a unit modulo p^M");
  total *= inv;
  mpz_mod(total.get_mpz_t(), total.get_mpz_t(), mod.get_mpz_t());
  BigRational out(total, p_guard);
  out.canonicalize();
  return out;
}

BigRational truncated_sum_unnormalized(const IntegrandSpec& spec, const PadicContext& ctx) {
  const BigInt count = ipow(ctx.p, ctx.N);
  BigRational total = 0;
  for (const auto& [m, c] : spec.terms()) {
    const BigRational cq = c.eval_at(ctx.q);
    if (cq == 0) continue;
    total += cq * geometric_run(-pow(ctx.q, m + 1), count);
  }
  return total;
}

ConvergenceTrace convergence_probe(const IntegrandSpec& spec, long p, const BigRational& q,
                                   std::span<const long> levels, long guard_digits) {
  ConvergenceTrace trace;
  trace.p = p;
  trace.q = q;
  trace.limit_symbolic = integrate(spec);
  trace.limit = trace.limit_symbolic.eval_at(q);

  std::optional<long> previous;
  bool previous_infinite = false;
  bool first = true;
  for (long N : levels) {
    const auto ctx = PadicContext::make(p, N, N + guard_digits, q);
    TraceEntry e;
    e.N = N;
    e.exact_path = N <= kExactTruncationLimit;
    e.value = truncated_integral(spec, ctx);
    const BigRational diff = e.value - trace.limit;
    if (diff != 0) {
      long v = vp(diff, p);
      if (!e.exact_path && v >= ctx.M) {
        v = ctx.M;
        e.lower_bound = true;
      }
      e.valuation = v;
    } else if (!e.exact_path) {
      e.valuation = ctx.M;
      e.lower_bound = true;
    }

    if (!first) {
      if (previous_infinite && e.valuation) trace.nondecreasing = false;
      if (!previous_infinite && e.valuation && previous && *e.valuation < *previous) trace.nondecreasing = false;
    }
    first = false;
    previous = e.valuation;
    previous_infinite = !e.valuation.has_value();
    if (e.valuation) trace.constant = std::max(trace.constant, N - *e.valuation);
    trace.entries.push_back(std::move(e));
  }
  return trace;
}

}  // namespace qgen
