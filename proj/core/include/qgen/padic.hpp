#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qgen/int_poly.hpp"
#include "qgen/ratfunc.hpp"
#include "qgen/record.hpp"

namespace qgen {

/// Exact sums are used up to this truncation level; deeper levels switch to
/// arithmetic modulo p^M.
inline constexpr long kExactTruncationLimit = 4;
/// Default M - N for contexts built by convergence_probe.
inline constexpr long kGuardDigits = 4;

bool is_odd_prime(long p);

/// p-adic valuation of a nonzero rational; ValuationUndefinedError on 0.
long vp(const BigRational& r, long p);

/// Parameters of a truncated fermionic sum: odd prime p, truncation level N
/// (p^N terms), working precision p^M for the modular route, and a rational
/// q with v_p(q - 1) >= 1 and a denominator prime to p.
struct PadicContext {
  long p = 3;
  long N = 0;
  long M = 0;
  BigRational q = 4;

  /// Validates every invariant; DomainError otherwise.
  static PadicContext make(long p, long N, long M, const BigRational& q);
};

/// xi -> sum_m c_m q^{m xi}. Coefficients are rational functions of q so
/// that bracket powers such as [x + xi]_{q^alpha}^n expand exactly; plain
/// rational coefficients are the constant case.
class IntegrandSpec {
 public:
  using Terms = std::map<long, RatFuncQ>;

  IntegrandSpec() = default;
  static IntegrandSpec monomial(long m, const RatFuncQ& c = RatFuncQ(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(long m, const RatFuncQ& c);

  /// f_1(xi) = f(xi + 1): each c_m q^{m xi} becomes c_m q^m q^{m xi}.
  IntegrandSpec shifted() const;
  /// f(0) = sum of coefficients.
  RatFuncQ at_zero() const;
  /// f(xi) at a concrete q.
  BigRational value_at(long xi, const BigRational& q) const;

  IntegrandSpec scaled(const RatFuncQ& s) const;
  IntegrandSpec& operator+=(const IntegrandSpec& rhs);
  friend IntegrandSpec operator+(IntegrandSpec a, const IntegrandSpec& b) { return a += b; }
  friend IntegrandSpec operator*(const IntegrandSpec& a, const IntegrandSpec& b);
  friend bool operator==(const IntegrandSpec& a, const IntegrandSpec& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Normalized: divide the alternating sum by [p^N]_{-q}; Unnormalized: the
/// bare sum of q^xi f(xi) (-1)^xi.
enum class Normalization { Normalized, Unnormalized };

/// Integral of q^{m xi}: [2]_q / (1 + q^{m+1}) when normalized,
/// 2 / (1 + q^{m+1}) otherwise.
RatFuncQ moment_integral(long m, Normalization norm = Normalization::Normalized);
RatFuncQ integrate(const IntegrandSpec& spec, Normalization norm = Normalization::Normalized);

/// q I(f_1) + I(f) - [2]_q f(0), symbolically.
RatFuncQ functional_equation_residual(const IntegrandSpec& spec,
                                      Normalization norm = Normalization::Normalized);
VerificationRecord functional_equation_check(const IntegrandSpec& spec);

/// S_N(f) = (1/[p^N]_{-q}) sum_{xi < p^N} f(xi) (-q)^xi at q = ctx.q.
/// Exact for N <= kExactTruncationLimit, modular otherwise.
BigRational truncated_integral(const IntegrandSpec& spec, const PadicContext& ctx);
BigRational truncated_integral_exact(const IntegrandSpec& spec, const PadicContext& ctx);
/// Representative r with v_p(S_N - r) >= M. r = Y / p^E where E absorbs
/// p-powers in the coefficient denominators.
BigRational truncated_integral_modular(const IntegrandSpec& spec, const PadicContext& ctx);
/// sum_{xi < p^N} q^xi f(xi) (-1)^xi without the normalizer, exact.
BigRational truncated_sum_unnormalized(const IntegrandSpec& spec, const PadicContext& ctx);

struct TraceEntry {
  long N = 0;
  BigRational value;
  /// nullopt: difference is exactly zero (+infinity).
  std::optional<long> valuation;
  /// Set when the modular route could only certify valuation >= M.
  bool lower_bound = false;
  bool exact_path = true;
};

struct ConvergenceTrace {
  long p = 3;
  BigRational q;
  std::vector<TraceEntry> entries;
  RatFuncQ limit_symbolic;
  BigRational limit;
  bool nondecreasing = true;
  /// Smallest C >= 0 with v_p(S_N - L) >= N - C on every entry.
  long constant = 0;
};

ConvergenceTrace convergence_probe(const IntegrandSpec& spec, long p, const BigRational& q,
                                   std::span<const long> levels, long guard_digits = kGuardDigits);

}  // namespace qgen
