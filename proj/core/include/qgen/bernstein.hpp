#pragma once

#include <span>

#include "qgen/ratfunc.hpp"
#include "qgen/record.hpp"

namespace qgen {

/// Index (k, n) and weight alpha of B_{k,n}^{(alpha)}(x | q).
struct BernsteinIndex {
  long k = 0;
  long n = 0;
  long alpha = 1;
};

/// C(n,k) [x]_{q^alpha}^k [1-x]_{q^-alpha}^{n-k} at integer x.
/// IndexError unless 0 <= k <= n; DomainError unless alpha >= 1.
RatFuncQ bernstein_poly(const BernsteinIndex& idx, long x);

/// B_{k,n}(x | q) against B_{n-k,n}(1-x | 1/q).
VerificationRecord bernstein_symmetry_check(const BernsteinIndex& idx, long x);

/// sum_k B_{k,n}(x | q) against ([x]_{q^alpha} + [1-x]_{q^-alpha})^n.
VerificationRecord bernstein_completeness_check(long n, long alpha, long x);

/// sum_k samples[k] B_{k,n}(x | q); samples[k] stands for f(k/n).
/// ArityError unless samples.size() == n + 1.
RatFuncQ bernstein_operator(std::span<const BigRational> samples, long n, long alpha, long x);

}  // namespace qgen
