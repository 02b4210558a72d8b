#pragma once

#include <utility>

#include "qgen/int_poly.hpp"
#include "qgen/laurent.hpp"
#include "qgen/ratfunc.hpp"

namespace qgen {

/// [2]_q = 1 + q.
RatFuncQ two_q();

/// q-bracket [x]_{q^a} = (1 - q^{a x}) / (1 - q^a) for any integer x.
/// Throws InvalidScaleError when a == 0.
RatFuncQ qbracket(long x, long a);

/// Both sides of the reflection rule for brackets:
///   first  = [1 - x]_{q^-alpha}^n
///   second = (-1)^n q^{n alpha} [x - 1]_{q^alpha}^n
/// Kept as a permanent witness; the two components are always equal.
std::pair<RatFuncQ, RatFuncQ> qbracket_reflect(long x, long alpha, long n);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace qgen
