#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "qgen/padic.hpp"
#include "qgen/ratfunc.hpp"

namespace qgen {

/// Weight alpha >= 1 and exponent shift h >= 1 of the (h,q)-Genocchi family.
struct WeightParams {
  long alpha = 1;
  long h = 1;

  /// DomainError unless alpha >= 1 and h >= 1.
  static WeightParams make(long alpha, long h);
  friend auto operator<=>(const WeightParams&, const WeightParams&) = default;
};

/// G_n(x) = n [2]_q (1 - q^alpha)^{-(n-1)}
///          * sum_{l<n} C(n-1,l) (-1)^l q^{alpha l x} / (1 + q^{alpha l + h}),
/// the value of n * integral q^{(h-1) xi} [x + xi]_{q^alpha}^{n-1}.
/// n = 0 gives 0. The (1 - q^alpha) powers always cancel.
RatFuncQ weighted_genocchi_poly_closed(long n, WeightParams w, long x);

/// G_n = G_n(0); G_0 = 0.
RatFuncQ weighted_genocchi_number(long n, WeightParams w);

/// G_0 .. G_{n_max} from
///   G_1 = [2]_q / (1 + q^h),
///   G_n (1 + q^{h + alpha(n-1)}) = -q^{h-alpha} sum_{k=1}^{n-1} C(n,k) q^{alpha k} G_k.
/// Index 0 holds G_0 = 0.
std::vector<RatFuncQ> weighted_genocchi_recurrence(long n_max, WeightParams w);

/// Umbral expansion G_n(x) = q^{-alpha x} sum_k C(n,k) q^{alpha k x} G_k [x]_{q^alpha}^{n-k}
/// with G^0 read as G_0 = 0. `numbers` must hold G_0 .. G_n.
RatFuncQ weighted_genocchi_poly_umbral(long n, WeightParams w, long x, std::span<const RatFuncQ> numbers);
/// Same, with numbers taken from the recurrence.
RatFuncQ weighted_genocchi_poly_umbral(long n, WeightParams w, long x);

/// q^{(h-1) xi} [x + xi]_{q^alpha}^{n-1} expanded into q-exponentials.
/// Requires n >= 1.
IntegrandSpec genocchi_integrand(long n, WeightParams w, long x);

/// n * integrate(genocchi_integrand(n, w, x)): the moment-engine route.
RatFuncQ weighted_genocchi_poly_moments(long n, WeightParams w, long x);

struct IntegralRoute {
  ConvergenceTrace trace;
  /// Closed form at q, divided by n: what the truncated sums must approach.
  BigRational closed_form_value;
  bool limit_agrees = false;
};

/// Truncated fermionic sums of the defining integrand at rational q against
/// the closed form.
IntegralRoute weighted_genocchi_integral_route(long n, WeightParams w, long x, long p, const BigRational& q,
                                               std::span<const long> levels);

/// Ordinary Genocchi numbers: n! [t^n] 2t / (e^t + 1) by exact series
/// division.
BigRational classical_genocchi(long n);
std::vector<BigRational> classical_genocchi_table(long n_max);

/// q-Genocchi numbers G_{n,q}: the alpha = 1, h = 2 member.
RatFuncQ q_genocchi(long n);
/// (h,q)-Genocchi numbers: the alpha = 1 member.
RatFuncQ hq_genocchi(long n, long h);
/// q (q G + 1)^n + G_n - [2]_q [n = 1] under the umbral convention.
RatFuncQ q_genocchi_recurrence_residual(long n);
/// q^{h-1} (q G + 1)^n + G_n - [2]_q [n = 1].
RatFuncQ hq_genocchi_recurrence_residual(long n, long h);

enum class Route { ClosedForm, Recurrence, Umbral, Moments };
std::string_view to_string(Route r);

/// Memo of G_n(x) values keyed by (n, alpha, h, x), with the routes that
/// produced each value. Inserting a value that disagrees with a stored one
/// marks the entry inconsistent.
class GenocchiTable {
 public:
  struct Key {
    long n = 0;
    long alpha = 1;
    long h = 1;
    long x = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct Entry {
    RatFuncQ value;
    std::set<Route> routes;
    bool consistent = true;
  };

  /// Returns false if `value` disagrees with an existing entry.
  bool insert(const Key& key, const RatFuncQ& value, Route route);
  const Entry* find(const Key& key) const;
  const std::map<Key, Entry>& entries() const { return entries_; }
  bool consistent() const;

 private:
  std::map<Key, Entry> entries_;
};

/// All four symbolic routes for 0 <= n <= n_max at every x in xs.
GenocchiTable build_genocchi_table(long n_max, WeightParams w, std::span<const long> xs);

/// Immutable G_0 .. G_{n_max} for one (alpha, h), with the same numbers at
/// q^{-1}. Built once, then shared read-only between workers.
class GenocchiFamily {
 public:
  GenocchiFamily(WeightParams w, long n_max);

  WeightParams weights() const { return w_; }
  long n_max() const { return static_cast<long>(numbers_.size()) - 1; }
  const RatFuncQ& number(long n) const;
  const RatFuncQ& number_q_inverse(long n) const;

 private:
  WeightParams w_;
  std::vector<RatFuncQ> numbers_;
  std::vector<RatFuncQ> inverted_;
};

}  // namespace qgen
