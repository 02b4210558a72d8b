#include "qgen/genocchi.hpp"

#include "qgen/errors.hpp"
#include "qgen/qcore.hpp"

namespace qgen {

namespace {

RatFuncQ one_plus_q_pow(long e) {
  LaurentPolyQ p(BigRational(1));
  p.add_term(e, 1);
  return RatFuncQ(p);
}

RatFuncQ signed_binomial(long n, long k) {
  BigRational c(binomial(n, k));
  return RatFuncQ(k % 2 == 0 ? c : BigRational(-c));
}

void check(WeightParams w) { (void)WeightParams::make(w.alpha, w.h); }

}  // namespace

WeightParams WeightParams::make(long alpha, long h) {
  if (alpha < 1) throw DomainError("weight alpha must be >= 1, got " + std::to_string(alpha));
  if (h < 1) throw DomainError("h must be >= 1, got " + std::to_string(h));
  return WeightParams{alpha, h};
}

RatFuncQ weighted_genocchi_poly_closed(long n, WeightParams w, long x) {
  if (n < 0) throw DomainError("Genocchi index must be nonnegative");
  check(w);
  if (n == 0) return RatFuncQ();
  RatFuncQ sum;
  for (long l = 0; l < n; ++l) {
    sum += signed_binomial(n - 1, l) * RatFuncQ::monomial(1, w.alpha * l * x) / one_plus_q_pow(w.alpha * l + w.h);
  }
  LaurentPolyQ one_minus(BigRational(1));
  one_minus.add_term(w.alpha, -1);
  const RatFuncQ prefactor = RatFuncQ(BigRational(n)) * two_q();
  return prefactor * sum / RatFuncQ(one_minus).pow(n - 1);
}

RatFuncQ weighted_genocchi_number(long n, WeightParams w) { return weighted_genocchi_poly_closed(n, w, 0); }

std::vector<RatFuncQ> weighted_genocchi_recurrence(long n_max, WeightParams w) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  check(w);
  std::vector<RatFuncQ> g(static_cast<std::size_t>(n_max) + 1);
  if (n_max == 0) return g;
  g[1] = two_q() / one_plus_q_pow(w.h);
  for (long n = 2; n <= n_max; ++n) {
    RatFuncQ sum;
    for (long k = 1; k < n; ++k)
      sum += RatFuncQ(BigRational(binomial(n, k))) * RatFuncQ::monomial(1, w.alpha * k) * g[static_cast<std::size_t>(k)];
    g[static_cast<std::size_t>(n)] =
        -RatFuncQ::monomial(1, w.h - w.alpha) * sum / one_plus_q_pow(w.h + w.alpha * (n - 1));
  }
  return g;
}

RatFuncQ weighted_genocchi_poly_umbral(long n, WeightParams w, long x, std::span<const RatFuncQ> numbers) {
  if (n < 0) throw DomainError("Genocchi index must be nonnegative");
  check(w);
  if (static_cast<long>(numbers.size()) <= n) throw DomainError("umbral expansion needs G_0 .. G_n");
  const RatFuncQ bracket = qbracket(x, w.alpha);
  RatFuncQ sum;
  // k = 0 contributes C(n,0) G_0 [x]^n = 0.
  for (long k = 1; k <= n; ++k) {
    const RatFuncQ& gk = numbers[static_cast<std::size_t>(k)];
    if (gk.is_zero()) continue;
    sum += RatFuncQ(BigRational(binomial(n, k))) * RatFuncQ::monomial(1, w.alpha * k * x) * gk * bracket.pow(n - k);
  }
  return RatFuncQ::monomial(1, -w.alpha * x) * sum;
}

RatFuncQ weighted_genocchi_poly_umbral(long n, WeightParams w, long x) {
  const auto numbers = weighted_genocchi_recurrence(std::max(n, 0L), w);
  return weighted_genocchi_poly_umbral(n, w, x, numbers);
}

IntegrandSpec genocchi_integrand(long n, WeightParams w, long x) {
  if (n < 1) throw DomainError("genocchi_integrand requires n >= 1");
  check(w);
  // [x + xi]^{n-1} = (1 - q^alpha)^{-(n-1)} sum_l C(n-1,l) (-1)^l q^{alpha l x} q^{alpha l xi}
  LaurentPolyQ one_minus(BigRational(1));
  one_minus.add_term(w.alpha, -1);
  const RatFuncQ inv = RatFuncQ(one_minus).pow(-(n - 1));
  IntegrandSpec spec;
  for (long l = 0; l < n; ++l)
    spec.add_term(w.h - 1 + w.alpha * l, signed_binomial(n - 1, l) * RatFuncQ::monomial(1, w.alpha * l * x) * inv);
  return spec;
}

RatFuncQ weighted_genocchi_poly_moments(long n, WeightParams w, long x) {
  if (n == 0) return RatFuncQ();
  return RatFuncQ(BigRational(n)) * integrate(genocchi_integrand(n, w, x));
}

IntegralRoute weighted_genocchi_integral_route(long n, WeightParams w, long x, long p, const BigRational& q,
                                               std::span<const long> levels) {
  IntegralRoute route;
  route.trace = convergence_probe(genocchi_integrand(n, w, x), p, q, levels);
  route.closed_form_value = weighted_genocchi_poly_closed(n, w, x).eval_at(q) / BigRational(n);
  route.limit_agrees = route.trace.limit == route.closed_form_value;
  return route;
}

std::vector<BigRational> classical_genocchi_table(long n_max) {
  if (n_max < 0) return {};
  // (e^t + 1) B(t) = 2t, solved term by term.
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<BigRational> a(size + 1);
  BigInt fact = 1;
  a[0] = 2;
  for (std::size_t k = 1; k <= size; ++k) {
    fact *= static_cast<unsigned long>(k);
    a[k] = BigRational(1, 1) / BigRational(fact);
  }
  std::vector<BigRational> b(size);
  for (std::size_t j = 0; j < size; ++j) {
    BigRational rhs = j == 1 ? 2 : 0;
    for (std::size_t i = 0; i < j; ++i) rhs -= b[i] * a[j - i];
    b[j] = rhs / a[0];
  }
  std::vector<BigRational> g(size);
  fact = 1;
  for (std::size_t n = 0; n < size; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    g[n] = b[n] * BigRational(fact);
  }
  return g;
}

BigRational classical_genocchi(long n) {
  if (n < 0) throw DomainError("Genocchi index must be nonnegative");
  return classical_genocchi_table(n).back();
}

RatFuncQ q_genocchi(long n) { return weighted_genocchi_number(n, WeightParams{1, 2}); }

RatFuncQ hq_genocchi(long n, long h) { return weighted_genocchi_number(n, WeightParams::make(1, h)); }

RatFuncQ hq_genocchi_recurrence_residual(long n, long h) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const WeightParams w = WeightParams::make(1, h);
  RatFuncQ umbral;
  for (long k = 1; k <= n; ++k)
    umbral += RatFuncQ(BigRational(binomial(n, k))) * RatFuncQ::monomial(1, k) * weighted_genocchi_number(k, w);
  RatFuncQ residual = RatFuncQ::monomial(1, h - 1) * umbral + weighted_genocchi_number(n, w);
  if (n == 1) residual -= two_q();
  return residual;
}

RatFuncQ q_genocchi_recurrence_residual(long n) { return hq_genocchi_recurrence_residual(n, 2); }

std::string_view to_string(Route r) {
  switch (r) {
    case Route::ClosedForm: return "closed-form";
    case Route::Recurrence: return "recurrence";
    case Route::Umbral: return "umbral";
    case Route::Moments: return "integral";
  }
  return "?";
}

bool GenocchiTable::insert(const Key& key, const RatFuncQ& value, Route route) {
  auto [it, inserted] = entries_.try_emplace(key, Entry{value, {route}, true});
  if (inserted) return true;
  it->second.routes.insert(route);
  if (it->second.value == value) return true;
  it->second.consistent = false;
  return false;
}

const GenocchiTable::Entry* GenocchiTable::find(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

bool GenocchiTable::consistent() const {
  for (const auto& [k, e] : entries_)
    if (!e.consistent) return false;
  return true;
}

GenocchiTable build_genocchi_table(long n_max, WeightParams w, std::span<const long> xs) {
  GenocchiTable table;
  const auto numbers = weighted_genocchi_recurrence(std::max(n_max, 0L), w);
  for (long x : xs) {
    for (long n = 0; n <= n_max; ++n) {
      const GenocchiTable::Key key{n, w.alpha, w.h, x};
      table.insert(key, weighted_genocchi_poly_closed(n, w, x), Route::ClosedForm);
      table.insert(key, weighted_genocchi_poly_umbral(n, w, x, numbers), Route::Umbral);
      table.insert(key, weighted_genocchi_poly_moments(n, w, x), Route::Moments);
      if (x == 0) table.insert(key, numbers[static_cast<std::size_t>(n)], Route::Recurrence);
    }
  }
  return table;
}

GenocchiFamily::GenocchiFamily(WeightParams w, long n_max) : w_(w) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  numbers_.reserve(static_cast<std::size_t>(n_max) + 1);
  inverted_.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    numbers_.push_back(weighted_genocchi_number(n, w));
    inverted_.push_back(numbers_.back().subst_q_inverse());
  }
}

const RatFuncQ& GenocchiFamily::number(long n) const {
  if (n < 0 || n > n_max()) throw DomainError("Genocchi index outside the family's range");
  return numbers_[static_cast<std::size_t>(n)];
}

const RatFuncQ& GenocchiFamily::number_q_inverse(long n) const {
  if (n < 0 || n > n_max()) throw DomainError("Genocchi index outside the family's range");
  return inverted_[static_cast<std::size_t>(n)];
}

}  // namespace qgen
