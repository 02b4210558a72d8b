#include "qgen/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qgen {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  if (s == 0) return {};
  IntPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.resize(c_.size() + k);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (low_order() < k) throw std::logic_error("IntPoly::shifted_down: not divisible by q^k");
  IntPoly r;
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

IntPoly IntPoly::reversed() const {
  IntPoly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt IntPoly::max_norm() const {
  BigInt m = 0;
  for (const auto& c : c_) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("IntPoly::divide_exact: division by zero polynomial");
  if (is_zero()) return IntPoly{};
  if (degree() < d.degree()) return std::nullopt;
  if (d.c_.size() == 1) {
    IntPoly q = *this;
    for (auto& c : q.c_) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.c_[0].get_mpz_t())) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.c_[0].get_mpz_t());
    }
    return q;
  }
  // Cheap rejection on the constant terms before the full division.
  if (d.c_[0] != 0 && !mpz_divisible_p(c_[0].get_mpz_t(), d.c_[0].get_mpz_t())) return std::nullopt;

  const std::size_t dd = d.c_.size() - 1;
  const BigInt& lc = d.c_.back();
  std::vector<BigInt> r = c_;
  std::vector<BigInt> q(c_.size() - dd);
  BigInt qi;
  for (std::size_t i = c_.size(); i-- > dd;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(qi.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    const std::size_t base = i - dd;
    for (std::size_t j = 0; j <= dd; ++j)
      mpz_submul(r[base + j].get_mpz_t(), qi.get_mpz_t(), d.c_[j].get_mpz_t());
    q[base] = qi;
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (r[j] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("IntPoly::pseudo_remainder: zero divisor");
  std::vector<BigInt> r = c_;
  const std::size_t dd = d.c_.size() - 1;
  const BigInt& lc = d.c_.back();
  BigInt lead;
  while (!r.empty() && r.size() - 1 >= dd) {
    lead = r.back();
    const std::size_t base = r.size() - 1 - dd;
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j <= dd; ++j)
      mpz_submul(r[base + j].get_mpz_t(), lead.get_mpz_t(), d.c_[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

BigRational IntPoly::evaluate(const BigRational& x) const {
  if (is_zero()) return 0;
  // Homogenised Horner: sum c_i a^i b^(D-i), then divide by b^D.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = 0;
  BigInt bpow = 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= a;
    acc += c_[i] * bpow;
    bpow *= b;
  }
  // bpow now holds b^(D+1); undo the final step.
  mpz_divexact(bpow.get_mpz_t(), bpow.get_mpz_t(), b.get_mpz_t());
  BigRational r(acc, bpow);
  r.canonicalize();
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a : b;
  const auto& small = a.c_.size() >= b.c_.size() ? b : a;
  IntPoly r = big;
  for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  if (c == 1) return p;
  std::vector<BigInt> v = p.coeffs();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly gcd_prs(const IntPoly& a, const IntPoly& b) {
  IntPoly f = primitive_part(a);
  IntPoly g = primitive_part(b);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPoly r = primitive_part(f.pseudo_remainder(g));
    f = std::move(g);
    g = std::move(r);
  }
  return primitive_part(f);
}

namespace {

// Balanced base-x digits of gamma, read as polynomial coefficients.
IntPoly interpolate(BigInt gamma, const BigInt& x) {
  std::vector<BigInt> coeffs;
  BigInt half = x / 2;
  BigInt digit;
  while (gamma != 0) {
    mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), x.get_mpz_t());
    if (digit > half) digit -= x;
    coeffs.push_back(digit);
    gamma -= digit;
    mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), x.get_mpz_t());
  }
  return IntPoly(std::move(coeffs));
}

std::optional<IntPoly> gcd_heuristic(const IntPoly& f, const IntPoly& g) {
  constexpr int kAttempts = 6;
  const BigInt fn = f.max_norm();
  const BigInt gn = g.max_norm();
  // Evaluation point must exceed 2*min(|f|,|g|)+2 for the interpolated
  // divisor to be the full gcd once it divides both inputs.
  BigInt x = 2 * (fn < gn ? fn : gn) + 29;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    BigInt fx = f.evaluate(x);
    BigInt gx = g.evaluate(x);
    if (fx != 0 && gx != 0) {
      BigInt gamma;
      mpz_gcd(gamma.get_mpz_t(), fx.get_mpz_t(), gx.get_mpz_t());
      IntPoly h = primitive_part(interpolate(gamma, x));
      if (!h.is_zero() && h.degree() <= std::min(f.degree(), g.degree())) {
        if (h.degree() == 0) return IntPoly::constant(1);
        if (f.divide_exact(h) && g.divide_exact(h)) return h;
      }
    }
    BigInt root = sqrt(sqrt(x));
    x = x * 73794 * root / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(1);
  IntPoly f = primitive_part(a);
  IntPoly g = primitive_part(b);
  if (f == g) return f;
  if (f.is_one() || g.is_one()) return IntPoly::constant(1);
  // Common powers of q split off first; everything else goes through the
  // evaluation heuristic.
  const std::size_t shift = std::min(f.low_order(), g.low_order());
  if (shift > 0) {
    IntPoly rest = gcd(f.shifted_down(shift), g.shifted_down(shift));
    return rest.shifted_up(shift);
  }
  if (auto h = gcd_heuristic(f, g)) return *h;
  return gcd_prs(f, g);
}

}  // namespace qgen
