#include "qgen/ratfunc.hpp"

#include <ostream>
#include <utility>

#include "qgen/errors.hpp"

namespace qgen {

namespace {

const IntPoly& one_poly() {
  static const IntPoly one = IntPoly::constant(1);
  return one;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("RatFuncQ: inexact polynomial division");
  return std::move(*q);
}

// Pulls content and sign out of p into the returned factor.
BigInt take_content(IntPoly& p) {
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  if (c != 1) p = primitive_part(p);
  return c;
}

}  // namespace

RatFuncQ::RatFuncQ() : scale_(0), num_(one_poly()), den_(one_poly()) {}

RatFuncQ::RatFuncQ(long c) : RatFuncQ(BigRational(c)) {}

RatFuncQ::RatFuncQ(const BigRational& c) : scale_(c), num_(one_poly()), den_(one_poly()) { scale_.canonicalize(); }

RatFuncQ::RatFuncQ(const LaurentPolyQ& p) : RatFuncQ() {
  if (p.is_zero()) return;
  auto s = split(p);
  *this = assemble(std::move(s.scale), s.shift, std::move(s.poly), one_poly(), true);
}

RatFuncQ::RatFuncQ(const LaurentPolyQ& num, const LaurentPolyQ& den) : RatFuncQ() {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) return;
  auto n = split(num);
  auto d = split(den);
  *this = assemble(n.scale / d.scale, n.shift - d.shift, std::move(n.poly), std::move(d.poly), false);
}

RatFuncQ RatFuncQ::q() { return monomial(1, 1); }

RatFuncQ RatFuncQ::monomial(const BigRational& c, long exponent) {
  RatFuncQ r(c);
  if (c != 0) r.shift_ = exponent;
  return r;
}

RatFuncQ RatFuncQ::assemble(BigRational scale, long shift, IntPoly num, IntPoly den, bool coprime) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  RatFuncQ r;
  scale.canonicalize();
  if (scale == 0 || num.is_zero()) return r;
  if (std::size_t k = num.low_order(); k > 0) {
    num = num.shifted_down(k);
    shift += static_cast<long>(k);
  }
  if (std::size_t k = den.low_order(); k > 0) {
    den = den.shifted_down(k);
    shift -= static_cast<long>(k);
  }
  if (!coprime && !den.is_one()) {
    IntPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  scale *= BigRational(take_content(num));
  scale /= BigRational(take_content(den));
  r.scale_ = std::move(scale);
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

LaurentPolyQ RatFuncQ::numerator() const {
  LaurentPolyQ p;
  if (is_zero()) return p;
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) p.add_term(shift_ + static_cast<long>(i), scale_ * BigRational(num_[i]));
  return p;
}

LaurentPolyQ RatFuncQ::denominator() const {
  LaurentPolyQ p;
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i] != 0) p.add_term(static_cast<long>(i), BigRational(den_[i]));
  return p;
}

bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
  return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;

  const long base = std::min(shift_, rhs.shift_);
  const auto lift_a = static_cast<std::size_t>(shift_ - base);
  const auto lift_b = static_cast<std::size_t>(rhs.shift_ - base);

  BigInt common_den;
  mpz_lcm(common_den.get_mpz_t(), scale_.get_den().get_mpz_t(), rhs.scale_.get_den().get_mpz_t());
  const BigInt ia = scale_.get_num() * (common_den / scale_.get_den());
  const BigInt ib = rhs.scale_.get_num() * (common_den / rhs.scale_.get_den());

  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g)); any
  // remaining common factor divides g.
  IntPoly g = (den_.is_one() || rhs.den_.is_one()) ? one_poly() : gcd(den_, rhs.den_);
  IntPoly da = exact_quotient(den_, g);
  IntPoly db = exact_quotient(rhs.den_, g);

  IntPoly sum = num_.shifted_up(lift_a).scaled(ia) * db + rhs.num_.shifted_up(lift_b).scaled(ib) * da;
  if (sum.is_zero()) return *this = RatFuncQ();
  IntPoly den = den_ * db;
  if (!g.is_one()) {
    IntPoly h = gcd(sum, g);
    if (!h.is_one()) {
      sum = exact_quotient(sum, h);
      den = exact_quotient(den, h);
    }
  }
  BigRational scale(1, common_den);
  scale.canonicalize();
  return *this = assemble(std::move(scale), base, std::move(sum), std::move(den), true);
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& rhs) { return *this += -rhs; }

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RatFuncQ();
  IntPoly g1 = rhs.den_.is_one() ? one_poly() : gcd(num_, rhs.den_);
  IntPoly g2 = den_.is_one() ? one_poly() : gcd(rhs.num_, den_);
  IntPoly num = exact_quotient(num_, g1) * exact_quotient(rhs.num_, g2);
  IntPoly den = exact_quotient(den_, g2) * exact_quotient(rhs.den_, g1);
  scale_ *= rhs.scale_;
  shift_ += rhs.shift_;
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& rhs) { return *this *= rhs.inverse(); }

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw ArithmeticError("division by the zero rational function");
  RatFuncQ r;
  r.scale_ = BigRational(1) / scale_;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

RatFuncQ RatFuncQ::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RatFuncQ(1);
  if (is_zero()) return *this;
  RatFuncQ r;
  r.scale_ = qgen::pow(scale_, e);
  r.shift_ = shift_ * e;
  r.num_ = num_.pow(static_cast<unsigned long>(e));
  r.den_ = den_.pow(static_cast<unsigned long>(e));
  return r;
}

RatFuncQ RatFuncQ::subst_q_inverse() const {
  if (is_zero()) return *this;
  // num(1/q) = q^-deg(num) * rev(num), likewise for den.
  const long shift = -shift_ - num_.degree() + den_.degree();
  return assemble(scale_, shift, num_.reversed(), den_.reversed(), true);
}

BigRational RatFuncQ::eval_at(const BigRational& q0) const {
  if (q0 == 0) {
    if (is_zero()) return 0;
    if (shift_ < 0) throw PoleError("negative power of q evaluated at q = 0");
    if (shift_ > 0) return 0;
    return scale_ * BigRational(num_[0]) / BigRational(den_[0]);
  }
  BigRational d = den_.evaluate(q0);
  if (d == 0) throw PoleError("denominator vanishes at q = " + qgen::to_string(q0));
  if (is_zero()) return 0;
  return scale_ * qgen::pow(q0, shift_) * num_.evaluate(q0) / d;
}

std::string RatFuncQ::to_string() const {
  return "(" + numerator().to_string() + ") / (" + denominator().to_string() + ")";
}

RatFuncQ RatFuncQ::parse(std::string_view text) {
  constexpr std::string_view kSep = ") / (";
  auto sep = text.find(kSep);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')' || sep == std::string_view::npos)
    throw ParseError("malformed rational function: '" + std::string(text) + "'");
  auto num = LaurentPolyQ::parse(text.substr(1, sep - 1));
  auto den = LaurentPolyQ::parse(text.substr(sep + kSep.size(), text.size() - sep - kSep.size() - 1));
  if (den.is_zero()) throw ParseError("rational function with zero denominator: '" + std::string(text) + "'");
  return RatFuncQ(num, den);
}

std::ostream& operator<<(std::ostream& os, const RatFuncQ& f) { return os << f.to_string(); }

}  // namespace qgen
