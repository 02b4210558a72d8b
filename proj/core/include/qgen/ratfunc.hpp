#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qgen/int_poly.hpp"
#include "qgen/laurent.hpp"

namespace qgen {

/// Exactly reduced rational function in q with rational coefficients.
///
/// Stored as  scale * q^shift * num(q) / den(q)  where num and den are
/// coprime primitive integer polynomials with nonzero constant terms and
/// positive leading coefficients. Every value has exactly one such
/// representation, so == is equality of rational functions. Zero is
/// scale 0, shift 0, num = den = 1.
///
/// The public view matches the usual fraction: numerator() is the Laurent
/// polynomial scale * q^shift * num, denominator() is den, which has
/// minimal exponent 0, positive leading coefficient and content 1.
class RatFuncQ {
 public:
  RatFuncQ();
  RatFuncQ(long c);  // NOLINT(google-explicit-constructor)
  RatFuncQ(const BigRational& c);  // NOLINT(google-explicit-constructor)
  explicit RatFuncQ(const LaurentPolyQ& p);
  /// Throws ArithmeticError when den is zero.
  RatFuncQ(const LaurentPolyQ& num, const LaurentPolyQ& den);

  static RatFuncQ q();
  static RatFuncQ monomial(const BigRational& c, long exponent);

  bool is_zero() const { return scale_ == 0; }
  bool is_polynomial() const { return den_.is_one(); }

  LaurentPolyQ numerator() const;
  LaurentPolyQ denominator() const;

  const BigRational& scale() const { return scale_; }
  long shift() const { return shift_; }
  const IntPoly& num_poly() const { return num_; }
  const IntPoly& den_poly() const { return den_; }

  RatFuncQ operator-() const;
  RatFuncQ& operator+=(const RatFuncQ& rhs);
  RatFuncQ& operator-=(const RatFuncQ& rhs);
  RatFuncQ& operator*=(const RatFuncQ& rhs);
  RatFuncQ& operator/=(const RatFuncQ& rhs);
  friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
  friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
  friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
  friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) { return a /= b; }
  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b);

  /// Multiplicative inverse; ArithmeticError on zero.
  RatFuncQ inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  RatFuncQ pow(long e) const;
  /// f(1/q), re-canonicalised.
  RatFuncQ subst_q_inverse() const;
  /// Exact value at q = q0. PoleError if the denominator vanishes there or
  /// q0 = 0 meets a negative power of q.
  BigRational eval_at(const BigRational& q0) const;

  /// "(numerator terms) / (denominator terms)", terms as c*q^e ascending.
  std::string to_string() const;
  static RatFuncQ parse(std::string_view text);

 private:
  static RatFuncQ assemble(BigRational scale, long shift, IntPoly num, IntPoly den, bool coprime);

  BigRational scale_;
  long shift_ = 0;
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFuncQ& f);

}  // namespace qgen
