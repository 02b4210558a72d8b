#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qgen/int_poly.hpp"

namespace qgen {

/// Parses "a", "-a" or "a/b" into a canonical rational. Rejects b = 0.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& r);

/// Exact rational power; negative exponents require r != 0.
BigRational pow(const BigRational& r, long e);

/// Finite Laurent polynomial in q with rational coefficients. Zero
/// coefficients are never stored.
class LaurentPolyQ {
 public:
  using Terms = std::map<long, BigRational>;

  LaurentPolyQ() = default;
  explicit LaurentPolyQ(const BigRational& c);
  explicit LaurentPolyQ(Terms terms);

  static LaurentPolyQ monomial(const BigRational& c, long exponent);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  BigRational coeff(long exponent) const;
  long min_exponent() const;  // requires !is_zero()
  long max_exponent() const;  // requires !is_zero()

  void add_term(long exponent, const BigRational& c);

  LaurentPolyQ operator-() const;
  LaurentPolyQ& operator+=(const LaurentPolyQ& rhs);
  LaurentPolyQ& operator-=(const LaurentPolyQ& rhs);
  friend LaurentPolyQ operator+(LaurentPolyQ a, const LaurentPolyQ& b) { return a += b; }
  friend LaurentPolyQ operator-(LaurentPolyQ a, const LaurentPolyQ& b) { return a -= b; }
  friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b);
  friend bool operator==(const LaurentPolyQ& a, const LaurentPolyQ& b) { return a.terms_ == b.terms_; }

  BigRational eval_at(const BigRational& q0) const;

  /// "c*q^e + c*q^e + ..." in ascending exponent order; "0" when empty.
  std::string to_string() const;
  static LaurentPolyQ parse(std::string_view text);

 private:
  Terms terms_;
};

/// Splits p = scale * q^shift * poly where poly is a primitive integer
/// polynomial with nonzero constant term and positive leading coefficient.
/// p must be nonzero.
struct LaurentSplit {
  BigRational scale;
  long shift = 0;
  IntPoly poly;
};
LaurentSplit split(const LaurentPolyQ& p);

}  // namespace qgen
