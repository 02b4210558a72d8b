#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace qgen {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense univariate polynomial with integer coefficients. Coefficient i
/// multiplies q^i. Trailing zeros are never stored, so the zero polynomial
/// has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t low_order() const;

  IntPoly operator-() const;
  IntPoly scaled(const BigInt& s) const;
  IntPoly shifted_up(std::size_t k) const;    // times q^k
  IntPoly shifted_down(std::size_t k) const;  // divided by q^k, requires low_order() >= k
  IntPoly reversed() const;                   // q^deg * p(1/q)
  IntPoly pow(unsigned long e) const;

  /// Positive gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  BigInt max_norm() const;

  /// Exact quotient over Z, or nullopt if d does not divide *this.
  std::optional<IntPoly> divide_exact(const IntPoly& d) const;
  /// Pseudo-remainder: lc(d)^k * (*this) mod d for the minimal suitable k.
  IntPoly pseudo_remainder(const IntPoly& d) const;

  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Content removed and sign fixed so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);

/// Greatest common divisor, primitive with positive leading coefficient.
/// gcd(0, 0) is 0. Uses the heuristic evaluation gcd and falls back to
/// the primitive remainder sequence.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive polynomial remainder sequence gcd; slow but unconditional.
IntPoly gcd_prs(const IntPoly& a, const IntPoly& b);

}  // namespace qgen
