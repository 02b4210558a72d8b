#pragma once

#include <stdexcept>
#include <string>

namespace qgen {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A q-bracket was requested with base q^0.
class InvalidScaleError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero rational function (or a zero base raised to a
/// negative power).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point where the denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// p-adic valuation of zero was requested.
class ValuationUndefinedError : public Error {
 public:
  using Error::Error;
};

/// The modular route of a truncated integral cannot represent the result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Bernstein index with k > n, or a similar out-of-range index.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside an operation's admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Wrong number of samples handed to the Bernstein operator.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, rational functions, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgen
