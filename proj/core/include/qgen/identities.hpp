#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/genocchi.hpp"
#include "qgen/padic.hpp"
#include "qgen/record.hpp"

namespace qgen {

// Identity names as they appear in reports and on the command line.
inline constexpr std::string_view kReflectionId = "genocchi-reflection";
inline constexpr std::string_view kShiftTwoId = "genocchi-shift-two";
inline constexpr std::string_view kIntegralShiftId = "integral-shift";
inline constexpr std::string_view kIntegralReflectionId = "integral-reflection";
inline constexpr std::string_view kBernsteinSingleId = "bernstein-single";
inline constexpr std::string_view kBernsteinDoubleId = "bernstein-double";
inline constexpr std::string_view kBernsteinMultiId = "bernstein-multi";

/// Every identity the sweep knows, in report order.
const std::vector<std::string>& identity_names();

/// How [1 - xi]_{q^-alpha}^n is turned into q-exponentials.
enum class BracketExpansion {
  Direct,          // (1 - q^-alpha q^{alpha xi})^n / (1 - q^-alpha)^n
  ViaReflection,   // (-1)^n q^{n alpha} [xi - 1]_{q^alpha}^n
};

/// q^{(h-1) xi} [1 - xi]_{q^-alpha}^n as an integrand.
IntegrandSpec reflected_bracket_integrand(long n, WeightParams w, BracketExpansion how);

/// G_{n+1}(1-x) at 1/q  vs  (-1)^n q^{h + alpha n - 1} G_{n+1}(x).
VerificationRecord verify_symmetry(long n, WeightParams w, long x);

/// G_n(2)  vs  n q^{-h} [2]_q + q^{-2h} G_n. Claimed for n >= 2; smaller n
/// are recorded as boundary probes.
VerificationRecord verify_shift2(long n, WeightParams w);
VerificationRecord verify_shift2(long n, const GenocchiFamily& family);

/// q^{h-1} integral q^{(h-1) xi} [1 - xi]_{q^-alpha}^n  vs  G_{n+1}(2)/(n+1) at 1/q.
VerificationRecord verify_integral_shift(long n, WeightParams w);

/// integral q^{(h-1) xi} [1 - xi]_{q^-alpha}^n  vs  [2]_q + q^{h+1} G_{n+1}(1/q)/(n+1).
/// Claimed for n >= 1; n = 0 is a boundary probe.
VerificationRecord verify_integral_reflect(long n, WeightParams w);
VerificationRecord verify_integral_reflect(long n, const GenocchiFamily& family);

/// Bernstein-moment identity for one B_{k,n}. DomainError unless n > k >= 0.
VerificationRecord verify_bernstein_single(long n, long k, WeightParams w);
VerificationRecord verify_bernstein_single(long n, long k, const GenocchiFamily& family);

/// Same for B_{k,n1} B_{k,n2}. DomainError unless n1 + n2 > 2k, all >= 0.
VerificationRecord verify_bernstein_double(long n1, long n2, long k, WeightParams w);
VerificationRecord verify_bernstein_double(long n1, long n2, long k, const GenocchiFamily& family);

/// Same for prod_i B_{k,n_i}, s = n_list.size() >= 2. DomainError unless
/// sum n_i > s k.
VerificationRecord verify_bernstein_multi(std::span<const long> n_list, long k, WeightParams w);
VerificationRecord verify_bernstein_multi(std::span<const long> n_list, long k, const GenocchiFamily& family);

struct Range {
  long min = 0;
  long max = -1;
  bool empty() const { return max < min; }
};

/// Parameter grid of a sweep. Single-index identities use `n`; the double
/// identity draws n1, n2 from `pair_n`; the multi identity draws every n_i
/// from `multi_n` with s in `s`.
struct SweepConfig {
  std::vector<std::string> theorems;  // empty means all
  Range n{0, 8};
  Range k{0, 8};
  Range alpha{1, 3};
  Range h{1, 3};
  Range x{-2, 3};
  Range pair_n{0, 4};
  Range multi_n{0, 3};
  Range s{2, 3};
  unsigned workers = 1;
};

struct TheoremSummary {
  long pass = 0;
  long fail = 0;
  long boundary_pass = 0;
  long boundary_fail = 0;
  long error = 0;
  /// Places along the leading index where the outcome flips.
  std::vector<std::string> boundaries;

  friend bool operator==(const TheoremSummary&, const TheoremSummary&) = default;
};

struct SweepReport {
  std::vector<VerificationRecord> records;
  std::map<std::string, TheoremSummary> summary;

  /// True iff some record inside its asserted domain did not pass.
  bool has_regression() const;
};

/// Recomputes counts and boundaries from the records.
SweepReport summarize(std::vector<VerificationRecord> records);

/// Runs every selected verifier over its admissible grid. Work may fan out
/// over config.workers threads; record order is fixed by the grid alone.
/// Exceptions inside a verifier become ERROR records.
SweepReport sweep(const SweepConfig& config);

}  // namespace qgen
