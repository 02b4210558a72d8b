#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgen/ratfunc.hpp"

namespace qgen {

using ParamValue = std::variant<long, std::vector<long>>;
using ParamMap = std::map<std::string, ParamValue>;

enum class Status { Pass, Fail, Error };

/// Which form of an identity was checked. Corrected forms are only ever
/// registered next to a failing as-stated check, never in place of it.
enum class Variant { AsStated, Corrected };

/// One checked instance of an identity. `boundary` marks probes outside the
/// domain the identity claims; they are recorded but never gate anything.
struct VerificationRecord {
  std::string theorem;
  ParamMap params;
  RatFuncQ lhs;
  RatFuncQ rhs;
  Status status = Status::Error;
  Variant variant = Variant::AsStated;
  bool boundary = false;
  std::string note;

  bool passed() const { return status == Status::Pass; }
  /// FAIL or ERROR inside the asserted domain.
  bool is_regression() const { return !boundary && status != Status::Pass; }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// Builds a record whose status is PASS iff lhs == rhs.
VerificationRecord make_record(std::string theorem, ParamMap params, RatFuncQ lhs, RatFuncQ rhs,
                               bool boundary = false, Variant variant = Variant::AsStated);

/// "PASS", "FAIL", "ERROR", or "BOUNDARY-PASS"/"BOUNDARY-FAIL" for probes.
std::string status_label(const VerificationRecord& r);
std::string_view to_string(Status s);
std::string_view to_string(Variant v);
Status parse_status(std::string_view label, bool& boundary);
Variant parse_variant(std::string_view text);

/// "alpha=1;h=2;n=3", lists as "n_list=[2 1 1]". Keys in map order.
std::string format_params(const ParamMap& params);

}  // namespace qgen
