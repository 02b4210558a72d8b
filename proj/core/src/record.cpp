#include "qgen/record.hpp"

#include "qgen/errors.hpp"

namespace qgen {

VerificationRecord make_record(std::string theorem, ParamMap params, RatFuncQ lhs, RatFuncQ rhs,
                               bool boundary, Variant variant) {
  VerificationRecord r;
  r.theorem = std::move(theorem);
  r.params = std::move(params);
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.variant = variant;
  r.boundary = boundary;
  return r;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

std::string_view to_string(Variant v) { return v == Variant::AsStated ? "as-stated" : "corrected"; }

std::string status_label(const VerificationRecord& r) {
  std::string label(to_string(r.status));
  if (r.boundary) label = "BOUNDARY-" + label;
  return label;
}

Status parse_status(std::string_view label, bool& boundary) {
  boundary = false;
  constexpr std::string_view kPrefix = "BOUNDARY-";
  if (label.substr(0, kPrefix.size()) == kPrefix) {
    boundary = true;
    label.remove_prefix(kPrefix.size());
  }
  if (label == "PASS") return Status::Pass;
  if (label == "FAIL") return Status::Fail;
  if (label == "ERROR") return Status::Error;
  throw ParseError("unknown status '" + std::string(label) + "'");
}

Variant parse_variant(std::string_view text) {
  if (text == "as-stated") return Variant::AsStated;
  if (text == "corrected") return Variant::Corrected;
  throw ParseError("unknown variant '" + std::string(text) + "'");
}

std::string format_params(const ParamMap& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    if (const long* v = std::get_if<long>(&value)) {
      out += std::to_string(*v);
    } else {
      out += '[';
      bool first = true;
      for (long x : std::get<std::vector<long>>(value)) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(x);
      }
      out += ']';
    }
  }
  return out;
}

}  // namespace qgen
