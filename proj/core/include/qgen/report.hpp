#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/identities.hpp"
#include "qgen/padic.hpp"

namespace qgen {

enum class Format { Json, Csv, Text };

/// "json", "csv" or "text"; ParseError otherwise.
Format parse_format(std::string_view name);
std::string_view tool_version();

/// Echoed verbatim into the report envelope; values are preformatted text.
using ConfigEcho = std::map<std::string, std::string>;

/// JSON: {"tool-version", "config-echo", "records": [...], "summary": {...}}.
/// CSV:  theorem,params,status,lhs,rhs. Output depends only on the inputs.
std::string serialize_report(const SweepReport& report, Format format, const ConfigEcho& echo = {});

/// Inverse of the JSON form; summary is recomputed from the records.
SweepReport parse_report_json(std::string_view text);

struct TableRow {
  long n = 0;
  long alpha = 1;
  long h = 1;
  long x = 0;
  /// Canonical rational function, or a rational when evaluated at a point.
  std::string value;
  std::vector<std::string> routes;
  bool routes_agree = true;
};

/// CSV columns: n,alpha,h,x,value,routes,routes_agree.
std::string serialize_table(const std::vector<TableRow>& rows, Format format, const ConfigEcho& echo = {});

std::string serialize_trace(const ConvergenceTrace& trace, Format format, const ConfigEcho& echo = {});

}  // namespace qgen
