#include "qgen/report.hpp"

#include <sstream>

#include <json.hpp>

#include "qgen/errors.hpp"

#ifndef QGEN_VERSION
#define QGEN_VERSION "0.0.0"
#endif

namespace qgen {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

json params_to_json(const ParamMap& params) {
  json j = json::object();
  for (const auto& [key, value] : params) {
    if (const long* v = std::get_if<long>(&value))
      j[key] = *v;
    else
      j[key] = std::get<std::vector<long>>(value);
  }
  return j;
}

ParamMap params_from_json(const json& j) {
  ParamMap params;
  for (const auto& [key, value] : j.items()) {
    if (value.is_number_integer())
      params[key] = value.get<long>();
    else if (value.is_array())
      params[key] = value.get<std::vector<long>>();
    else
      throw ParseError("parameter '" + key + "' is neither an integer nor a list");
  }
  return params;
}

json summary_to_json(const TheoremSummary& s) {
  return json{{"pass", s.pass},
              {"fail", s.fail},
              {"boundary-pass", s.boundary_pass},
              {"boundary-fail", s.boundary_fail},
              {"error", s.error},
              {"boundaries", s.boundaries}};
}

json envelope(const ConfigEcho& echo) {
  json j = json::object();
  j["tool-version"] = tool_version();
  j["config-echo"] = echo;
  return j;
}

std::string trace_valuation(const TraceEntry& e) {
  if (!e.valuation) return "inf";
  return (e.lower_bound ? ">=" : "") + std::to_string(*e.valuation);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw ParseError("unknown output format '" + std::string(name) + "'");
}

std::string_view tool_version() { return QGEN_VERSION; }

std::string serialize_report(const SweepReport& report, Format format, const ConfigEcho& echo) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json j = envelope(echo);
      j["records"] = json::array();
      for (const auto& r : report.records) {
        json rec{{"theorem", r.theorem},
                 {"params", params_to_json(r.params)},
                 {"lhs", r.lhs.to_string()},
                 {"rhs", r.rhs.to_string()},
                 {"status", status_label(r)},
                 {"variant", to_string(r.variant)}};
        if (!r.note.empty()) rec["note"] = r.note;
        j["records"].push_back(std::move(rec));
      }
      j["summary"] = json::object();
      for (const auto& [theorem, s] : report.summary) j["summary"][theorem] = summary_to_json(s);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "theorem,params,status,lhs,rhs\n";
      for (const auto& r : report.records) {
        out << csv_field(r.theorem) << ',' << csv_field(format_params(r.params)) << ',' << status_label(r) << ','
            << csv_field(r.lhs.to_string()) << ',' << csv_field(r.rhs.to_string()) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : report.records) {
        out << status_label(r) << ' ' << r.theorem << ' ' << format_params(r.params);
        if (!r.note.empty()) out << "  (" << r.note << ')';
        out << '\n';
      }
      for (const auto& [theorem, s] : report.summary) {
        out << "# " << theorem << ": pass=" << s.pass << " fail=" << s.fail << " boundary-pass=" << s.boundary_pass
            << " boundary-fail=" << s.boundary_fail << " error=" << s.error << '\n';
        for (const auto& b : s.boundaries) out << "#   boundary " << b << '\n';
      }
      break;
  }
  return out.str();
}

SweepReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("records") || !j["records"].is_array())
    throw ParseError("report has no records array");
  std::vector<VerificationRecord> records;
  try {
    for (const auto& rec : j["records"]) {
      VerificationRecord r;
      r.theorem = rec.at("theorem").get<std::string>();
      r.params = params_from_json(rec.at("params"));
      r.lhs = RatFuncQ::parse(rec.at("lhs").get<std::string>());
      r.rhs = RatFuncQ::parse(rec.at("rhs").get<std::string>());
      r.status = parse_status(rec.at("status").get<std::string>(), r.boundary);
      r.variant = parse_variant(rec.at("variant").get<std::string>());
      if (rec.contains("note")) r.note = rec["note"].get<std::string>();
      records.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report record: ") + e.what());
  }
  return summarize(std::move(records));
}

std::string serialize_table(const std::vector<TableRow>& rows, Format format, const ConfigEcho& echo) {
  std::ostringstream out;
  auto joined_routes = [](const TableRow& r) {
    std::string s;
    for (const auto& route : r.routes) {
      if (!s.empty()) s += '|';
      s += route;
    }
    return s;
  };
  switch (format) {
    case Format::Json: {
      json j = envelope(echo);
      j["rows"] = json::array();
      for (const auto& r : rows) {
        j["rows"].push_back(json{{"n", r.n},
                                 {"alpha", r.alpha},
                                 {"h", r.h},
                                 {"x", r.x},
                                 {"value", r.value},
                                 {"routes", r.routes},
                                 {"routes-agree", r.routes_agree}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,alpha,h,x,value,routes,routes_agree\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.alpha << ',' << r.h << ',' << r.x << ',' << csv_field(r.value) << ','
            << csv_field(joined_routes(r)) << ',' << (r.routes_agree ? "true" : "false") << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : rows) {
        out << "G[n=" << r.n << ", alpha=" << r.alpha << ", h=" << r.h << "](" << r.x << ") = " << r.value;
        out << "   [" << joined_routes(r) << (r.routes_agree ? ", agree]" : ", DISAGREE]") << '\n';
      }
      break;
  }
  return out.str();
}

std::string serialize_trace(const ConvergenceTrace& trace, Format format, const ConfigEcho& echo) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json j = envelope(echo);
      json entries = json::array();
      for (const auto& e : trace.entries) {
        entries.push_back(json{{"N", e.N},
                               {"value", to_string(e.value)},
                               {"valuation", trace_valuation(e)},
                               {"path", e.exact_path ? "exact" : "modular"}});
      }
      j["integral"] = json{{"p", trace.p},
                           {"q", to_string(trace.q)},
                           {"limit", to_string(trace.limit)},
                           {"limit-symbolic", trace.limit_symbolic.to_string()},
                           {"entries", std::move(entries)},
                           {"nondecreasing", trace.nondecreasing},
                           {"constant", trace.constant}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "N,value,valuation,path,limit\n";
      for (const auto& e : trace.entries) {
        out << e.N << ',' << csv_field(to_string(e.value)) << ',' << trace_valuation(e) << ','
            << (e.exact_path ? "exact" : "modular") << ',' << csv_field(to_string(trace.limit)) << '\n';
      }
      break;
    case Format::Text:
      out << "limit L = " << to_string(trace.limit) << "  (" << trace.limit_symbolic.to_string() << ")\n";
      for (const auto& e : trace.entries) {
        out << "N=" << e.N << "  S_N=" << to_string(e.value) << "  v_" << trace.p << "(S_N - L)=" << trace_valuation(e)
            << "  [" << (e.exact_path ? "exact" : "modular") << "]\n";
      }
      out << "nondecreasing=" << (trace.nondecreasing ? "yes" : "no") << "  constant C=" << trace.constant << '\n';
      break;
  }
  return out.str();
}

}  // namespace qgen
