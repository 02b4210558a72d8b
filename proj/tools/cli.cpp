#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qgen/bernstein.hpp"
#include "qgen/errors.hpp"
#include "qgen/genocchi.hpp"
#include "qgen/identities.hpp"
#include "qgen/laurent.hpp"
#include "qgen/padic.hpp"
#include "qgen/report.hpp"

namespace qgen::cli {

namespace {

struct OutputOptions {
  std::string format = "text";
  std::string path;
};

void add_output_options(CLI::App& cmd, OutputOptions& o) {
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd.add_option("--output,-o", o.path, "Write the report to this file instead of standard output");
}

struct TableOptions {
  OutputOptions output;
  long n_max = 4;
  long alpha = 1;
  long h = 1;
  std::vector<long> xs{0};
  std::string at_q;
};

struct VerifyOptions {
  OutputOptions output;
  std::string theorem;
  SweepConfig config;
};

struct IntegralOptions {
  OutputOptions output;
  long p = 3;
  std::string q = "4/1";
  std::optional<long> m;
  std::optional<long> n;
  long alpha = 1;
  long h = 1;
  long x = 0;
  std::vector<long> levels{1, 2, 3};
  std::optional<long> M;
};

struct BernsteinOptions {
  OutputOptions output;
  long n_max = 5;
  long alpha_max = 3;
  long x_min = -1;
  long x_max = 3;
};

std::string join(const std::vector<long>& v) {
  std::string s;
  for (long x : v) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

std::string range_text(const Range& r) { return std::to_string(r.min) + ".." + std::to_string(r.max); }

unsigned worker_count() {
  const char* env = std::getenv("QGEN_WORKERS");
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw DomainError(std::string("QGEN_WORKERS must be a positive integer, got '") + env + "'");
  return static_cast<unsigned>(v);
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + o.path + "' for writing");
  file << text;
  if (!file.flush()) throw std::ios_base::failure("write to '" + o.path + "' failed");
}

int run_table(const TableOptions& o, std::ostream& out) {
  const WeightParams w = WeightParams::make(o.alpha, o.h);
  if (o.n_max < 0) throw DomainError("--n-max must be nonnegative");
  std::optional<BigRational> q;
  if (!o.at_q.empty()) q = parse_rational(o.at_q);

  const GenocchiTable table = build_genocchi_table(o.n_max, w, o.xs);
  std::vector<TableRow> rows;
  for (const auto& [key, entry] : table.entries()) {
    TableRow row{key.n, key.alpha, key.h, key.x, {}, {}, entry.consistent};
    row.value = q ? to_string(entry.value.eval_at(*q)) : entry.value.to_string();
    for (Route r : entry.routes) row.routes.emplace_back(to_string(r));
    rows.push_back(std::move(row));
  }
  ConfigEcho echo{{"subcommand", "table"},
                  {"n-max", std::to_string(o.n_max)},
                  {"alpha", std::to_string(o.alpha)},
                  {"h", std::to_string(o.h)},
                  {"x", join(o.xs)},
                  {"at-q", q ? to_string(*q) : "symbolic"}};
  emit(o.output, serialize_table(rows, parse_format(o.output.format), echo), out);
  return table.consistent() ? kPass : kFail;
}

int run_verify(VerifyOptions o, std::ostream& out) {
  if (o.theorem != "all") {
    const auto& names = identity_names();
    if (std::find(names.begin(), names.end(), o.theorem) == names.end())
      throw ParseError("unknown identity '" + o.theorem + "'");
    o.config.theorems = {o.theorem};
  }
  o.config.workers = worker_count();
  const SweepReport report = sweep(o.config);
  const SweepConfig& c = o.config;
  // Worker count is left out so reports do not depend on the machine.
  ConfigEcho echo{{"subcommand", "verify"}, {"theorem", o.theorem},     {"n", range_text(c.n)},
                  {"k", range_text(c.k)},   {"alpha", range_text(c.alpha)}, {"h", range_text(c.h)},
                  {"x", range_text(c.x)},   {"pair-n", range_text(c.pair_n)}, {"multi-n", range_text(c.multi_n)},
                  {"s", range_text(c.s)}};
  emit(o.output, serialize_report(report, parse_format(o.output.format), echo), out);
  return report.has_regression() ? kFail : kPass;
}

int run_integral(const IntegralOptions& o, std::ostream& out) {
  if (o.m && o.n) throw DomainError("--m and --n select different integrands; give one");
  if (o.levels.empty()) throw DomainError("--N needs at least one level");
  const long max_level = *std::max_element(o.levels.begin(), o.levels.end());
  const long precision = o.M.value_or(max_level + kGuardDigits);
  if (precision < max_level) throw DomainError("--M must be at least the largest truncation level");
  const BigRational q = parse_rational(o.q);
  // Validates p and q before any summation starts.
  (void)PadicContext::make(o.p, max_level, precision, q);
  const long guard = precision - max_level;

  ConfigEcho echo{{"subcommand", "integral"}, {"p", std::to_string(o.p)}, {"q", to_string(q)},
                  {"N", join(o.levels)},      {"M", std::to_string(precision)}};
  ConvergenceTrace trace;
  bool limit_ok = true;
  if (o.n) {
    const WeightParams w = WeightParams::make(o.alpha, o.h);
    if (*o.n < 1) throw DomainError("--n must be >= 1");
    echo["integrand"] = "genocchi";
    echo["n"] = std::to_string(*o.n);
    echo["alpha"] = std::to_string(o.alpha);
    echo["h"] = std::to_string(o.h);
    echo["x"] = std::to_string(o.x);
    IntegralRoute route = weighted_genocchi_integral_route(*o.n, w, o.x, o.p, q, o.levels);
    // Re-run at the requested precision when it differs from the default.
    if (guard != kGuardDigits) route.trace = convergence_probe(genocchi_integrand(*o.n, w, o.x), o.p, q, o.levels, guard);
    trace = std::move(route.trace);
    limit_ok = route.limit_agrees;
  } else {
    const long m = o.m.value_or(0);
    echo["integrand"] = "monomial";
    echo["m"] = std::to_string(m);
    trace = convergence_probe(IntegrandSpec::monomial(m), o.p, q, o.levels, guard);
  }
  emit(o.output, serialize_trace(trace, parse_format(o.output.format), echo), out);

  bool ok = limit_ok;
  for (const auto& e : trace.entries)
    if (e.valuation && *e.valuation < e.N) ok = false;
  return ok ? kPass : kFail;
}

int run_bernstein(const BernsteinOptions& o, std::ostream& out) {
  if (o.n_max < 0) throw DomainError("--n-max must be nonnegative");
  if (o.alpha_max < 1) throw DomainError("--alpha-max must be >= 1");
  std::vector<VerificationRecord> records;
  for (long alpha = 1; alpha <= o.alpha_max; ++alpha) {
    for (long n = 0; n <= o.n_max; ++n) {
      for (long x = o.x_min; x <= o.x_max; ++x) {
        for (long k = 0; k <= n; ++k) records.push_back(bernstein_symmetry_check(BernsteinIndex{k, n, alpha}, x));
        records.push_back(bernstein_completeness_check(n, alpha, x));
      }
    }
  }
  const SweepReport report = summarize(std::move(records));
  ConfigEcho echo{{"subcommand", "bernstein"},
                  {"n-max", std::to_string(o.n_max)},
                  {"alpha-max", std::to_string(o.alpha_max)},
                  {"x", std::to_string(o.x_min) + ".." + std::to_string(o.x_max)}};
  emit(o.output, serialize_report(report, parse_format(o.output.format), echo), out);
  return report.has_regression() ? kFail : kPass;
}

void add_range(CLI::App& cmd, const std::string& name, Range& r, bool with_min = true) {
  if (with_min) cmd.add_option("--" + name + "-min", r.min)->capture_default_str();
  cmd.add_option("--" + name + "-max", r.max)->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted (h,q)-Genocchi tables, identity verification and p-adic convergence probes", "qgen"};
  // -h is left free: --h is the exponent shift.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  TableOptions table;
  CLI::App* table_cmd = app.add_subcommand("table", "Genocchi numbers and polynomials by every route");
  add_output_options(*table_cmd, table.output);
  table_cmd->add_option("--n-max", table.n_max)->capture_default_str();
  table_cmd->add_option("--alpha", table.alpha)->capture_default_str();
  table_cmd->add_option("--h", table.h)->capture_default_str();
  table_cmd->add_option("--x", table.xs, "Evaluation points")->delimiter(',')->capture_default_str();
  table_cmd->add_option("--at-q", table.at_q, "Evaluate at this rational q (\"a/b\")");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Sweep identities over a parameter grid");
  add_output_options(*verify_cmd, verify.output);
  verify_cmd->add_option("theorem", verify.theorem, "Identity name or 'all'")->required();
  add_range(*verify_cmd, "n", verify.config.n);
  add_range(*verify_cmd, "k", verify.config.k);
  add_range(*verify_cmd, "alpha", verify.config.alpha);
  add_range(*verify_cmd, "h", verify.config.h);
  add_range(*verify_cmd, "x", verify.config.x);
  add_range(*verify_cmd, "pair-n", verify.config.pair_n);
  add_range(*verify_cmd, "multi-n", verify.config.multi_n);
  add_range(*verify_cmd, "s", verify.config.s);

  IntegralOptions integral;
  CLI::App* integral_cmd = app.add_subcommand("integral", "Truncated fermionic sums and their convergence");
  add_output_options(*integral_cmd, integral.output);
  integral_cmd->add_option("--p", integral.p, "Odd prime")->capture_default_str();
  integral_cmd->add_option("--q", integral.q, "Rational q as \"a/b\"")->capture_default_str();
  integral_cmd->add_option("--m", integral.m, "Integrate q^{m xi}");
  integral_cmd->add_option("--n", integral.n, "Integrate the Genocchi integrand of index n");
  integral_cmd->add_option("--alpha", integral.alpha)->capture_default_str();
  integral_cmd->add_option("--h", integral.h)->capture_default_str();
  integral_cmd->add_option("--x", integral.x)->capture_default_str();
  integral_cmd->add_option("--N", integral.levels, "Truncation levels")->delimiter(',')->capture_default_str();
  integral_cmd->add_option("--M", integral.M, "Working precision p^M for the modular route");

  BernsteinOptions bernstein;
  CLI::App* bernstein_cmd = app.add_subcommand("bernstein", "Bernstein basis values, symmetry and completeness");
  add_output_options(*bernstein_cmd, bernstein.output);
  bernstein_cmd->add_option("--n-max", bernstein.n_max)->capture_default_str();
  bernstein_cmd->add_option("--alpha-max", bernstein.alpha_max)->capture_default_str();
  bernstein_cmd->add_option("--x-min", bernstein.x_min)->capture_default_str();
  bernstein_cmd->add_option("--x-max", bernstein.x_max)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kPass;
    err << app.help();
    return kUsage;
  }

  try {
    if (table_cmd->parsed()) return run_table(table, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (integral_cmd->parsed()) return run_integral(integral, out);
    if (bernstein_cmd->parsed()) return run_bernstein(bernstein, out);
  } catch (const PrecisionError& e) {
    err << "qgen: precision error: " << e.what() << '\n';
    return kPrecision;
  } catch (const std::exception& e) {
    err << "qgen: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qgen::cli
