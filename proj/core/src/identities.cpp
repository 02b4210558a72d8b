#include "qgen/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include "qgen/errors.hpp"
#include "qgen/qcore.hpp"

namespace qgen {

namespace {

RatFuncQ rational(const BigInt& v) { return RatFuncQ(BigRational(v)); }
RatFuncQ rational(long num, long den) {
  BigRational r(num, den);
  r.canonicalize();
  return RatFuncQ(r);
}
RatFuncQ sign(long e) { return RatFuncQ(e % 2 == 0 ? 1L : -1L); }

RatFuncQ one_minus_q_pow(long e) {
  LaurentPolyQ p(BigRational(1));
  p.add_term(e, -1);
  return RatFuncQ(p);
}

// [2]_q + q^{h+1} G_j(1/q) / j
RatFuncQ reflected_term(long j, const GenocchiFamily& family) {
  const WeightParams w = family.weights();
  return two_q() + RatFuncQ::monomial(1, w.h + 1) * family.number_q_inverse(j) * rational(1, j);
}

// sum_{l=0}^{total-K} C(total-K, l) (-1)^l G_{l+K+1} / (l+K+1)
RatFuncQ bernstein_moment_side(long total, long K, const GenocchiFamily& family) {
  RatFuncQ sum;
  for (long l = 0; l <= total - K; ++l) {
    const long j = l + K + 1;
    sum += sign(l) * rational(binomial(total - K, l)) * family.number(j) * rational(1, j);
  }
  return sum;
}

// K = 0:  [2]_q + q^{h+1} G_{total+1}(1/q) / (total+1)
// K != 0: sum_{l=0}^{K} C(K,l) (-1)^{K+l} { [2]_q + q^{h+1} G_{total-l+1}(1/q) / (total-l+1) }
RatFuncQ bernstein_reflected_side(long total, long K, const GenocchiFamily& family) {
  if (K == 0) return reflected_term(total + 1, family);
  RatFuncQ sum;
  for (long l = 0; l <= K; ++l) sum += sign(K + l) * rational(binomial(K, l)) * reflected_term(total - l + 1, family);
  return sum;
}

ParamMap weight_params(WeightParams w) { return {{"alpha", w.alpha}, {"h", w.h}}; }

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      std::string(kReflectionId),         std::string(kShiftTwoId),         std::string(kIntegralShiftId),
      std::string(kIntegralReflectionId), std::string(kBernsteinSingleId), std::string(kBernsteinDoubleId),
      std::string(kBernsteinMultiId)};
  return names;
}

IntegrandSpec reflected_bracket_integrand(long n, WeightParams w, BracketExpansion how) {
  if (n < 0) throw DomainError("bracket power must be nonnegative");
  w = WeightParams::make(w.alpha, w.h);
  IntegrandSpec spec;
  if (how == BracketExpansion::Direct) {
    const RatFuncQ inv = one_minus_q_pow(-w.alpha).pow(-n);
    for (long l = 0; l <= n; ++l)
      spec.add_term(w.h - 1 + w.alpha * l, sign(l) * rational(binomial(n, l)) * RatFuncQ::monomial(1, -w.alpha * l) * inv);
  } else {
    const RatFuncQ prefactor = sign(n) * RatFuncQ::monomial(1, n * w.alpha) * one_minus_q_pow(w.alpha).pow(-n);
    for (long l = 0; l <= n; ++l)
      spec.add_term(w.h - 1 + w.alpha * l,
                    prefactor * sign(l) * rational(binomial(n, l)) * RatFuncQ::monomial(1, -w.alpha * l));
  }
  return spec;
}

VerificationRecord verify_symmetry(long n, WeightParams w, long x) {
  if (n < 0) throw DomainError("index must be nonnegative");
  RatFuncQ lhs = weighted_genocchi_poly_closed(n + 1, w, 1 - x).subst_q_inverse();
  RatFuncQ rhs = sign(n) * RatFuncQ::monomial(1, w.h + w.alpha * n - 1) * weighted_genocchi_poly_closed(n + 1, w, x);
  ParamMap params = weight_params(w);
  params["n"] = n;
  params["x"] = x;
  return make_record(std::string(kReflectionId), std::move(params), std::move(lhs), std::move(rhs));
}

VerificationRecord verify_shift2(long n, const GenocchiFamily& family) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const WeightParams w = family.weights();
  RatFuncQ lhs = weighted_genocchi_poly_closed(n, w, 2);
  RatFuncQ rhs = rational(n, 1) * RatFuncQ::monomial(1, -w.h) * two_q() +
                 RatFuncQ::monomial(1, -2 * w.h) * family.number(n);
  ParamMap params = weight_params(w);
  params["n"] = n;
  return make_record(std::string(kShiftTwoId), std::move(params), std::move(lhs), std::move(rhs), n < 2);
}

VerificationRecord verify_shift2(long n, WeightParams w) { return verify_shift2(n, GenocchiFamily(w, std::max(n, 0L))); }

VerificationRecord verify_integral_shift(long n, WeightParams w) {
  if (n < 0) throw DomainError("index must be nonnegative");
  RatFuncQ lhs = RatFuncQ::monomial(1, w.h - 1) * integrate(reflected_bracket_integrand(n, w, BracketExpansion::ViaReflection));
  RatFuncQ rhs = weighted_genocchi_poly_closed(n + 1, w, 2).subst_q_inverse() * rational(1, n + 1);
  ParamMap params = weight_params(w);
  params["n"] = n;
  return make_record(std::string(kIntegralShiftId), std::move(params), std::move(lhs), std::move(rhs));
}

VerificationRecord verify_integral_reflect(long n, const GenocchiFamily& family) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const WeightParams w = family.weights();
  RatFuncQ lhs = integrate(reflected_bracket_integrand(n, w, BracketExpansion::Direct));
  RatFuncQ rhs = reflected_term(n + 1, family);
  ParamMap params = weight_params(w);
  params["n"] = n;
  return make_record(std::string(kIntegralReflectionId), std::move(params), std::move(lhs), std::move(rhs), n < 1);
}

VerificationRecord verify_integral_reflect(long n, WeightParams w) {
  return verify_integral_reflect(n, GenocchiFamily(w, std::max(n, 0L) + 1));
}

VerificationRecord verify_bernstein_single(long n, long k, const GenocchiFamily& family) {
  if (k < 0 || n <= k) throw DomainError("single Bernstein identity needs n > k >= 0");
  ParamMap params = weight_params(family.weights());
  params["n"] = n;
  params["k"] = k;
  return make_record(std::string(kBernsteinSingleId), std::move(params), bernstein_moment_side(n, k, family),
                     bernstein_reflected_side(n, k, family));
}

VerificationRecord verify_bernstein_single(long n, long k, WeightParams w) {
  return verify_bernstein_single(n, k, GenocchiFamily(w, std::max(n, 0L) + 1));
}

VerificationRecord verify_bernstein_double(long n1, long n2, long k, const GenocchiFamily& family) {
  if (n1 < 0 || n2 < 0 || k < 0 || n1 + n2 <= 2 * k)
    throw DomainError("double Bernstein identity needs n1 + n2 > 2k with nonnegative entries");
  ParamMap params = weight_params(family.weights());
  params["n1"] = n1;
  params["n2"] = n2;
  params["k"] = k;
  const long total = n1 + n2;
  return make_record(std::string(kBernsteinDoubleId), std::move(params), bernstein_moment_side(total, 2 * k, family),
                     bernstein_reflected_side(total, 2 * k, family));
}

VerificationRecord verify_bernstein_double(long n1, long n2, long k, WeightParams w) {
  return verify_bernstein_double(n1, n2, k, GenocchiFamily(w, std::max(n1 + n2, 0L) + 1));
}

VerificationRecord verify_bernstein_multi(std::span<const long> n_list, long k, const GenocchiFamily& family) {
  const long s = static_cast<long>(n_list.size());
  if (s < 2) throw DomainError("multi Bernstein identity needs at least two factors");
  if (k < 0 || std::any_of(n_list.begin(), n_list.end(), [](long v) { return v < 0; }))
    throw DomainError("multi Bernstein identity needs nonnegative indices");
  const long total = std::accumulate(n_list.begin(), n_list.end(), 0L);
  if (total <= s * k) throw DomainError("multi Bernstein identity needs sum n_i > s k");
  ParamMap params = weight_params(family.weights());
  params["n_list"] = std::vector<long>(n_list.begin(), n_list.end());
  params["k"] = k;
  params["s"] = s;
  return make_record(std::string(kBernsteinMultiId), std::move(params), bernstein_moment_side(total, s * k, family),
                     bernstein_reflected_side(total, s * k, family));
}

VerificationRecord verify_bernstein_multi(std::span<const long> n_list, long k, WeightParams w) {
  const long total = std::accumulate(n_list.begin(), n_list.end(), 0L);
  return verify_bernstein_multi(n_list, k, GenocchiFamily(w, std::max(total, 0L) + 1));
}

bool SweepReport::has_regression() const {
  return std::any_of(records.begin(), records.end(), [](const VerificationRecord& r) { return r.is_regression(); });
}

namespace {

// Leading index along which domain boundaries are reported, and the
// parameters that stay fixed while it varies.
std::pair<std::string, long> boundary_axis(const VerificationRecord& r, ParamMap& rest) {
  rest = r.params;
  if (auto it = rest.find("n_list"); it != rest.end()) {
    const auto& list = std::get<std::vector<long>>(it->second);
    const long total = std::accumulate(list.begin(), list.end(), 0L);
    rest.erase(it);
    return {"sum(n_list)", total};
  }
  if (auto it = rest.find("n2"); it != rest.end()) {
    const long v = std::get<long>(it->second);
    rest.erase(it);
    return {"n2", v};
  }
  if (auto it = rest.find("n"); it != rest.end()) {
    const long v = std::get<long>(it->second);
    rest.erase(it);
    return {"n", v};
  }
  return {"", 0};
}

}  // namespace

SweepReport summarize(std::vector<VerificationRecord> records) {
  SweepReport report;
  report.records = std::move(records);

  // theorem -> fixed params -> leading index -> all passed
  std::map<std::string, std::map<std::string, std::map<long, bool>>> axes;
  std::map<std::string, std::string> axis_names;

  for (const auto& r : report.records) {
    auto& s = report.summary[r.theorem];
    if (r.status == Status::Error) {
      ++s.error;
    } else if (r.boundary) {
      ++(r.passed() ? s.boundary_pass : s.boundary_fail);
    } else {
      ++(r.passed() ? s.pass : s.fail);
    }
    ParamMap rest;
    auto [axis, index] = boundary_axis(r, rest);
    if (axis.empty()) continue;
    axis_names[r.theorem] = axis;
    auto& slot = axes[r.theorem][format_params(rest)];
    auto [it, inserted] = slot.try_emplace(index, r.passed());
    if (!inserted) it->second = it->second && r.passed();
  }

  for (const auto& [theorem, groups] : axes) {
    auto& out = report.summary[theorem].boundaries;
    const std::string& axis = axis_names[theorem];
    for (const auto& [fixed, series] : groups) {
      const std::pair<const long, bool>* prev = nullptr;
      for (const auto& entry : series) {
        if (prev && prev->second != entry.second) {
          out.push_back(fixed + ": " + axis + "=" + std::to_string(prev->first) + " " +
                        (prev->second ? "PASS" : "FAIL") + " -> " + axis + "=" + std::to_string(entry.first) + " " +
                        (entry.second ? "PASS" : "FAIL"));
        }
        prev = &entry;
      }
    }
  }
  return report;
}

namespace {

struct Task {
  std::string theorem;
  ParamMap params;
  bool boundary = false;
  std::function<VerificationRecord(const GenocchiFamily&)> run;
  std::size_t family = 0;
};

void enumerate_lists(long s, const Range& r, std::vector<long>& current, std::vector<std::vector<long>>& out) {
  if (static_cast<long>(current.size()) == s) {
    out.push_back(current);
    return;
  }
  for (long v = r.min; v <= r.max; ++v) {
    current.push_back(v);
    enumerate_lists(s, r, current, out);
    current.pop_back();
  }
}

void check_range(const Range& r, long lowest, const char* name) {
  if (!r.empty() && r.min < lowest)
    throw DomainError(std::string("sweep range '") + name + "' must start at >= " + std::to_string(lowest));
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  check_range(config.n, 0, "n");
  check_range(config.k, 0, "k");
  check_range(config.alpha, 1, "alpha");
  check_range(config.h, 1, "h");
  check_range(config.pair_n, 0, "pair_n");
  check_range(config.multi_n, 0, "multi_n");
  check_range(config.s, 2, "s");

  std::set<std::string> selected;
  if (config.theorems.empty()) {
    selected.insert(identity_names().begin(), identity_names().end());
  } else {
    for (const auto& t : config.theorems) {
      if (std::find(identity_names().begin(), identity_names().end(), t) == identity_names().end())
        throw DomainError("unknown identity '" + t + "'");
      selected.insert(t);
    }
  }
  auto wants = [&](std::string_view id) { return selected.count(std::string(id)) > 0; };

  // Largest Genocchi index any selected verifier reads from a family.
  long need = 0;
  if (!config.n.empty()) {
    if (wants(kShiftTwoId)) need = std::max(need, config.n.max);
    if (wants(kIntegralReflectionId) || wants(kBernsteinSingleId)) need = std::max(need, config.n.max + 1);
  }
  if (wants(kBernsteinDoubleId) && !config.pair_n.empty()) need = std::max(need, 2 * config.pair_n.max + 1);
  if (wants(kBernsteinMultiId) && !config.multi_n.empty() && !config.s.empty())
    need = std::max(need, config.s.max * config.multi_n.max + 1);

  std::vector<WeightParams> weights;
  for (long a = config.alpha.min; a <= config.alpha.max; ++a)
    for (long h = config.h.min; h <= config.h.max; ++h) weights.push_back(WeightParams{a, h});

  std::vector<Task> tasks;
  for (std::size_t wi = 0; wi < weights.size(); ++wi) {
    const WeightParams w = weights[wi];
    const ParamMap base = {{"alpha", w.alpha}, {"h", w.h}};
    auto add = [&](std::string_view id, ParamMap extra, bool boundary, auto fn) {
      ParamMap params = base;
      params.merge(extra);
      tasks.push_back(Task{std::string(id), std::move(params), boundary, std::move(fn), wi});
    };

    if (wants(kReflectionId))
      for (long n = config.n.min; n <= config.n.max; ++n)
        for (long x = config.x.min; x <= config.x.max; ++x)
          add(kReflectionId, {{"n", n}, {"x", x}}, false,
              [n, x](const GenocchiFamily& f) { return verify_symmetry(n, f.weights(), x); });
    if (wants(kShiftTwoId))
      for (long n = config.n.min; n <= config.n.max; ++n)
        add(kShiftTwoId, {{"n", n}}, n < 2, [n](const GenocchiFamily& f) { return verify_shift2(n, f); });
    if (wants(kIntegralShiftId))
      for (long n = config.n.min; n <= config.n.max; ++n)
        add(kIntegralShiftId, {{"n", n}}, false,
            [n](const GenocchiFamily& f) { return verify_integral_shift(n, f.weights()); });
    if (wants(kIntegralReflectionId))
      for (long n = config.n.min; n <= config.n.max; ++n)
        add(kIntegralReflectionId, {{"n", n}}, n < 1,
            [n](const GenocchiFamily& f) { return verify_integral_reflect(n, f); });
    if (wants(kBernsteinSingleId))
      for (long n = config.n.min; n <= config.n.max; ++n)
        for (long k = config.k.min; k <= std::min(config.k.max, n - 1); ++k)
          add(kBernsteinSingleId, {{"n", n}, {"k", k}}, false,
              [n, k](const GenocchiFamily& f) { return verify_bernstein_single(n, k, f); });
    if (wants(kBernsteinDoubleId))
      for (long n1 = config.pair_n.min; n1 <= config.pair_n.max; ++n1)
        for (long n2 = config.pair_n.min; n2 <= config.pair_n.max; ++n2)
          for (long k = config.k.min; k <= config.k.max && 2 * k < n1 + n2; ++k)
            add(kBernsteinDoubleId, {{"n1", n1}, {"n2", n2}, {"k", k}}, false,
                [n1, n2, k](const GenocchiFamily& f) { return verify_bernstein_double(n1, n2, k, f); });
    if (wants(kBernsteinMultiId))
      for (long s = config.s.min; s <= config.s.max; ++s) {
        std::vector<std::vector<long>> lists;
        std::vector<long> current;
        if (!config.multi_n.empty()) enumerate_lists(s, config.multi_n, current, lists);
        for (const auto& list : lists) {
          const long total = std::accumulate(list.begin(), list.end(), 0L);
          for (long k = config.k.min; k <= config.k.max && s * k < total; ++k)
            add(kBernsteinMultiId, {{"n_list", list}, {"k", k}, {"s", s}}, false,
                [list, k](const GenocchiFamily& f) { return verify_bernstein_multi(list, k, f); });
        }
      }
  }

  std::vector<std::optional<GenocchiFamily>> families(weights.size());
  parallel_for(weights.size(), config.workers, [&](std::size_t i) { families[i].emplace(weights[i], need); });

  std::vector<VerificationRecord> records(tasks.size());
  parallel_for(tasks.size(), config.workers, [&](std::size_t i) {
    const Task& t = tasks[i];
    try {
      records[i] = t.run(*families[t.family]);
    } catch (const std::exception& e) {
      VerificationRecord r;
      r.theorem = t.theorem;
      r.params = t.params;
      r.status = Status::Error;
      r.boundary = t.boundary;
      r.note = e.what();
      records[i] = std::move(r);
    }
  });

  // Grid order: theorem order first, then the parameter tuple.
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < identity_names().size(); ++i) rank[identity_names()[i]] = i;
  std::stable_sort(records.begin(), records.end(), [&](const VerificationRecord& a, const VerificationRecord& b) {
    if (a.theorem != b.theorem) return rank[a.theorem] < rank[b.theorem];
    return a.params < b.params;
  });
  return summarize(std::move(records));
}

}  // namespace qgen
