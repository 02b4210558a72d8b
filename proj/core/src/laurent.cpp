#include "qgen/laurent.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "qgen/errors.hpp"

namespace qgen {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& r) { return r.get_str(10); }

BigRational pow(const BigRational& r, long e) {
  if (e < 0) {
    if (r == 0) throw ArithmeticError("zero raised to a negative power");
    return pow(BigRational(1) / r, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  BigRational out(n, d);
  out.canonicalize();
  return out;
}

LaurentPolyQ::LaurentPolyQ(const BigRational& c) { add_term(0, c); }

LaurentPolyQ::LaurentPolyQ(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolyQ LaurentPolyQ::monomial(const BigRational& c, long exponent) {
  LaurentPolyQ p;
  p.add_term(exponent, c);
  return p;
}

BigRational LaurentPolyQ::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

long LaurentPolyQ::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

long LaurentPolyQ::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPolyQ::add_term(long exponent, const BigRational& value) {
  BigRational c = value;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolyQ LaurentPolyQ::operator-() const {
  LaurentPolyQ r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolyQ& LaurentPolyQ::operator+=(const LaurentPolyQ& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolyQ& LaurentPolyQ::operator-=(const LaurentPolyQ& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
  LaurentPolyQ r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

BigRational LaurentPolyQ::eval_at(const BigRational& q0) const {
  BigRational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pow(q0, e);
  return acc;
}

std::string LaurentPolyQ::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += qgen::to_string(c);
    out += "*q^";
    out += std::to_string(e);
  }
  return out;
}

LaurentPolyQ LaurentPolyQ::parse(std::string_view text) {
  std::string_view s = trim(text);
  LaurentPolyQ p;
  if (s == "0") return p;
  while (!s.empty()) {
    std::size_t sep = s.find(" + ");
    std::string_view term = trim(s.substr(0, sep));
    s = sep == std::string_view::npos ? std::string_view{} : s.substr(sep + 3);
    std::size_t star = term.find("*q^");
    if (star == std::string_view::npos) throw ParseError("malformed term: '" + std::string(term) + "'");
    BigRational c = parse_rational(term.substr(0, star));
    std::string_view exp = term.substr(star + 3);
    long e = 0;
    auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
    if (ec != std::errc{} || ptr != exp.data() + exp.size())
      throw ParseError("malformed exponent: '" + std::string(exp) + "'");
    if (c == 0) throw ParseError("zero coefficient in term list");
    if (p.terms_.count(e)) throw ParseError("repeated exponent in term list");
    p.add_term(e, c);
  }
  return p;
}

LaurentSplit split(const LaurentPolyQ& p) {
  if (p.is_zero()) throw std::logic_error("split of zero Laurent polynomial");
  BigInt lcm_den = 1;
  for (const auto& [e, c] : p.terms())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  const long lo = p.min_exponent();
  const long hi = p.max_exponent();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : p.terms()) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    coeffs[static_cast<std::size_t>(e - lo)] = v;
  }
  IntPoly raw(std::move(coeffs));
  IntPoly prim = primitive_part(raw);
  BigInt content = raw.leading() / prim.leading();
  BigRational scale(content, lcm_den);
  scale.canonicalize();
  return {scale, lo, std::move(prim)};
}

}  // namespace qgen
