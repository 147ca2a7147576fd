#include <algorithm>
#include <cctype>
#include <sstream>

#include "qgraph/errors.hpp"
#include "qgraph/polyq.hpp"

namespace qgraph::polyq {

namespace {

constexpr char kNames[kNumVars] = {'A', 'a', 'b', 'q', 't', 'u', 'v', 'x', 'y', 'z'};

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

bool all_zero(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

}  // namespace

char var_char(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_char(char c) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kNames[i] == c) return static_cast<Var>(i);
  return std::nullopt;
}

Exponents zero_exponents() { return Exponents{}; }

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

LaurentPoly LaurentPoly::monomial(Var v, int e, const Rational& c) {
  Exponents ex{};
  ex[static_cast<std::size_t>(v)] = e;
  return term(ex, c);
}

LaurentPoly LaurentPoly::term(const Exponents& e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && all_zero(terms_.begin()->first));
}

Rational LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coeff(Exponents{}); }

std::vector<Var> LaurentPoly::variables() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kNumVars; ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        out.push_back(static_cast<Var>(i));
        break;
      }
  return out;
}

int LaurentPoly::min_exp(Var v) const {
  if (terms_.empty()) throw DomainError("min_exp of zero polynomial");
  int m = terms_.begin()->first[static_cast<std::size_t>(v)];
  for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<std::size_t>(v)]);
  return m;
}

int LaurentPoly::max_exp(Var v) const {
  if (terms_.empty()) throw DomainError("max_exp of zero polynomial");
  int m = terms_.begin()->first[static_cast<std::size_t>(v)];
  for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<std::size_t>(v)]);
  return m;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string t;
    bool constant = all_zero(e);
    if (constant || c != 1) t = rational_str(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!t.empty()) t += '*';
      t += kNames[i];
      if (e[i] != 1) t += "^" + std::to_string(e[i]);
    }
    out += t;
  }
  return out;
}

Rational parse_rational(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("expected a rational number");
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::size_t dd = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++dd;
    if (dd == 0) throw std::invalid_argument("missing denominator");
  }
  if (i != s.size()) throw std::invalid_argument("trailing characters in rational");
  std::string str(s.front() == '+' ? s.substr(1) : s);
  Rational r;
  if (r.set_str(str, 10) != 0) throw std::invalid_argument("bad rational");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw ParseError("polynomial: " + msg, 1, static_cast<int>(at) + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail("empty input", pos);
  if (text.substr(pos) == "0") return out;
  while (true) {
    skip_ws();
    Rational c = 1;
    Exponents e{};
    bool have_factor = false;
    if (pos < text.size() && text[pos] == '-' && pos + 1 < text.size() &&
        std::isalpha(static_cast<unsigned char>(text[pos + 1]))) {
      c = -1;
      ++pos;
    }
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail("unexpected end", pos);
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
        std::size_t start = pos++;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        try {
          c *= parse_rational(text.substr(start, pos - start));
        } catch (const std::invalid_argument& ex) {
          fail(ex.what(), start);
        }
      } else if (auto v = var_from_char(ch)) {
        ++pos;
        int ex = 1;
        if (pos < text.size() && text[pos] == '^') {
          std::size_t start = ++pos;
          if (pos < text.size() && text[pos] == '-') ++pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          std::string digits(text.substr(start, pos - start));
          if (digits.empty() || digits == "-") fail("bad exponent", start);
          ex = std::stoi(digits);
        }
        e[static_cast<std::size_t>(*v)] += ex;
      } else {
        fail(std::string("unexpected character '") + ch + "'", pos);
      }
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term", pos);
    out.add_term(e, c);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail("expected '+'", pos);
    ++pos;
  }
  return out;
}

Poly var(Var v) { return Poly::monomial(v, 1); }

Poly pow(const Poly& p, unsigned k) {
  Poly r(1L), base = p;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

Poly monomial_pow(const Poly& m, int k) {
  if (!m.is_monomial()) throw DomainError("monomial_pow: argument is not a single term");
  const auto& [e, c] = *m.terms().begin();
  if (k < 0 && c == 0) throw DomainError("monomial_pow: zero to a negative power");
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = e[i] * k;
  Rational rc = 1;
  Rational b = k < 0 ? Rational(1 / c) : c;
  for (int i = 0; i < std::abs(k); ++i) rc *= b;
  return Poly::term(r, rc);
}

void ExpCounter::add(int e, std::int64_t n) {
  if (n == 0) return;
  if (counts_.empty()) {
    lo_ = e;
    counts_.assign(1, 0);
  } else if (e < lo_) {
    counts_.insert(counts_.begin(), static_cast<std::size_t>(lo_ - e), 0);
    lo_ = e;
  } else if (e - lo_ >= static_cast<int>(counts_.size())) {
    counts_.resize(static_cast<std::size_t>(e - lo_ + 1), 0);
  }
  counts_[static_cast<std::size_t>(e - lo_)] += n;
}

void ExpCounter::merge(const ExpCounter& o) {
  for (std::size_t i = 0; i < o.counts_.size(); ++i) add(o.lo_ + static_cast<int>(i), o.counts_[i]);
}

Poly ExpCounter::to_poly(Var v) const {
  Poly p;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    Exponents e{};
    e[static_cast<std::size_t>(v)] = lo_ + static_cast<int>(i);
    p.add_term(e, Rational(static_cast<long>(counts_[i])));
  }
  return p;
}

}  // namespace qgraph::polyq
