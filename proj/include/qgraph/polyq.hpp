#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgraph::polyq {

// Variable alphabet. Enumerator order is the canonical (name) order used for
// printing; uppercase sorts first as in ASCII.
enum class Var : std::uint8_t { A, a, b, q, t, u, v, x, y, z };
inline constexpr std::size_t kNumVars = 10;

using Exponents = std::array<std::int32_t, kNumVars>;
using Rational = mpq_class;

char var_char(Var v);
std::optional<Var> var_from_char(char c);

// Sparse Laurent polynomial over Q. No stored coefficient is ever zero.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(Var v, int e, const Rational& c = 1);
  static LaurentPoly term(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  // Variables with a nonzero exponent in some term.
  std::vector<Var> variables() const;
  int min_exp(Var v) const;
  int max_exp(Var v) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  void add_term(const Exponents& e, const Rational& c);

  // Canonical text: terms in exponent-vector order, "c*q^e*t^f", joined by " + ".
  std::string str() const;
  static LaurentPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

using Poly = LaurentPoly;

Exponents zero_exponents();
Poly var(Var v);
Poly pow(const Poly& p, unsigned k);
// Raise a single-term polynomial to an integer power (negative allowed).
Poly monomial_pow(const Poly& m, int k);

// (n)_base = 1 + base + ... + base^{n-1}; for n < 0 the Laurent value
// (base^n - 1)/(base - 1) = -(base^{-1} + ... + base^{n}).
Poly qint(int n, const Poly& base);
// Gaussian binomial by the Pascal recurrence, memoized per thread.
Poly qbinom(int m, int k, const Poly& base);
bool qbinomial_theorem_check(int n);

// Replace var by a single term or a constant. Zero image with a negative
// exponent throws DomainError.
Poly substitute(const Poly& p, Var v, const Poly& image);
Poly substitute(const Poly& p, Var v, const Rational& value);
// Replace var by an arbitrary polynomial; var must occur with exponents >= 0
// unless the image is a single term.
Poly compose(const Poly& p, Var v, const Poly& image);
// Exact division of univariate Laurent polynomials in the same variable.
// Throws DomainError if the remainder is nonzero.
Poly exact_divide(const Poly& num, const Poly& den);

// Dense exponent histogram in one variable, converted to a polynomial at the end.
class ExpCounter {
 public:
  void add(int e, std::int64_t n = 1);
  void merge(const ExpCounter& o);
  Poly to_poly(Var v) const;
  bool empty() const { return counts_.empty(); }

 private:
  int lo_ = 0;
  std::vector<std::int64_t> counts_;
};

Rational parse_rational(std::string_view s);
std::string rational_str(const Rational& r);

}  // namespace qgraph::polyq
