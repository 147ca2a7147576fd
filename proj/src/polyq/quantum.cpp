#include <map>

#include "qgraph/errors.hpp"
#include "qgraph/polyq.hpp"

namespace qgraph::polyq {

namespace {

void require_unit_monomial(const Poly& base, const char* who) {
  if (!base.is_monomial() || base.terms().begin()->second != 1)
    throw DomainError(std::string(who) + ": base must be a monomial with coefficient 1");
}

}  // namespace

Poly qint(int n, const Poly& base) {
  require_unit_monomial(base, "qint");
  Poly r;
  if (n >= 0) {
    for (int i = 0; i < n; ++i) r += monomial_pow(base, i);
  } else {
    for (int i = n; i < 0; ++i) r -= monomial_pow(base, i);
  }
  return r;
}

Poly qbinom(int m, int k, const Poly& base) {
  require_unit_monomial(base, "qbinom");
  if (m < 0 || k < 0) throw DomainError("qbinom: negative argument");
  if (k > m) throw DomainError("qbinom: k > m");
  // rows[m][k], grown on demand; one table per base exponent vector.
  thread_local std::map<Exponents, std::vector<std::vector<Poly>>> tables;
  auto& rows = tables[base.terms().begin()->first];
  while (static_cast<int>(rows.size()) <= m) {
    int row = static_cast<int>(rows.size());
    std::vector<Poly> cur(static_cast<std::size_t>(row) + 1);
    cur[0] = Poly(1L);
    cur[static_cast<std::size_t>(row)] = Poly(1L);
    for (int i = 1; i < row; ++i) {
      const auto& prev = rows[static_cast<std::size_t>(row) - 1];
      cur[static_cast<std::size_t>(i)] =
          monomial_pow(base, i) * prev[static_cast<std::size_t>(i)] + prev[static_cast<std::size_t>(i) - 1];
    }
    rows.push_back(std::move(cur));
  }
  return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

bool qbinomial_theorem_check(int n) {
  if (n < 0) throw DomainError("qbinomial_theorem_check: negative n");
  const Poly a = var(Var::a), z = var(Var::z), q = var(Var::q);
  Poly lhs(1L);
  for (int i = 0; i < n; ++i) lhs *= a - monomial_pow(q, i) * z;
  Poly rhs;
  for (int i = 0; i <= n; ++i) {
    Poly t = qbinom(n, i, q) * monomial_pow(q, i * (i - 1) / 2) * monomial_pow(a, n - i) * monomial_pow(z, i);
    if (i % 2) t = -t;
    rhs += t;
  }
  return lhs == rhs;
}

Poly substitute(const Poly& p, Var v, const Poly& image) {
  if (image.is_zero()) return substitute(p, v, Rational(0));
  if (!image.is_monomial()) throw DomainError("substitute: image must be a single term or a constant");
  const std::size_t vi = static_cast<std::size_t>(v);
  Poly out;
  std::map<int, Poly> cache;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    int k = rest[vi];
    rest[vi] = 0;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, monomial_pow(image, k)).first;
    out += Poly::term(rest, c) * it->second;
  }
  return out;
}

Poly substitute(const Poly& p, Var v, const Rational& value) {
  const std::size_t vi = static_cast<std::size_t>(v);
  if (value == 0) {
    Poly out;
    for (const auto& [e, c] : p.terms()) {
      if (e[vi] < 0) throw DomainError("substitute: zero value for a negative power");
      if (e[vi] == 0) out.add_term(e, c);
    }
    return out;
  }
  return substitute(p, v, Poly(value));
}

Poly compose(const Poly& p, Var v, const Poly& image) {
  if (image.is_zero() || image.is_monomial()) return substitute(p, v, image);
  const std::size_t vi = static_cast<std::size_t>(v);
  std::vector<Poly> powers{Poly(1L)};
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    int k = e[vi];
    if (k < 0) throw DomainError("compose: negative exponent with a non-monomial image");
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * image);
    Exponents rest = e;
    rest[vi] = 0;
    out += Poly::term(rest, c) * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {

// Single variable shared by both operands, or nullopt if both are constants.
std::optional<Var> common_var(const Poly& a, const Poly& b) {
  std::optional<Var> v;
  for (const Poly* p : {&a, &b})
    for (Var w : p->variables()) {
      if (v && *v != w) throw DomainError("exact_divide: operands must be univariate in the same variable");
      v = w;
    }
  return v;
}

// Dense coefficients after factoring out the lowest power.
std::vector<Rational> dense(const Poly& p, std::size_t vi, int lo) {
  std::vector<Rational> d;
  for (const auto& [e, c] : p.terms()) {
    auto idx = static_cast<std::size_t>(e[vi] - lo);
    if (idx >= d.size()) d.resize(idx + 1, Rational(0));
    d[idx] = c;
  }
  return d;
}

}  // namespace

Poly exact_divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("exact_divide: division by zero");
  if (num.is_zero()) return num;
  auto v = common_var(num, den);
  if (!v) return Poly(num.constant_term() / den.constant_term());
  const auto vi = static_cast<std::size_t>(*v);
  int nlo = num.min_exp(*v), dlo = den.min_exp(*v);
  auto n = dense(num, vi, nlo);
  auto d = dense(den, vi, dlo);
  if (n.size() < d.size()) throw DomainError("exact_divide: nonzero remainder");
  std::vector<Rational> quot(n.size() - d.size() + 1, Rational(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = n[i + d.size() - 1] / d.back();
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= c * d[j];
  }
  for (const auto& r : n)
    if (r != 0) throw DomainError("exact_divide: nonzero remainder");
  Poly out;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    Exponents e{};
    e[vi] = nlo - dlo + static_cast<int>(i);
    out.add_term(e, quot[i]);
  }
  return out;
}

}  // namespace qgraph::polyq
