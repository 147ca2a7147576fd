#include <bit>
#include <map>

#include "qgraph/errors.hpp"
#include "qgraph/statmech.hpp"
#include "qgraph/textio.hpp"

namespace qgraph::statmech {

using polyq::Var;

void validate(const Hyperbolic& p) {
  if (p.c <= 0) throw DomainError("hyperbolic pair needs c > 0");
  if (p.c * p.c - p.h * p.h != 1) throw DomainError("hyperbolic pair needs c^2 - h^2 = 1");
}

Couplings Couplings::from_v(std::vector<Rational> v) {
  Couplings w;
  w.ch_.resize(v.size());
  w.v_ = std::move(v);
  return w;
}

Couplings Couplings::uniform_v(int edges, const Rational& v) {
  return from_v(std::vector<Rational>(static_cast<std::size_t>(edges), v));
}

Couplings Couplings::from_hyperbolic(std::vector<Hyperbolic> ch) {
  Couplings w;
  for (const auto& p : ch) {
    validate(p);
    w.v_.push_back(p.c + p.h - 1);
    w.ch_.emplace_back(p);
  }
  return w;
}

bool Couplings::hyperbolic() const {
  for (const auto& p : ch_)
    if (!p) return false;
  return true;
}

const Hyperbolic& Couplings::ch(int e) const {
  const auto& p = ch_.at(static_cast<std::size_t>(e));
  if (!p) throw DomainError("edge " + std::to_string(e) + " has no hyperbolic coupling");
  return *p;
}

Couplings parse_couplings(std::string_view text) {
  Couplings w;
  std::vector<Rational> v;
  std::vector<std::optional<Hyperbolic>> ch;
  for (const auto& ln : textio::tokenize(text)) {
    const auto& kind = ln.tokens.front();
    if (kind.text == "v") {
      textio::expect_count(ln, 2);
      v.push_back(textio::parse_rational(ln, ln.tokens[1]));
      ch.emplace_back();
    } else if (kind.text == "ch") {
      textio::expect_count(ln, 3);
      Hyperbolic p{textio::parse_rational(ln, ln.tokens[1]), textio::parse_rational(ln, ln.tokens[2])};
      try {
        validate(p);
      } catch (const DomainError& e) {
        textio::fail(ln, kind, e.what());
      }
      v.push_back(p.c + p.h - 1);
      ch.emplace_back(p);
    } else {
      textio::fail(ln, kind, "expected 'v' or 'ch'");
    }
  }
  bool all_ch = !ch.empty();
  for (const auto& p : ch) all_ch = all_ch && p.has_value();
  if (all_ch) {
    std::vector<Hyperbolic> pairs;
    for (const auto& p : ch) pairs.push_back(*p);
    return Couplings::from_hyperbolic(std::move(pairs));
  }
  w = Couplings::from_v(std::move(v));
  return w;
}

Couplings load_couplings(const std::string& path) { return parse_couplings(textio::read_file(path)); }

namespace {

void check(const Multigraph& g, const Couplings& w) {
  if (w.size() != g.edge_count())
    throw DomainError("coupling count " + std::to_string(w.size()) + " does not match edge count " +
                      std::to_string(g.edge_count()));
  if (g.edge_count() > graph::kMaxSubsetEdges) throw DomainError("too many edges for subset expansion");
}

void check_k(int k) {
  if (k < 1) throw DomainError("k must be positive");
}

// Calls fn(spins) for every s in {0..k-1}^V; spins[1..|V|].
template <class Fn>
void for_each_state(int vertices, int k, Fn&& fn) {
  std::vector<int> s(static_cast<std::size_t>(vertices) + 1, 0);
  while (true) {
    fn(s);
    int i = 1;
    while (i <= vertices && ++s[static_cast<std::size_t>(i)] == k) s[static_cast<std::size_t>(i++)] = 0;
    if (i > vertices) break;
  }
}

Poly from_exponent_map(const std::map<int, Rational>& m) {
  Poly p;
  for (const auto& [e, c] : m) p += Poly::monomial(Var::q, e, c);
  return p;
}

Rational subset_weight(const Couplings& w, std::uint64_t mask) {
  Rational r = 1;
  for (int e = 0; mask; ++e, mask >>= 1U)
    if (mask & 1U) r *= w.v(e);
  return r;
}

}  // namespace

Rational potts_direct(const Multigraph& g, int k, const Couplings& w) {
  check(g, w);
  check_k(k);
  Rational total = 0;
  for_each_state(g.vertex_count(), k, [&](const std::vector<int>& s) {
    Rational term = 1;
    for (int e = 0; e < g.edge_count(); ++e)
      if (s[static_cast<std::size_t>(g.edge(e).u)] == s[static_cast<std::size_t>(g.edge(e).v)]) term *= 1 + w.v(e);
    total += term;
  });
  return total;
}

Rational potts_fk(const Multigraph& g, int k, const Couplings& w) {
  check(g, w);
  check_k(k);
  Rational total = 0;
  const std::uint64_t n = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Rational kc = 1;
    for (int i = graph::component_count(g, mask); i > 0; --i) kc *= k;
    total += kc * subset_weight(w, mask);
  }
  return total;
}

std::pair<Poly, Poly> qpotts_pair(const Multigraph& g, int k, const Couplings& w) {
  check(g, w);
  check_k(k);
  std::map<int, Poly> qi;
  Poly lhs;
  const std::uint64_t n = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Rational c = subset_weight(w, mask);
    if (c == 0) continue;
    Poly term(c);
    for (int s : graph::component_sizes(g, mask)) {
      auto it = qi.find(s);
      if (it == qi.end()) it = qi.emplace(s, polyq::qint(k, Poly::monomial(Var::q, s))).first;
      term *= it->second;
    }
    lhs += term;
  }
  std::map<int, Rational> rhs;
  for_each_state(g.vertex_count(), k, [&](const std::vector<int>& s) {
    Rational term = 1;
    int sum = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) sum += s[static_cast<std::size_t>(v)];
    for (int e = 0; e < g.edge_count(); ++e)
      if (s[static_cast<std::size_t>(g.edge(e).u)] == s[static_cast<std::size_t>(g.edge(e).v)]) term *= 1 + w.v(e);
    rhs[sum] += term;
  });
  return {lhs, from_exponent_map(rhs)};
}

namespace {

// sum over s in {-1,+1}^V of q^{sum s} prod_e (c_e + s_i s_j h_e)
Poly ising_direct(const Multigraph& g, const Couplings& w) {
  std::map<int, Rational> acc;
  for_each_state(g.vertex_count(), 2, [&](const std::vector<int>& s) {
    Rational term = 1;
    int sum = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) sum += 2 * s[static_cast<std::size_t>(v)] - 1;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& p = w.ch(e);
      bool same = s[static_cast<std::size_t>(g.edge(e).u)] == s[static_cast<std::size_t>(g.edge(e).v)];
      term *= same ? Rational(p.c + p.h) : Rational(p.c - p.h);
    }
    acc[sum] += term;
  });
  return from_exponent_map(acc);
}

void check_hyperbolic(const Couplings& w) {
  if (!w.hyperbolic()) throw DomainError("hyperbolic couplings (ch lines) required");
}

}  // namespace

std::pair<Poly, Poly> ising_pair(const Multigraph& g, const Couplings& w) {
  check(g, w);
  check_hyperbolic(w);
  // Spin map s -> (s+1)/2 turns e^{J s_i s_j} into e^{-J}(1 + (e^{2J}-1) delta)
  // and q^{sum s} into q^{-|V|} (q^2)^{sum s'}.
  std::vector<Rational> doubled;
  Rational pref = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& p = w.ch(e);
    doubled.push_back((p.c + p.h) * (p.c + p.h) - 1);
    pref *= p.c - p.h;
  }
  Poly potts = qpotts_pair(g, 2, Couplings::from_v(doubled)).first;
  Poly rhs = polyq::substitute(potts, Var::q, Poly::monomial(Var::q, 2)) * Poly::monomial(Var::q, -g.vertex_count(), pref);
  return {ising_direct(g, w), rhs};
}

std::pair<Poly, Poly> vdw_pair(const Multigraph& g, const Couplings& w) {
  check(g, w);
  check_hyperbolic(w);
  const Poly qp = polyq::var(Var::q) + Poly::monomial(Var::q, -1);
  const Poly qm = polyq::var(Var::q) - Poly::monomial(Var::q, -1);
  const int k = g.vertex_count();
  std::vector<Poly> qp_pow, qm_pow;
  for (int i = 0; i <= k; ++i) {
    qp_pow.push_back(polyq::pow(qp, static_cast<unsigned>(i)));
    qm_pow.push_back(polyq::pow(qm, static_cast<unsigned>(i)));
  }
  Rational cosh_prod = 1;
  for (int e = 0; e < g.edge_count(); ++e) cosh_prod *= w.ch(e).c;
  std::map<int, Rational> by_odd;
  const std::uint64_t n = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Rational th = 1;
    for (int e = 0; e < g.edge_count(); ++e)
      if ((mask >> e) & 1U) th *= w.ch(e).h / w.ch(e).c;
    by_odd[graph::odd_degree_count(g, graph::EdgeSubset(g.edge_count(), mask))] += th;
  }
  Poly rhs;
  for (const auto& [o, c] : by_odd)
    rhs += qm_pow[static_cast<std::size_t>(o)] * qp_pow[static_cast<std::size_t>(k - o)] * c;
  rhs *= cosh_prod;
  return {ising_direct(g, w), rhs};
}

std::pair<Poly, Poly> lemma_w_eval(const Multigraph& g) {
  std::map<int, Rational> acc;
  for_each_state(g.vertex_count(), 2, [&](const std::vector<int>& s) {
    int sum = 0, sign = 1;
    for (int v = 1; v <= g.vertex_count(); ++v) sum += 2 * s[static_cast<std::size_t>(v)] - 1;
    for (const auto& e : g.edges())
      if (s[static_cast<std::size_t>(e.u)] != s[static_cast<std::size_t>(e.v)]) sign = -sign;
    acc[sum] += sign;
  });
  const int o = graph::odd_degree_count(g, graph::EdgeSubset::all(g.edge_count()));
  const Poly qp = polyq::var(Var::q) + Poly::monomial(Var::q, -1);
  const Poly qm = polyq::var(Var::q) - Poly::monomial(Var::q, -1);
  Poly rhs = polyq::pow(qm, static_cast<unsigned>(o)) * polyq::pow(qp, static_cast<unsigned>(g.vertex_count() - o));
  return {from_exponent_map(acc), rhs};
}

}  // namespace qgraph::statmech
