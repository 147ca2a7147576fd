#include <algorithm>
#include <bit>
#include <map>

#include "qgraph/errors.hpp"
#include "qgraph/qchrom.hpp"

namespace qgraph::qchrom {

using polyq::ExpCounter;
using polyq::Var;

namespace {

void check_n(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be positive");
}

void check_subset_size(const Multigraph& g) {
  if (g.edge_count() > graph::kMaxSubsetEdges) throw DomainError("too many edges for subset expansion");
}

// Earlier neighbours of each vertex (vertex order), loops excluded.
std::vector<std::vector<int>> back_neighbours(const Multigraph& g) {
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (const auto& e : g.edges())
    if (!e.is_loop()) nb[static_cast<std::size_t>(e.v)].push_back(e.u);
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return nb;
}

void colour(int v, int k, int n, int sum, const std::vector<std::vector<int>>& nb, std::vector<int>& val,
            ExpCounter& acc) {
  if (v > k) {
    acc.add(sum);
    return;
  }
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int u : nb[static_cast<std::size_t>(v)])
      if (val[static_cast<std::size_t>(u)] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    val[static_cast<std::size_t>(v)] = c;
    colour(v + 1, k, n, sum + c, nb, val, acc);
  }
}

Poly q_power(int e) { return Poly::monomial(Var::q, e); }

}  // namespace

Poly mq_direct(const Multigraph& g, int n) {
  check_n(n, "mq_direct");
  if (g.has_loop()) return Poly();
  auto nb = back_neighbours(g);
  std::vector<int> val(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  ExpCounter acc;
  colour(1, g.vertex_count(), n, 0, nb, val, acc);
  return acc.to_poly(Var::q);
}

Poly mq_subset(const Multigraph& g, int n) {
  check_n(n, "mq_subset");
  check_subset_size(g);
  // Group subsets by the sorted multiset of component sizes.
  std::map<std::vector<int>, long> weight;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto sizes = graph::component_sizes(g, mask);
    std::sort(sizes.begin(), sizes.end());
    weight[sizes] += (std::popcount(mask) % 2) ? -1 : 1;
  }
  std::map<int, Poly> qi;
  Poly out;
  for (const auto& [sizes, w] : weight) {
    if (w == 0) continue;
    Poly term(w);
    for (int s : sizes) {
      auto it = qi.find(s);
      if (it == qi.end()) it = qi.emplace(s, polyq::qint(n, q_power(s))).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

Poly mq_complete(int k, int n) {
  check_n(n, "mq_complete");
  if (k < 1) throw DomainError("mq_complete: k must be positive");
  if (k > n) return Poly();
  long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return polyq::qbinom(n, k, q_power(1)) * q_power(k * (k - 1) / 2) * polyq::Rational(fact);
}

namespace {

// counts[(c(A), |A|)]
std::map<std::pair<int, int>, long> component_edge_counts(const Multigraph& g) {
  check_subset_size(g);
  std::map<std::pair<int, int>, long> counts;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    ++counts[{graph::component_count(g, mask), std::popcount(mask)}];
  return counts;
}

}  // namespace

Poly bichromate(const Multigraph& g) {
  Poly out;
  for (const auto& [key, cnt] : component_edge_counts(g)) {
    polyq::Exponents e{};
    e[static_cast<std::size_t>(Var::a)] = key.first;
    e[static_cast<std::size_t>(Var::b)] = key.second;
    out.add_term(e, polyq::Rational(cnt));
  }
  return out;
}

Poly tutte(const Multigraph& g, TutteForm form) {
  const int k = g.vertex_count();
  const int cE = graph::component_count(g, g.edge_count() == 64 ? ~std::uint64_t{0}
                                                                  : (std::uint64_t{1} << g.edge_count()) - 1);
  const int rE = k - cE;
  const bool t = form == TutteForm::tutte;
  const Poly first = t ? polyq::var(Var::x) - Poly(1L) : polyq::var(Var::u);
  const Poly second = t ? polyq::var(Var::y) - Poly(1L) : polyq::var(Var::v);
  Poly out;
  for (const auto& [key, cnt] : component_edge_counts(g)) {
    int rA = k - key.first;
    out += polyq::pow(first, static_cast<unsigned>(rE - rA)) *
           polyq::pow(second, static_cast<unsigned>(key.second - rA)) * polyq::Rational(cnt);
  }
  return out;
}

Poly q_bichromate(const Multigraph& g, int y) {
  if (y < 1) throw DomainError("q_bichromate: y must be positive");
  check_subset_size(g);
  std::map<std::pair<int, std::vector<int>>, long> weight;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto sizes = graph::component_sizes(g, mask);
    std::sort(sizes.begin(), sizes.end());
    ++weight[{std::popcount(mask), sizes}];
  }
  std::map<int, Poly> qi;
  Poly out;
  for (const auto& [key, w] : weight) {
    Poly term = Poly::monomial(Var::x, key.first, w);
    for (int s : key.second) {
      auto it = qi.find(s);
      if (it == qi.end()) it = qi.emplace(s, polyq::qint(y, q_power(s))).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace qgraph::qchrom
