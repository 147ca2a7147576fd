#include <algorithm>
#include <queue>

#include "qgraph/chordal.hpp"
#include "qgraph/errors.hpp"

namespace qgraph::chordal {

namespace {

using Adj = std::vector<std::vector<bool>>;

Adj adjacency(const Multigraph& g) {
  if (g.has_loop()) throw DomainError("chordality test needs a graph without loops");
  if (g.has_parallel_edges()) throw DomainError("chordality test needs a graph without parallel edges");
  const auto k = static_cast<std::size_t>(g.vertex_count());
  Adj a(k + 1, std::vector<bool>(k + 1, false));
  for (const auto& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  return a;
}

std::vector<int> live_neighbours(const Adj& a, const std::vector<bool>& alive, int v) {
  std::vector<int> out;
  for (std::size_t u = 1; u < a.size(); ++u)
    if (alive[u] && a[static_cast<std::size_t>(v)][u]) out.push_back(static_cast<int>(u));
  return out;
}

bool is_clique(const Adj& a, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!a[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])]) return false;
  return true;
}

// Chordless cycle through v, a, b: shortest a-b path avoiding N[v] except a, b.
std::vector<int> cycle_through(const Adj& adj, const std::vector<bool>& alive, int v, int a, int b) {
  const std::size_t k = adj.size() - 1;
  std::vector<bool> blocked(k + 1, false);
  blocked[static_cast<std::size_t>(v)] = true;
  for (int u : live_neighbours(adj, alive, v))
    if (u != a && u != b) blocked[static_cast<std::size_t>(u)] = true;
  std::vector<int> prev(k + 1, 0);
  std::queue<int> todo;
  todo.push(a);
  prev[static_cast<std::size_t>(a)] = a;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    if (x == b) break;
    for (int y : live_neighbours(adj, alive, x)) {
      if (blocked[static_cast<std::size_t>(y)] || prev[static_cast<std::size_t>(y)]) continue;
      prev[static_cast<std::size_t>(y)] = x;
      todo.push(y);
    }
  }
  if (!prev[static_cast<std::size_t>(b)]) return {};
  std::vector<int> cyc{v};
  std::vector<int> path;
  for (int x = b; x != a; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  cyc.insert(cyc.end(), path.begin(), path.end());
  return cyc;
}

}  // namespace

PeoResult peo(const Multigraph& g) {
  auto adj = adjacency(g);
  const int k = g.vertex_count();
  std::vector<bool> alive(static_cast<std::size_t>(k) + 1, true);
  alive[0] = false;
  std::vector<int> rev_order, rev_m;
  for (int step = 0; step < k; ++step) {
    int pick = 0;
    std::vector<int> nb;
    for (int v = 1; v <= k && !pick; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      nb = live_neighbours(adj, alive, v);
      if (is_clique(adj, nb)) pick = v;
    }
    if (!pick) {
      PeoResult r;
      for (int v = 1; v <= k && r.cycle.empty(); ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        auto n = live_neighbours(adj, alive, v);
        for (std::size_t i = 0; i < n.size() && r.cycle.empty(); ++i)
          for (std::size_t j = i + 1; j < n.size() && r.cycle.empty(); ++j)
            if (!adj[static_cast<std::size_t>(n[i])][static_cast<std::size_t>(n[j])])
              r.cycle = cycle_through(adj, alive, v, n[i], n[j]);
      }
      return r;
    }
    alive[static_cast<std::size_t>(pick)] = false;
    rev_order.push_back(pick);
    rev_m.push_back(static_cast<int>(nb.size()));
  }
  PeoResult r;
  r.chordal = true;
  r.order.assign(rev_order.rbegin(), rev_order.rend());
  r.m.assign(rev_m.rbegin(), rev_m.rend());
  return r;
}

bool is_peo(const Multigraph& g, const std::vector<int>& order) {
  auto adj = adjacency(g);
  const int k = g.vertex_count();
  if (static_cast<int>(order.size()) != k) return false;
  std::vector<bool> alive(static_cast<std::size_t>(k) + 1, false), seen(static_cast<std::size_t>(k) + 1, false);
  for (int v : order) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
    alive[static_cast<std::size_t>(v)] = true;
    if (!is_clique(adj, live_neighbours(adj, alive, v))) return false;
  }
  return true;
}

}  // namespace qgraph::chordal
