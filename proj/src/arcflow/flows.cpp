#include <algorithm>

#include "qgraph/arcflow.hpp"
#include "qgraph/errors.hpp"

namespace qgraph::arcflow {

using polyq::Var;

namespace {

Poly t_pow(int e, long c = 1) { return Poly::monomial(Var::t, e, c); }

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<int> reduced_reds(const ArcGraph& g) {
  std::vector<int> out;
  for (int u = 1; u < g.r(); ++u)
    if (g.reduced_has_red(u)) out.push_back(u);
  return out;
}

template <class Fn>
void for_each_red_assignment(const ArcGraph& g, int cap, Fn&& fn) {
  auto reds = reduced_reds(g);
  std::vector<int> red(at(g.r()), 0);
  while (true) {
    fn(red);
    std::size_t i = 0;
    while (i < reds.size() && ++red[at(reds[i])] > cap) red[at(reds[i++])] = 0;
    if (i == reds.size()) break;
  }
}

}  // namespace

bool Flow::is_zero() const {
  return std::all_of(red.begin(), red.end(), [](int x) { return x == 0; }) &&
         std::all_of(blue.begin(), blue.end(), [](int x) { return x == 0; });
}

int Flow::max_at() const { return at.empty() ? 0 : *std::max_element(at.begin(), at.end()); }

std::string Flow::str() const {
  std::string s;
  for (std::size_t v = 1; v < blue.size(); ++v) {
    if (blue[v]) s += (s.empty() ? "" : " ") + std::string("b") + std::to_string(v) + "=" + std::to_string(blue[v]);
    if (red[v]) s += (s.empty() ? "" : " ") + std::string("r") + std::to_string(v) + "=" + std::to_string(red[v]);
  }
  return s.empty() ? "0" : s;
}

std::optional<Flow> flow_from_red(const ArcGraph& g, const std::vector<int>& red) {
  const int r = g.r();
  if (static_cast<int>(red.size()) != r) throw DomainError("red value vector must have size r");
  Flow f{red, std::vector<int>(at(r), 0), std::vector<int>(at(r), 0)};
  std::vector<int> in(at(r), 0);
  for (int u = 1; u < r; ++u) {
    if (red[at(u)] < 0) return std::nullopt;
    if (!g.reduced_has_red(u)) {
      if (red[at(u)] != 0) return std::nullopt;
      continue;
    }
    in[at(g.over(u))] += red[at(u)];
  }
  int prev = 0;
  for (int v = 1; v < r; ++v) {
    int b = prev + in[at(v)] - red[at(v)];
    if (b < 0) return std::nullopt;
    f.at[at(v)] = prev + in[at(v)];
    f.blue[at(v)] = b;
    prev = b;
  }
  if (r >= 2 && f.blue[at(r - 1)] != 0) return std::nullopt;
  return f;
}

std::vector<Flow> enumerate_flows(const ArcGraph& g, int n) {
  if (n < 1) throw DomainError("enumerate_flows: n must be positive");
  std::vector<Flow> out;
  for_each_red_assignment(g, n, [&](const std::vector<int>& red) {
    if (auto f = flow_from_red(g, red); f && f->max_at() <= n) out.push_back(*f);
  });
  return out;
}

std::vector<Flow> enumerate_flows_by_edge(const ArcGraph& g, int cap) {
  std::vector<Flow> out;
  for_each_red_assignment(g, cap, [&](const std::vector<int>& red) {
    if (auto f = flow_from_red(g, red)) out.push_back(*f);
  });
  return out;
}

int red_in(const ArcGraph& g, const Flow& f, int v) {
  int s = 0;
  for (int u : g.reduced_order(v)) s += f.red[at(u)];
  return s;
}

Poly flow_weight_beta(const ArcGraph& g, const Flow& f) {
  Poly w(1L);
  for (int v = 1; v < g.r(); ++v) {
    if (f.blue[at(v)]) w *= t_pow(-g.sign(v) * f.blue[at(v)]);
    if (f.red[at(v)]) w *= polyq::pow(Poly(1L) - t_pow(-g.sign(v)), static_cast<unsigned>(f.red[at(v)]));
  }
  return w;
}

int exc_flow(const ArcGraph& g, const Flow& f) {
  int exc = 0;
  for (int v = 1; v < g.r(); ++v) {
    if (!g.reduced_has_red(v) || f.blue[at(v)] == 0) continue;
    const int w = g.over(v);
    int before = f.blue_in(w);
    for (int u : g.reduced_order(w)) {
      if (u == v) break;
      before += f.red[at(u)];
    }
    exc += g.sign(v) * f.blue[at(v)] * before;
  }
  return exc;
}

int delta_flow(const ArcGraph& g, const Flow& f) {
  if (!g.has_rot()) throw ConfigError("delta(f) needs rot decorations");
  int rot = 0;
  for (int v = 1; v < g.r(); ++v) {
    rot += f.blue[at(v)] * g.rot({false, v});
    rot += f.red[at(v)] * g.rot({true, v});
  }
  return exc_flow(g, f) - rot;
}

Poly mult_t(const ArcGraph& g, const Flow& f) {
  Poly w(1L);
  for (int v = 1; v < g.r(); ++v) w *= polyq::qbinom(f.at[at(v)], f.blue[at(v)], t_pow(-g.sign(v)));
  return w;
}

Poly main_flow_weight(const ArcGraph& g, const Flow& f, int n) {
  if (n < 1) throw DomainError("main_flow_weight: n must be positive");
  Poly w = mult_t(g, f);
  for (int v = 1; v < g.r(); ++v) w *= t_pow(-g.sign(v) * n * f.blue[at(v)]);
  for (int v = 1; v < g.r(); ++v) {
    int before = f.blue_in(v);
    for (int u : g.reduced_order(v)) {
      for (int j = 0; j < f.red[at(u)]; ++j) w *= Poly(1L) - t_pow(-g.sign(u) * (n - j - before));
      before += f.red[at(u)];
    }
  }
  return w;
}

FlowStats flow_stats(const ArcGraph& g, const Flow& f) {
  FlowStats s;
  for (int v = 1; v < g.r(); ++v) {
    (g.sign(v) < 0 ? s.fb_minus : s.fb_plus) += f.blue[at(v)];
    (g.sign(v) < 0 ? s.fr_minus : s.fr_plus) += f.red[at(v)];
  }
  return s;
}

Digraph reduced_digraph(const ArcGraph& g) {
  Digraph h;
  h.vertices = g.r() - 1;
  for (int v = 1; v + 1 < g.r(); ++v) h.edges.push_back({v - 1, v, t_pow(-g.sign(v)), {false, v}});
  for (int u = 1; u < g.r(); ++u)
    if (g.reduced_has_red(u)) h.edges.push_back({u - 1, g.over(u) - 1, Poly(1L) - t_pow(-g.sign(u)), {true, u}});
  return h;
}

Digraph cabled_graph(const ArcGraph& g, int n) {
  if (n < 1) throw DomainError("cabled_graph: n must be positive");
  Digraph h;
  h.vertices = (g.r() - 1) * n;
  auto id = [n](int v, int j) { return (v - 1) * n + j - 1; };
  for (int v = 1; v + 1 < g.r(); ++v)
    for (int j = 1; j <= n; ++j) h.edges.push_back({id(v, j), id(v + 1, j), t_pow(-g.sign(v) * n), {false, v}});
  for (int u = 1; u < g.r(); ++u) {
    if (!g.reduced_has_red(u)) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Poly w = g.sign(u) < 0 ? t_pow(j - 1) * (Poly(1L) - t_pow(1)) : t_pow(-(n - j)) * (Poly(1L) - t_pow(-1));
        h.edges.push_back({id(u, i), id(g.over(u), j), w, {true, u}});
      }
  }
  return h;
}

namespace {

struct FamilySearch {
  const Digraph& h;
  std::vector<std::vector<int>> out_edges;
  std::vector<int> in_deg, out_deg, chosen;
  // Optional projection constraint: remaining count per base edge.
  std::map<EdgeKey, int>* remaining = nullptr;
  std::vector<std::vector<int>> found;

  explicit FamilySearch(const Digraph& g)
      : h(g), out_edges(at(g.vertices)), in_deg(at(g.vertices), 0), out_deg(at(g.vertices), 0) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) out_edges[at(g.edges[at(e)].from)].push_back(e);
  }

  void run(int v) {
    if (v == h.vertices) {
      for (int x = 0; x < h.vertices; ++x)
        if (in_deg[at(x)] != out_deg[at(x)]) return;
      if (remaining)
        for (const auto& [k, c] : *remaining)
          if (c != 0) return;
      found.push_back(chosen);
      return;
    }
    // Vertices below v are final for out-degree; their in-degree must already balance
    // unless a later vertex can still point into them.
    run(v + 1);
    for (int e : out_edges[at(v)]) {
      const auto& ed = h.edges[at(e)];
      if (in_deg[at(ed.to)] != 0) continue;
      if (remaining) {
        auto it = remaining->find(ed.base);
        if (it == remaining->end() || it->second == 0) continue;
        --it->second;
      }
      ++in_deg[at(ed.to)];
      out_deg[at(v)] = 1;
      chosen.push_back(e);
      run(v + 1);
      chosen.pop_back();
      out_deg[at(v)] = 0;
      --in_deg[at(ed.to)];
      if (remaining) ++(*remaining)[ed.base];
    }
  }
};

}  // namespace

std::vector<std::vector<int>> cycle_families(const Digraph& h) {
  FamilySearch s(h);
  s.run(0);
  return s.found;
}

Poly frst_fiber_sum(const ArcGraph& g, const Flow& f, int n) {
  Digraph h = cabled_graph(g, n);
  std::map<EdgeKey, int> remaining;
  for (int v = 1; v < g.r(); ++v) {
    if (v + 1 < g.r()) remaining[{false, v}] = f.blue[at(v)];
    if (g.reduced_has_red(v)) remaining[{true, v}] = f.red[at(v)];
  }
  FamilySearch s(h);
  s.remaining = &remaining;
  s.run(0);
  Poly total;
  for (const auto& fam : s.found) {
    Poly w(1L);
    for (int e : fam) w *= h.edges[at(e)].weight;
    total += w;
  }
  return total;
}

}  // namespace qgraph::arcflow
