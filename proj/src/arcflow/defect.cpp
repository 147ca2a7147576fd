#include <algorithm>
#include <set>

#include "qgraph/arcflow.hpp"
#include "qgraph/errors.hpp"

namespace qgraph::arcflow {

using polyq::Var;

namespace {

Poly t_pow(int e) { return Poly::monomial(Var::t, e); }

std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr std::size_t kMaxCopies = 64;

bool carried(const FlowConfiguration& c, int l, std::size_t copy) {
  return (c.carried[at(l) - 1] >> copy) & 1U;
}

void configs_rec(const ArcGraph& g, const Flow& f, const std::vector<std::uint64_t>& arriving, int i,
                 std::uint64_t prev, FlowConfiguration& cur, std::vector<FlowConfiguration>& out) {
  if (i > g.r() - 2) {
    out.push_back(cur);
    return;
  }
  const std::uint64_t pool = prev | arriving[at(i)];
  const int want = f.blue[at(i)];
  // Enumerate subsets of pool with `want` elements in increasing mask order.
  std::vector<int> bits;
  for (int b = 0; b < 64; ++b)
    if ((pool >> b) & 1U) bits.push_back(b);
  if (want > static_cast<int>(bits.size())) return;
  std::vector<bool> pick(bits.size(), false);
  std::fill(pick.end() - want, pick.end(), true);
  do {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
      if (pick[j]) s |= std::uint64_t{1} << bits[j];
    cur.carried[at(i) - 1] = s;
    configs_rec(g, f, arriving, i + 1, s, cur, out);
  } while (std::next_permutation(pick.begin(), pick.end()));
}

struct CatmmSearch {
  int n;
  std::vector<Copy> copies;
  std::vector<int> drop;
  std::vector<std::vector<std::size_t>> d1;  // copies counted by def1 of each copy
  std::vector<std::vector<std::size_t>> d2;
  std::vector<int> val;
  polyq::ExpCounter acc;

  bool clash(std::size_t a, std::size_t b) const {
    // Closed lifetimes [target, drop] overlap.
    return copies[a].target <= drop[b] && copies[b].target <= drop[a];
  }

  void run(std::size_t i) {
    if (i == copies.size()) {
      int e = 0;
      for (std::size_t c = 0; c < copies.size(); ++c) {
        e += val[c];
        for (std::size_t x : d1[c]) e -= val[x] < val[c];
        for (std::size_t x : d2[c]) e -= val[x] < val[c];
      }
      acc.add(e);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = !(val[j] == v && clash(i, j));
      if (!ok) continue;
      val[i] = v;
      run(i + 1);
    }
  }
};

}  // namespace

std::vector<Copy> red_copies(const ArcGraph& g, const Flow& f) {
  std::vector<Copy> out;
  for (int v = 1; v < g.r(); ++v) {
    int preceding = f.blue_in(v);
    for (int u : g.reduced_order(v))
      for (int k = 0; k < f.red[at(u)]; ++k) out.push_back({u, k, v, preceding++});
  }
  if (out.size() > kMaxCopies) throw DomainError("too many red copies for configuration enumeration");
  return out;
}

std::vector<FlowConfiguration> flow_configurations(const ArcGraph& g, const Flow& f) {
  auto copies = red_copies(g, f);
  std::vector<std::uint64_t> arriving(at(g.r()), 0);
  for (std::size_t i = 0; i < copies.size(); ++i) arriving[at(copies[i].target)] |= std::uint64_t{1} << i;
  FlowConfiguration cur{std::vector<std::uint64_t>(at(std::max(g.r() - 2, 0)), 0)};
  std::vector<FlowConfiguration> out;
  configs_rec(g, f, arriving, 1, 0, cur, out);
  return out;
}

std::vector<int> drop_vertices(const ArcGraph& g, const std::vector<Copy>& copies, const FlowConfiguration& c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    int l = copies[i].target;
    while (l <= g.r() - 2 && carried(c, l, i)) ++l;
    out.push_back(l);
  }
  return out;
}

std::vector<std::pair<FlowConfiguration, std::vector<int>>> admissible_pairs(const ArcGraph& g, const Flow& f, int n) {
  if (n < 1) throw DomainError("admissible_pairs: n must be positive");
  auto copies = red_copies(g, f);
  std::vector<std::pair<FlowConfiguration, std::vector<int>>> out;
  for (const auto& c : flow_configurations(g, f)) {
    auto drop = drop_vertices(g, copies, c);
    std::vector<int> val(copies.size(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < copies.size() && ok; ++a)
        for (std::size_t b = a + 1; b < copies.size() && ok; ++b)
          ok = !(val[a] == val[b] && copies[a].target <= drop[b] && copies[b].target <= drop[a]);
      if (ok) out.emplace_back(c, val);
      std::size_t i = 0;
      while (i < val.size() && ++val[i] == n) val[i++] = 0;
      if (i == val.size()) break;
    }
  }
  return out;
}

Poly catmm_flow_sum(const ArcGraph& g, const Flow& f, int n) {
  if (n < 1) throw DomainError("catmm_flow_sum: n must be positive");
  CatmmSearch s;
  s.n = n;
  s.copies = red_copies(g, f);
  const std::size_t m = s.copies.size();
  for (const auto& c : flow_configurations(g, f)) {
    s.drop = drop_vertices(g, s.copies, c);
    s.d1.assign(m, {});
    s.d2.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
      const int t = s.copies[i].target;
      for (std::size_t j = 0; j < i; ++j)
        if (s.copies[j].target == t) s.d1[i].push_back(j);
      // Blue units entering t are the copies carried past t-1.
      if (t >= 2)
        for (std::size_t j = 0; j < m; ++j)
          if (carried(c, t - 1, j)) s.d1[i].push_back(j);
      const int d = s.drop[i];
      if (d <= g.r() - 2)
        for (std::size_t j = 0; j < m; ++j)
          if (carried(c, d, j)) s.d2[i].push_back(j);
    }
    s.val.assign(m, 0);
    s.run(0);
  }
  return s.acc.to_poly(Var::t);
}

std::vector<WeightedDiagram> chord_diagrams(const ArcGraph& g, const Flow& f) {
  auto copies = red_copies(g, f);
  std::vector<WeightedDiagram> out;
  for (const auto& c : flow_configurations(g, f)) {
    auto drop = drop_vertices(g, copies, c);
    std::vector<std::vector<std::size_t>> ending(at(g.r()));
    for (std::size_t i = 0; i < copies.size(); ++i) ending[at(drop[i])].push_back(i);
    std::set<qchrom::ChordDiagram> seen;
    std::vector<qchrom::ChordDiagram> diagrams;
    // Odometer over the terminal permutations of every vertex group.
    while (true) {
      std::vector<qchrom::Chord> chords(copies.size());
      int pos = 0;
      std::size_t next = 0;
      for (int v = 1; v < g.r(); ++v) {
        for (; next < copies.size() && copies[next].target == v; ++next) {
          chords[next].start = pos++;
          chords[next].start_group = v;
        }
        for (std::size_t i : ending[at(v)]) {
          chords[i].end = pos++;
          chords[i].end_group = v;
        }
      }
      auto d = qchrom::ChordDiagram::from_chords(chords);
      if (seen.insert(d).second) diagrams.push_back(d);
      int v = 1;
      for (; v < g.r(); ++v)
        if (std::next_permutation(ending[at(v)].begin(), ending[at(v)].end())) break;
      if (v == g.r()) break;
    }
    const int deg = static_cast<int>(diagrams.size());
    for (auto& d : diagrams) out.push_back({std::move(d), deg});
  }
  return out;
}

Poly ma2_flow_sum(const ArcGraph& g, const Flow& f, int n) {
  if (n < 1) throw DomainError("ma2_flow_sum: n must be positive");
  Poly total;
  for (const auto& wd : chord_diagrams(g, f)) total += qchrom::mdef_chord(wd.diagram, n) * polyq::Rational(1, wd.deg);
  return total;
}

Poly z_nf(const ArcGraph& g, const Flow& f, int n, bool with_delta) {
  if (n < 1) throw DomainError("z_nf: n must be positive");
  const auto s = flow_stats(g, f);
  Poly w = t_pow(n * (s.fb_minus - s.fb_plus));
  for (const auto& c : red_copies(g, f)) {
    if (g.sign(c.source) < 0)
      w *= Poly(1L) - t_pow(1);
    else
      w *= (Poly(1L) - t_pow(-1)) * t_pow(-(n - 1 - c.preceding));
  }
  for (int v = 1; v < g.r(); ++v)
    if (g.sign(v) < 0) w *= t_pow(f.red[at(v)] * f.blue[at(v)]);
  if (with_delta) w *= t_pow(delta_flow(g, f));
  return w;
}

int delta_knot(const ArcGraph& g, int n) {
  if (!g.rot_knot()) throw ConfigError("delta(K,n) needs rotK");
  const int twice = n * n * g.writhe() + n * *g.rot_knot();
  if (twice % 2 != 0) throw DomainError("delta(K,n) is not an integer for n = " + std::to_string(n));
  return twice / 2;
}

Poly route_sum(const ArcGraph& g, int n, Route route, bool with_delta) {
  Poly total;
  for (const auto& f : enumerate_flows(g, n)) {
    Poly term;
    switch (route) {
      case Route::main:
        term = main_flow_weight(g, f, n);
        if (with_delta && !term.is_zero()) term *= t_pow(delta_flow(g, f));
        break;
      case Route::catmm:
        term = z_nf(g, f, n, with_delta) * catmm_flow_sum(g, f, n);
        break;
      case Route::ma2:
        term = z_nf(g, f, n, with_delta) * ma2_flow_sum(g, f, n);
        break;
    }
    total += term;
  }
  return total;
}

Poly colored_jones(const ArcGraph& g, int n, Route route) {
  if (!g.has_rot()) throw ConfigError("colored Jones needs rot decorations");
  const int dk = delta_knot(g, n);
  return t_pow(dk) * route_sum(g, n, route, true);
}

}  // namespace qgraph::arcflow
