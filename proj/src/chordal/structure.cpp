#include <algorithm>
#include <set>

#include "qgraph/chordal.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/textio.hpp"

namespace qgraph::chordal {

using polyq::Var;

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

bool is_ancestor(const TreeSpec& s, int i, int j) {
  for (int w = s.parent[at(j)]; w; w = s.parent[at(w)])
    if (w == i) return true;
  return false;
}

// Nodes with every parent listed before its children.
std::vector<int> top_down(const TreeSpec& s) {
  std::vector<int> order{s.root()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w = 1; w <= s.nodes(); ++w)
      if (s.parent[at(w)] == order[i]) order.push_back(w);
  return order;
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int TreeSpec::root() const {
  for (int w = 1; w <= nodes(); ++w)
    if (parent[at(w)] == 0) return w;
  return 0;
}

int TreeSpec::vertices() const {
  int k = 0;
  for (int w = 1; w <= nodes(); ++w) k += static_cast<int>(A[at(w)].size());
  return k;
}

std::vector<int> TreeSpec::path(int w) const {
  std::vector<int> out;
  for (int x = parent[at(w)]; x; x = parent[at(x)]) out.push_back(x);
  return out;
}

bool property4(const TreeSpec& s) {
  for (int i = 1; i <= s.nodes(); ++i)
    for (int j = 1; j <= s.nodes(); ++j) {
      if (!is_ancestor(s, i, j)) continue;
      // every label at an ancestor is below every label at its descendant
      if (!s.A[at(i)].empty() && !s.A[at(j)].empty() && s.A[at(i)].back() > s.A[at(j)].front()) return false;
    }
  return true;
}

void validate(const TreeSpec& s) {
  const int n = s.nodes();
  if (n < 1) throw DomainError("tree needs at least one node");
  if (s.A.size() != s.parent.size() || s.b.size() != s.parent.size()) throw DomainError("tree data size mismatch");
  int roots = 0;
  for (int w = 1; w <= n; ++w) {
    int p = s.parent[at(w)];
    if (p < 0 || p > n || p == w) throw DomainError("node " + std::to_string(w) + " has invalid parent");
    if (p == 0) ++roots;
  }
  if (roots != 1) throw DomainError("tree needs exactly one root");
  for (int w = 1; w <= n; ++w) {
    int steps = 0;
    for (int x = w; x; x = s.parent[at(x)])
      if (++steps > n) throw DomainError("parent list contains a cycle");
  }
  std::vector<int> all;
  for (int w = 1; w <= n; ++w) {
    if (!std::is_sorted(s.A[at(w)].begin(), s.A[at(w)].end())) throw DomainError("A sets must be sorted");
    all.insert(all.end(), s.A[at(w)].begin(), s.A[at(w)].end());
    if (s.b[at(w)] < 0) throw DomainError("b must be nonnegative");
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) throw DomainError("A sets must partition 1..k");
  if (s.b[at(s.root())] != 0) throw DomainError("b of the root must be 0");
  if (!property4(s)) throw DomainError("ancestors must carry smaller labels than their descendants");
}

TreeSpec parse_tree(std::string_view text) {
  auto lines = textio::tokenize(text);
  if (lines.empty()) throw ParseError("tree: empty input", 1, 1);
  const auto& head = lines.front();
  if (head.tokens.front().text != "tree") textio::fail(head, head.tokens.front(), "expected 'tree'");
  textio::expect_at_least(head, 2);
  TreeSpec s;
  s.parent.push_back(0);
  for (std::size_t i = 1; i < head.tokens.size(); ++i)
    s.parent.push_back(static_cast<int>(textio::parse_int(head, head.tokens[i])));
  const int n = s.nodes();
  s.A.assign(at(n) + 1, {});
  s.b.assign(at(n) + 1, 0);
  std::vector<bool> seen_a(at(n) + 1, false), seen_b(at(n) + 1, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& kw = ln.tokens.front();
    if (kw.text != "A" && kw.text != "b") textio::fail(ln, kw, "expected 'A' or 'b'");
    textio::expect_at_least(ln, 2);
    long w = textio::parse_int(ln, ln.tokens[1]);
    if (w < 1 || w > n) textio::fail(ln, ln.tokens[1], "node out of range");
    if (kw.text == "A") {
      if (seen_a[at(static_cast<int>(w))]) textio::fail(ln, kw, "duplicate A line");
      seen_a[at(static_cast<int>(w))] = true;
      for (std::size_t j = 2; j < ln.tokens.size(); ++j)
        s.A[at(static_cast<int>(w))].push_back(static_cast<int>(textio::parse_int(ln, ln.tokens[j])));
      std::sort(s.A[at(static_cast<int>(w))].begin(), s.A[at(static_cast<int>(w))].end());
    } else {
      textio::expect_count(ln, 3);
      if (seen_b[at(static_cast<int>(w))]) textio::fail(ln, kw, "duplicate b line");
      seen_b[at(static_cast<int>(w))] = true;
      s.b[at(static_cast<int>(w))] = static_cast<int>(textio::parse_int(ln, ln.tokens[2]));
    }
  }
  try {
    validate(s);
  } catch (const DomainError& e) {
    throw ParseError(std::string("tree: ") + e.what(), head.number, 1);
  }
  return s;
}

TreeSpec load_tree(const std::string& path) { return parse_tree(textio::read_file(path)); }

std::string to_text(const TreeSpec& s) {
  std::string out = "tree";
  for (int w = 1; w <= s.nodes(); ++w) out += " " + std::to_string(s.parent[at(w)]);
  out += "\n";
  for (int w = 1; w <= s.nodes(); ++w) {
    out += "A " + std::to_string(w);
    for (int x : s.A[at(w)]) out += " " + std::to_string(x);
    out += "\nb " + std::to_string(w) + " " + std::to_string(s.b[at(w)]) + "\n";
  }
  return out;
}

std::uint64_t structure_count(const TreeSpec& s) {
  std::uint64_t c = 1;
  for (int w = 1; w <= s.nodes(); ++w) {
    int p = s.parent[at(w)];
    if (!p) continue;
    c *= binom(s.A[at(p)].size() + static_cast<std::uint64_t>(s.b[at(p)]), static_cast<std::uint64_t>(s.b[at(w)]));
  }
  return c;
}

bool property2(const TreeStructure& s) {
  const auto& t = s.spec;
  if (!s.B[at(t.root())].empty()) return false;
  for (int w = 1; w <= t.nodes(); ++w)
    for (int x : s.B[at(w)]) {
      bool found = false;
      for (int a : t.path(w)) found = found || contains(t.A[at(a)], x);
      if (!found) return false;
    }
  return true;
}

bool property3(const TreeStructure& s) {
  const auto& t = s.spec;
  const int n = t.nodes();
  for (int j = 1; j <= n; ++j)
    for (int i : t.path(j))
      for (int jp : t.path(j)) {
        if (!is_ancestor(t, i, jp)) continue;
        for (int x : s.B[at(j)])
          if (contains(t.A[at(i)], x) && !contains(s.B[at(jp)], x)) return false;
      }
  return true;
}

StructureList tree_structures(const TreeSpec& spec) {
  validate(spec);
  StructureList out;
  const auto order = top_down(spec);
  for (int w : order) {
    int p = spec.parent[at(w)];
    if (p && spec.b[at(w)] > static_cast<int>(spec.A[at(p)].size()) + spec.b[at(p)]) {
      out.warning = "b_" + std::to_string(w) + " = " + std::to_string(spec.b[at(w)]) +
                    " exceeds a + b of its parent; no tree structure exists";
      return out;
    }
  }
  TreeStructure cur{spec, std::vector<std::vector<int>>(at(spec.nodes()) + 1)};
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      if (property2(cur) && property3(cur)) out.structures.push_back(cur);
      return;
    }
    const int w = order[idx];
    const int p = spec.parent[at(w)];
    if (!p) {
      cur.B[at(w)].clear();
      self(self, idx + 1);
      return;
    }
    const auto pool = merged(spec.A[at(p)], cur.B[at(p)]);
    const auto want = static_cast<std::size_t>(spec.b[at(w)]);
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(want), true);
    do {
      cur.B[at(w)].clear();
      for (std::size_t j = 0; j < pool.size(); ++j)
        if (pick[j]) cur.B[at(w)].push_back(pool[j]);
      self(self, idx + 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  };
  rec(rec, 0);
  return out;
}

Multigraph graph_of_structure(const TreeStructure& s) {
  const auto& t = s.spec;
  std::set<std::pair<int, int>> edges;
  for (int w = 1; w <= t.nodes(); ++w) {
    auto c = merged(t.A[at(w)], s.B[at(w)]);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace(c[i], c[j]);
  }
  Multigraph g(t.vertices());
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<int> m_values(const TreeSpec& s) {
  std::vector<int> m(at(s.vertices()) + 1, 0);
  for (int w = 1; w <= s.nodes(); ++w)
    for (std::size_t i = 0; i < s.A[at(w)].size(); ++i) m[at(s.A[at(w)][i])] = s.b[at(w)] + static_cast<int>(i);
  return m;
}

namespace {

struct ColourSearch {
  int z;
  std::vector<std::vector<int>> earlier;  // earlier neighbours in G(S)
  std::vector<std::vector<int>> home;     // earlier members of the home clique
  std::vector<int> val;
  std::vector<std::int64_t> defected, plain;

  void run(std::size_t x, int sd, int sp) {
    if (x == val.size()) {
      ++defected[at(sd)];
      ++plain[at(sp)];
      return;
    }
    for (int v = 0; v < z; ++v) {
      bool ok = true;
      for (int y : earlier[x]) ok = ok && val[at(y)] != v;
      if (!ok) continue;
      int def = 0;
      for (int y : home[x]) def += val[at(y)] < v;
      val[x] = v;
      run(x + 1, sd + v - def, sp + v);
    }
  }
};

Poly histogram(const std::vector<std::int64_t>& h) {
  Poly p;
  for (std::size_t e = 0; e < h.size(); ++e)
    if (h[e]) p += Poly::monomial(Var::q, static_cast<int>(e), static_cast<long>(h[e]));
  return p;
}

}  // namespace

Poly m_product(const TreeSpec& s, int z) {
  auto m = m_values(s);
  const Poly q = polyq::var(Var::q);
  Poly r(1L);
  for (int x = 1; x <= s.vertices(); ++x) r *= polyq::qint(z - m[at(x)], q);
  return r;
}

std::pair<Poly, Poly> colouring_sums(const TreeStructure& s, int z) {
  if (z < 1) throw DomainError("z must be positive");
  const auto& t = s.spec;
  const int k = t.vertices();
  // Vertices are processed in label order; slot x-1 holds label x.
  ColourSearch c;
  c.z = z;
  c.earlier.assign(at(k), {});
  c.home.assign(at(k), {});
  auto g = graph_of_structure(s);
  for (const auto& e : g.edges()) c.earlier[at(std::max(e.u, e.v) - 1)].push_back(std::min(e.u, e.v) - 1);
  for (int w = 1; w <= t.nodes(); ++w) {
    auto clique = merged(t.A[at(w)], s.B[at(w)]);
    for (int x : t.A[at(w)])
      for (int y : clique)
        if (y < x) c.home[at(x - 1)].push_back(y - 1);
  }
  c.val.assign(at(k), 0);
  c.defected.assign(at(k * (z - 1)) + 1, 0);
  c.plain.assign(at(k * (z - 1)) + 1, 0);
  c.run(0, 0, 0);
  return {histogram(c.defected), histogram(c.plain)};
}

std::pair<Poly, Poly> str2_pair(const TreeStructure& s, int z) {
  return {colouring_sums(s, z).first, m_product(s.spec, z)};
}

Poly structure_weight(const TreeSpec& s) {
  const Poly qinv = Poly::monomial(Var::q, -1);
  Poly c(1L);
  for (int w = 1; w <= s.nodes(); ++w)
    for (int j = 1; j <= static_cast<int>(s.A[at(w)].size()); ++j)
      c *= polyq::qint(s.b[at(w)] + j, qinv) * polyq::Rational(1, s.b[at(w)] + j);
  return c;
}

std::pair<Poly, Poly> str20_pair(const TreeSpec& s, int z) {
  auto list = tree_structures(s);
  Poly lhs;
  for (const auto& st : list.structures) lhs += colouring_sums(st, z).second;
  lhs *= structure_weight(s);
  Poly rhs = m_product(s, z) * Poly(static_cast<long>(structure_count(s)));
  return {lhs, rhs};
}

}  // namespace qgraph::chordal
