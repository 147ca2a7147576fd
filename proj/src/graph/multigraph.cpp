#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/textio.hpp"

namespace qgraph::graph {

Multigraph::Multigraph(int vertex_count) : k_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
}

int Multigraph::add_edge(int u, int v) {
  if (u < 1 || u > k_ || v < 1 || v > k_) throw DomainError("edge endpoint out of range");
  edges_.push_back({std::min(u, v), std::max(u, v)});
  return edge_count() - 1;
}

bool Multigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_)
    if (!seen.insert({e.u, e.v}).second) return true;
  return false;
}

Multigraph Multigraph::complete(int k) {
  Multigraph g(k);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) g.add_edge(i, j);
  return g;
}

Multigraph Multigraph::path(int k) {
  Multigraph g(k);
  for (int i = 1; i < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph Multigraph::cycle(int k) {
  Multigraph g = path(k);
  if (k >= 2) g.add_edge(k, 1);
  return g;
}

Multigraph Multigraph::edgeless(int k) { return Multigraph(k); }

EdgeSubset::EdgeSubset(int size, std::uint64_t mask) : size_(size), mask_(mask) {
  if (size < 0 || size > 64) throw DomainError("edge subset size out of range");
  if (size < 64 && (mask >> size) != 0) throw DomainError("edge subset mask exceeds edge count");
}

EdgeSubset EdgeSubset::all(int size) {
  return EdgeSubset(size, size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
}

int EdgeSubset::count() const { return std::popcount(mask_); }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

UnionFind build(const Multigraph& g, std::uint64_t mask) {
  UnionFind uf(g.vertex_count());
  for (int id = 0; id < g.edge_count(); ++id)
    if ((mask >> id) & 1U) uf.unite(g.edge(id).u, g.edge(id).v);
  return uf;
}

void check(const Multigraph& g, const EdgeSubset& a) {
  if (a.size() != g.edge_count()) throw DomainError("edge subset size does not match the graph");
}

}  // namespace

std::vector<std::vector<int>> components(const Multigraph& g, const EdgeSubset& a) {
  check(g, a);
  UnionFind uf = build(g, a.mask());
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int r = uf.find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  return out;
}

std::vector<int> component_sizes(const Multigraph& g, std::uint64_t mask) {
  UnionFind uf = build(g, mask);
  std::vector<int> size(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<int> order;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int r = uf.find(v);
    if (size[static_cast<std::size_t>(r)]++ == 0) order.push_back(r);
  }
  std::vector<int> out;
  out.reserve(order.size());
  for (int r : order) out.push_back(size[static_cast<std::size_t>(r)]);
  return out;
}

int component_count(const Multigraph& g, std::uint64_t mask) {
  UnionFind uf = build(g, mask);
  int c = 0;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (uf.find(v) == v) ++c;
  return c;
}

int odd_degree_count(const Multigraph& g, const EdgeSubset& a) {
  check(g, a);
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    if (!a.contains(id)) continue;
    ++deg[static_cast<std::size_t>(g.edge(id).u)];
    ++deg[static_cast<std::size_t>(g.edge(id).v)];
  }
  return static_cast<int>(std::count_if(deg.begin() + 1, deg.end(), [](int d) { return d % 2 != 0; }));
}

Multigraph parse_graph(std::string_view text) {
  auto lines = textio::tokenize(text);
  if (lines.empty()) throw ParseError("graph: empty input", 1, 1);
  const auto& head = lines.front();
  if (head.tokens.front().text != "vertices") textio::fail(head, head.tokens.front(), "expected 'vertices'");
  textio::expect_count(head, 2);
  long k = textio::parse_int(head, head.tokens[1]);
  if (k < 1) textio::fail(head, head.tokens[1], "vertex count must be positive");
  Multigraph g(static_cast<int>(k));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    textio::expect_count(ln, 2);
    long u = textio::parse_int(ln, ln.tokens[0]);
    long v = textio::parse_int(ln, ln.tokens[1]);
    if (u < 1 || u > k) textio::fail(ln, ln.tokens[0], "vertex out of range");
    if (v < 1 || v > k) textio::fail(ln, ln.tokens[1], "vertex out of range");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Multigraph load_graph(const std::string& path) { return parse_graph(textio::read_file(path)); }

std::string to_text(const Multigraph& g) {
  std::string s = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) s += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return s;
}

}  // namespace qgraph::graph
