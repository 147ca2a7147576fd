#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgraph::graph {

struct Edge {
  int u;
  int v;
  bool is_loop() const { return u == v; }
};

// Undirected multigraph on vertices 1..k. Edge ids are 0..m-1 in insertion order.
class Multigraph {
 public:
  explicit Multigraph(int vertex_count = 0);

  int add_edge(int u, int v);
  int vertex_count() const { return k_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_loop() const;
  bool has_parallel_edges() const;

  static Multigraph complete(int k);
  static Multigraph path(int k);
  static Multigraph cycle(int k);
  static Multigraph edgeless(int k);

 private:
  int k_;
  std::vector<Edge> edges_;
};

// Bitmask over edge ids; bit i set means edge i is in the subset.
class EdgeSubset {
 public:
  EdgeSubset(int size, std::uint64_t mask = 0);
  static EdgeSubset all(int size);

  int size() const { return size_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int id) const { return (mask_ >> id) & 1U; }
  int count() const;
  void insert(int id) { mask_ |= std::uint64_t{1} << id; }
  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  int size_;
  std::uint64_t mask_;
};

inline constexpr int kMaxSubsetEdges = 40;

// Connected components of (V, a), each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Multigraph& g, const EdgeSubset& a);
// Component sizes only; same order as components().
std::vector<int> component_sizes(const Multigraph& g, std::uint64_t mask);
int component_count(const Multigraph& g, std::uint64_t mask);
// Number of odd-degree vertices of (V, a); a loop adds 2 to its vertex.
int odd_degree_count(const Multigraph& g, const EdgeSubset& a);

// "vertices k" followed by "u v" lines; '#' comments.
Multigraph parse_graph(std::string_view text);
Multigraph load_graph(const std::string& path);
std::string to_text(const Multigraph& g);

}  // namespace qgraph::graph
