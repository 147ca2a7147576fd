#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/polyq.hpp"

namespace qgraph::chordal {

using graph::Multigraph;
using polyq::Poly;

struct PeoResult {
  bool chordal = false;
  std::vector<int> order;  // x_1..x_k; x_i simplicial among x_1..x_i
  std::vector<int> m;      // m[i] for x_{i+1}
  std::vector<int> cycle;  // chordless cycle of length >= 4 when not chordal
};
PeoResult peo(const Multigraph& g);
// True iff order is a perfect elimination order of g.
bool is_peo(const Multigraph& g, const std::vector<int>& order);

// Rooted tree on nodes 1..N with per-node A_w (partition of 1..k) and b_w.
// Ancestors carry smaller labels than their descendants.
struct TreeSpec {
  std::vector<int> parent;             // parent[w], 0 for the root; index 0 unused
  std::vector<std::vector<int>> A;     // index 0 unused
  std::vector<int> b;                  // index 0 unused
  int nodes() const { return static_cast<int>(parent.size()) - 1; }
  int root() const;
  int vertices() const;
  // Ancestors of w, nearest first.
  std::vector<int> path(int w) const;
};

void validate(const TreeSpec& s);
TreeSpec parse_tree(std::string_view text);
TreeSpec load_tree(const std::string& path);
std::string to_text(const TreeSpec& s);

struct TreeStructure {
  TreeSpec spec;
  std::vector<std::vector<int>> B;  // index 0 unused, each sorted
};

struct StructureList {
  std::vector<TreeStructure> structures;
  std::optional<std::string> warning;  // set when some b_w cannot be met
};
StructureList tree_structures(const TreeSpec& s);
// prod over non-root w of binom(a_p(w) + b_p(w), b_w).
std::uint64_t structure_count(const TreeSpec& s);

// Properties 2-4 of a tree structure as stated (4 with ancestors smaller).
bool property2(const TreeStructure& s);
bool property3(const TreeStructure& s);
bool property4(const TreeSpec& s);

Multigraph graph_of_structure(const TreeStructure& s);
// m[x] for x = 1..k (index 0 unused).
std::vector<int> m_values(const TreeSpec& s);

// prod_x (z - m(x))_q
Poly m_product(const TreeSpec& s, int z);
// prod_w prod_{j=1..a_w} (b_w + j)_{q^-1} / (b_w + j)
Poly structure_weight(const TreeSpec& s);

// Defected colouring sum vs prod_x (z - m(x))_q.
std::pair<Poly, Poly> str2_pair(const TreeStructure& s, int z);
// Structure sum with (b_w + j)_{q^-1}/(b_w + j) weights vs count * prod_x (z - m(x))_q.
std::pair<Poly, Poly> str20_pair(const TreeSpec& s, int z);

// Fast sums on a structure: proper colourings by {0..z-1} in label order,
// returning (defected, plain) exponent histograms as polynomials in q.
std::pair<Poly, Poly> colouring_sums(const TreeStructure& s, int z);

struct GridReport {
  long instances = 0;
  long structures = 0;
  long count_failures = 0;
  long str2_failures = 0;
  long str20_failures = 0;
  long invariance_failures = 0;
  long graph_failures = 0;  // G(S) not chordal
  std::string first_str20_failure;
};
// Trees up to max_nodes, 1 <= a_w <= max_a, 0 <= b_w <= max_b, 1 <= z <= max_z.
GridReport run_grid(int max_nodes, int max_a, int max_b, int max_z, unsigned threads = 0);

}  // namespace qgraph::chordal
