#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/polyq.hpp"

namespace qgraph::knot {

using polyq::Poly;

// Arms a,b,c,d counterclockwise from the incoming under-strand; sign +1 means
// the over-strand runs d -> b, sign -1 means b -> d.
struct Crossing {
  int sign;
  std::array<int, 4> arm;
  int over_in() const { return sign > 0 ? 3 : 1; }
  int over_out() const { return sign > 0 ? 1 : 3; }
};

class KnotPD {
 public:
  static KnotPD from_crossings(std::vector<Crossing> xs);

  int size() const { return static_cast<int>(xs_.size()); }
  const Crossing& crossing(int i) const { return xs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Crossing>& crossings() const { return xs_; }
  int writhe() const;
  std::string to_text() const;

 private:
  std::vector<Crossing> xs_;
};

KnotPD parse_pd(std::string_view text);
KnotPD load_pd(const std::string& path);
KnotPD mirror(const KnotPD& k);
KnotPD connected_sum(const KnotPD& k1, const KnotPD& k2);

// Bit i set = B-smoothing at crossing i (pairs a-d, b-c); clear = A-smoothing
// (pairs a-b, c-d).
using BracketState = std::uint64_t;
inline constexpr int kMaxStateCrossings = 24;

int loop_count(const KnotPD& k, BracketState s);

struct Face {
  int id;
  std::vector<std::pair<int, int>> corners;  // (crossing, corner c between arms c and c+1)
  std::vector<int> labels;                   // boundary arc labels in traversal order
};

// Faces of the diagram traced from the counterclockwise rotation system; ids
// ordered by first dart. Throws DomainError unless there are r+2 faces.
std::vector<Face> faces(const KnotPD& k);

struct MedianGraph {
  graph::Multigraph graph;      // edge id = crossing index
  std::vector<int> b;           // Tait sign per edge
  std::vector<int> black_faces; // face id of vertex i+1
  int outer_face = 0;
};

// Checkerboard shading with outer_face white. b(e) = +1 when the A-smoothing
// joins the black corners at that crossing.
MedianGraph median_graph(const KnotPD& k, int outer_face);
graph::EdgeSubset state_edge_subset(const KnotPD& k, BracketState s, const MedianGraph& m);
bool prop_mm_check(const KnotPD& k, int outer_face);

// Normalized bracket (-A)^{-3W} sum_s d^{S(s)-1} A^{#A-#B}, d = -A^2 - A^{-2}.
Poly kauffman_f(const KnotPD& k);
// A^{-4e} -> t^e; throws std::logic_error on an exponent not divisible by 4.
Poly bracket_to_jones(const Poly& f);
Poly jones(const KnotPD& k);

enum class BichromateRoute { kk, kkk };
// The same bracket through the median graph: subset sum (kk) or the two-variable
// bichromate with uniform Tait sign (kkk).
Poly jones_via_bichromate(const KnotPD& k, int outer_face, BichromateRoute route);

}  // namespace qgraph::knot
