#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgraph/knot.hpp"
#include "qgraph/polyq.hpp"
#include "qgraph/qchrom.hpp"

namespace qgraph::arcflow {

using polyq::Poly;

// Blue edge i runs i -> i+1 (mod r); red edge i leaves vertex i.
struct EdgeKey {
  bool red;
  int index;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
  std::string str() const { return std::string(red ? "r " : "b ") + std::to_string(index); }
};

struct CrossingData {
  int sign;
  int over;  // target of the red edge leaving this vertex
};

class ArcGraph {
 public:
  // red_orders[v] lists the sources of the red edges entering v in increasing
  // <_v order; vertices without an entry get ascending source order.
  static ArcGraph build(const std::vector<CrossingData>& crossings, const std::map<int, std::vector<int>>& red_orders,
                        std::optional<std::map<EdgeKey, int>> rot = std::nullopt,
                        std::optional<int> rot_knot = std::nullopt);

  int r() const { return static_cast<int>(sign_.size()) - 1; }
  int sign(int v) const { return sign_.at(static_cast<std::size_t>(v)); }
  int over(int u) const { return over_.at(static_cast<std::size_t>(u)); }
  const std::vector<int>& order(int v) const { return order_.at(static_cast<std::size_t>(v)); }
  int writhe() const;

  // Reduced graph G_K: vertex r deleted.
  bool reduced_has_red(int u) const { return u >= 1 && u < r() && over(u) != r(); }
  std::vector<int> reduced_order(int v) const;

  bool has_rot() const { return rot_.has_value(); }
  int rot(EdgeKey e) const;
  std::optional<int> rot_knot() const { return rot_knot_; }
  ArcGraph with_rot(std::map<EdgeKey, int> rot, int rot_knot) const;

  std::string to_text() const;

 private:
  std::vector<int> sign_;  // 1-based
  std::vector<int> over_;
  std::vector<std::vector<int>> order_;
  std::optional<std::map<EdgeKey, int>> rot_;
  std::optional<int> rot_knot_;
};

ArcGraph parse_arc(std::string_view text);
ArcGraph load_arc(const std::string& path);
// Vertices numbered by under-crossings along the knot, starting after the
// under-passage of crossing 0 of the PD (which becomes vertex r).
ArcGraph arcgraph_from_pd(const knot::KnotPD& k);

// Flow on the reduced graph. Vectors are indexed by vertex 1..r-1.
struct Flow {
  std::vector<int> red;   // red[u]: value on the red edge leaving u (0 if absent)
  std::vector<int> blue;  // blue[v]: value on v -> v+1; blue[r-1] = 0
  std::vector<int> at;    // f(v)
  int blue_in(int v) const { return v >= 2 ? blue[static_cast<std::size_t>(v) - 1] : 0; }
  bool is_zero() const;
  int max_at() const;
  std::string str() const;
  friend bool operator==(const Flow&, const Flow&) = default;
};

// Completes red values to a flow by conservation; nullopt if impossible.
std::optional<Flow> flow_from_red(const ArcGraph& g, const std::vector<int>& red);
// All flows with f(v) <= n.
std::vector<Flow> enumerate_flows(const ArcGraph& g, int n);
// All flows with every red value <= cap, no vertex bound.
std::vector<Flow> enumerate_flows_by_edge(const ArcGraph& g, int cap);
// Red in-flow at v (blue excluded).
int red_in(const ArcGraph& g, const Flow& f, int v);

Poly flow_weight_beta(const ArcGraph& g, const Flow& f);
int exc_flow(const ArcGraph& g, const Flow& f);
int delta_flow(const ArcGraph& g, const Flow& f);
Poly mult_t(const ArcGraph& g, const Flow& f);
// Theorem weight without the t^{delta(f)} factor.
Poly main_flow_weight(const ArcGraph& g, const Flow& f, int n);

struct FlowStats {
  int fb_minus = 0, fb_plus = 0;  // blue flow leaving -/+ vertices
  int fr_minus = 0, fr_plus = 0;  // red flow leaving -/+ vertices
};
FlowStats flow_stats(const ArcGraph& g, const Flow& f);

struct WeightedEdge {
  int from;
  int to;
  Poly weight;
  EdgeKey base;
};

struct Digraph {
  int vertices = 0;
  std::vector<WeightedEdge> edges;
};

// Cabled reduced graph; vertex (v, j) is (v-1)*n + j - 1.
Digraph cabled_graph(const ArcGraph& g, int n);
// Reduced graph itself as a weighted digraph (vertex v is v-1).
Digraph reduced_digraph(const ArcGraph& g);
// Edge-index sets in which every vertex has in-degree = out-degree <= 1.
std::vector<std::vector<int>> cycle_families(const Digraph& h);
// Sum of beta over cycle families of the cabled graph projecting onto f.
Poly frst_fiber_sum(const ArcGraph& g, const Flow& f, int n);

// One copy of a red edge: the k-th unit on the red edge leaving source,
// entering target. Copies are listed by target, then by <_target.
struct Copy {
  int source;
  int index;
  int target;
  int preceding;  // |P(f,e)|: blue in-flow at target plus earlier copies there
};
std::vector<Copy> red_copies(const ArcGraph& g, const Flow& f);

// C_1..C_{r-2} as bitmasks over red_copies indices.
struct FlowConfiguration {
  std::vector<std::uint64_t> carried;
  friend bool operator==(const FlowConfiguration&, const FlowConfiguration&) = default;
};
std::vector<FlowConfiguration> flow_configurations(const ArcGraph& g, const Flow& f);
// Smallest l >= target with the copy not in C_l (r-1 if carried to the end).
std::vector<int> drop_vertices(const ArcGraph& g, const std::vector<Copy>& copies, const FlowConfiguration& c);

std::vector<std::pair<FlowConfiguration, std::vector<int>>> admissible_pairs(const ArcGraph& g, const Flow& f, int n);
Poly catmm_flow_sum(const ArcGraph& g, const Flow& f, int n);

struct WeightedDiagram {
  qchrom::ChordDiagram diagram;
  int deg;
};
std::vector<WeightedDiagram> chord_diagrams(const ArcGraph& g, const Flow& f);
Poly ma2_flow_sum(const ArcGraph& g, const Flow& f, int n);

// Prefactor of the chord-diagram formula; with_delta includes t^{delta(f)}.
Poly z_nf(const ArcGraph& g, const Flow& f, int n, bool with_delta = true);

enum class Route { ma2, catmm, main };
int delta_knot(const ArcGraph& g, int n);
// sum over flows of the route's per-flow term; with_delta adds t^{delta(f)}.
Poly route_sum(const ArcGraph& g, int n, Route route, bool with_delta);
Poly colored_jones(const ArcGraph& g, int n, Route route);

}  // namespace qgraph::arcflow
