#include <algorithm>
#include <bit>
#include <map>
#include <queue>

#include "qgraph/errors.hpp"
#include "qgraph/knot.hpp"
#include "qgraph/qchrom.hpp"

namespace qgraph::knot {

using polyq::Var;

namespace {

Poly A_pow(int e, long c = 1) { return Poly::monomial(Var::A, e, c); }

// d = -A^2 - A^{-2}
Poly loop_value() { return A_pow(2, -1) + A_pow(-2, -1); }

// (-A)^{-3W}
Poly writhe_factor(int w) { return A_pow(-3 * w, (w % 2) ? -1 : 1); }

struct DartIndex {
  // partner[4*x + i] = dart sharing the arc label of dart (x, i)
  std::vector<int> partner;
};

DartIndex dart_index(const KnotPD& k) {
  const int r = k.size();
  std::map<int, std::vector<int>> by_label;
  for (int x = 0; x < r; ++x)
    for (int i = 0; i < 4; ++i) by_label[k.crossing(x).arm[static_cast<std::size_t>(i)]].push_back(4 * x + i);
  DartIndex d{std::vector<int>(static_cast<std::size_t>(4 * r))};
  for (const auto& [l, ds] : by_label) {
    d.partner[static_cast<std::size_t>(ds[0])] = ds[1];
    d.partner[static_cast<std::size_t>(ds[1])] = ds[0];
  }
  return d;
}

// face_of_corner[4*x + c]
std::vector<int> corner_faces(const KnotPD& k, std::vector<Face>* out) {
  const int r = k.size();
  auto di = dart_index(k);
  std::vector<int> face_of_dart(static_cast<std::size_t>(4 * r), -1);
  std::vector<int> face_of_corner(static_cast<std::size_t>(4 * r), -1);
  int nf = 0;
  for (int start = 0; start < 4 * r; ++start) {
    if (face_of_dart[static_cast<std::size_t>(start)] >= 0) continue;
    Face f{nf, {}, {}};
    int d = start;
    do {
      face_of_dart[static_cast<std::size_t>(d)] = nf;
      f.labels.push_back(k.crossing(d / 4).arm[static_cast<std::size_t>(d % 4)]);
      int p = di.partner[static_cast<std::size_t>(d)];
      int y = p / 4, j = p % 4;
      // Arriving on arm j of y, the face continues through corner j to arm j+1.
      face_of_corner[static_cast<std::size_t>(4 * y + j)] = nf;
      f.corners.emplace_back(y, j);
      d = 4 * y + (j + 1) % 4;
    } while (d != start);
    if (out) out->push_back(std::move(f));
    ++nf;
  }
  if (nf != r + 2)
    throw DomainError("diagram is not planar for the given rotation: " + std::to_string(nf) + " faces, expected " +
                      std::to_string(r + 2));
  return face_of_corner;
}

// colour[f] in {0 white, 1 black}
std::vector<int> checkerboard(const KnotPD& k, const std::vector<int>& face_of_corner, int outer) {
  const int r = k.size();
  const int nf = r + 2;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nf));
  for (int x = 0; x < r; ++x)
    for (int c = 0; c < 4; ++c) {
      int f1 = face_of_corner[static_cast<std::size_t>(4 * x + c)];
      int f2 = face_of_corner[static_cast<std::size_t>(4 * x + (c + 1) % 4)];
      adj[static_cast<std::size_t>(f1)].push_back(f2);
      adj[static_cast<std::size_t>(f2)].push_back(f1);
    }
  std::vector<int> colour(static_cast<std::size_t>(nf), -1);
  std::queue<int> todo;
  colour[static_cast<std::size_t>(outer)] = 0;
  todo.push(outer);
  while (!todo.empty()) {
    int f = todo.front();
    todo.pop();
    for (int g : adj[static_cast<std::size_t>(f)]) {
      if (g == f) throw DomainError("face meets itself across an arc; no checkerboard shading");
      if (colour[static_cast<std::size_t>(g)] < 0) {
        colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
        todo.push(g);
      } else if (colour[static_cast<std::size_t>(g)] == colour[static_cast<std::size_t>(f)]) {
        throw DomainError("no checkerboard shading");
      }
    }
  }
  return colour;
}

}  // namespace

std::vector<Face> faces(const KnotPD& k) {
  std::vector<Face> out;
  corner_faces(k, &out);
  return out;
}

MedianGraph median_graph(const KnotPD& k, int outer_face) {
  const int r = k.size();
  auto foc = corner_faces(k, nullptr);
  if (outer_face < 0 || outer_face >= r + 2) throw DomainError("invalid face id " + std::to_string(outer_face));
  auto colour = checkerboard(k, foc, outer_face);
  MedianGraph m;
  m.outer_face = outer_face;
  std::vector<int> vertex_of(static_cast<std::size_t>(r + 2), 0);
  for (int f = 0; f < r + 2; ++f)
    if (colour[static_cast<std::size_t>(f)] == 1) {
      m.black_faces.push_back(f);
      vertex_of[static_cast<std::size_t>(f)] = static_cast<int>(m.black_faces.size());
    }
  m.graph = graph::Multigraph(static_cast<int>(m.black_faces.size()));
  for (int x = 0; x < r; ++x) {
    // Corners 1 (b,c) and 3 (d,a) are merged by the A-smoothing.
    int c1 = foc[static_cast<std::size_t>(4 * x + 1)];
    bool odd_black = colour[static_cast<std::size_t>(c1)] == 1;
    int first = odd_black ? 1 : 0;
    int fa = foc[static_cast<std::size_t>(4 * x + first)];
    int fb = foc[static_cast<std::size_t>(4 * x + first + 2)];
    m.graph.add_edge(vertex_of[static_cast<std::size_t>(fa)], vertex_of[static_cast<std::size_t>(fb)]);
    m.b.push_back(odd_black ? 1 : -1);
  }
  return m;
}

graph::EdgeSubset state_edge_subset(const KnotPD& k, BracketState s, const MedianGraph& m) {
  if (m.graph.edge_count() != k.size()) throw DomainError("median graph does not belong to this diagram");
  graph::EdgeSubset e(k.size());
  for (int x = 0; x < k.size(); ++x) {
    bool a_smoothing = ((s >> x) & 1U) == 0;
    if (a_smoothing == (m.b[static_cast<std::size_t>(x)] > 0)) e.insert(x);
  }
  return e;
}

bool prop_mm_check(const KnotPD& k, int outer_face) {
  auto m = median_graph(k, outer_face);
  const int vm = m.graph.vertex_count();
  const BracketState total = BracketState{1} << k.size();
  for (BracketState s = 0; s < total; ++s) {
    auto e = state_edge_subset(k, s, m);
    int rhs = 2 * graph::component_count(m.graph, e.mask()) + e.count() - vm;
    if (loop_count(k, s) != rhs) return false;
  }
  return true;
}

Poly kauffman_f(const KnotPD& k) {
  const int r = k.size();
  const Poly d = loop_value();
  std::vector<Poly> dpow{Poly(1L)};
  std::map<std::pair<int, int>, long> counts;  // (loops, #A - #B)
  const BracketState total = BracketState{1} << r;
  for (BracketState s = 0; s < total; ++s) {
    int nb = std::popcount(s);
    ++counts[{loop_count(k, s), r - 2 * nb}];
  }
  Poly sum;
  for (const auto& [key, c] : counts) {
    while (static_cast<int>(dpow.size()) < key.first) dpow.push_back(dpow.back() * d);
    sum += dpow[static_cast<std::size_t>(key.first) - 1] * A_pow(key.second, c);
  }
  return writhe_factor(k.writhe()) * sum;
}

Poly bracket_to_jones(const Poly& f) {
  Poly out;
  for (const auto& [e, c] : f.terms()) {
    int ea = e[static_cast<std::size_t>(Var::A)];
    if (ea % 4 != 0) throw std::logic_error("bracket exponent " + std::to_string(ea) + " not divisible by 4");
    polyq::Exponents te = e;
    te[static_cast<std::size_t>(Var::A)] = 0;
    te[static_cast<std::size_t>(Var::t)] += -ea / 4;
    out.add_term(te, c);
  }
  return out;
}

Poly jones(const KnotPD& k) { return bracket_to_jones(kauffman_f(k)); }

Poly jones_via_bichromate(const KnotPD& k, int outer_face, BichromateRoute route) {
  auto m = median_graph(k, outer_face);
  const Poly d = loop_value();
  int bsum = 0;
  for (int b : m.b) bsum += b;
  Poly sum;
  if (route == BichromateRoute::kk) {
    const std::uint64_t total = std::uint64_t{1} << m.graph.edge_count();
    const Poly dd = d * d;
    std::vector<Poly> edge_factor;
    for (int b : m.b) edge_factor.push_back(d * A_pow(2 * b));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Poly term = polyq::pow(dd, static_cast<unsigned>(graph::component_count(m.graph, mask)));
      for (int e = 0; e < m.graph.edge_count(); ++e)
        if ((mask >> e) & 1U) term *= edge_factor[static_cast<std::size_t>(e)];
      sum += term;
    }
  } else {
    int b0 = m.b.empty() ? 1 : m.b.front();
    for (int b : m.b)
      if (b != b0) throw DomainError("bichromate route needs a uniform Tait sign; use the subset route");
    Poly bich = qchrom::bichromate(m.graph);
    sum = polyq::compose(polyq::compose(bich, Var::a, d * d), Var::b, d * A_pow(2 * b0));
  }
  Poly scaled = writhe_factor(k.writhe()) * A_pow(-bsum) * sum;
  return polyq::exact_divide(scaled, polyq::pow(d, static_cast<unsigned>(m.graph.vertex_count() + 1)));
}

}  // namespace qgraph::knot
