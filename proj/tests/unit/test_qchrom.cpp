#include <doctest.h>

#include <functional>

#include "qgraph/errors.hpp"
#include "qgraph/qchrom.hpp"

using namespace qgraph;
using namespace qgraph::qchrom;
using polyq::Var;

namespace {

Poly P(const char* s) { return Poly::parse(s); }
const Poly q = polyq::var(Var::q);

Multigraph k2() {
  Multigraph g(2);
  g.add_edge(1, 2);
  return g;
}

// Chromatic polynomial value by deletion-contraction on an edge list.
long chromatic(int k, std::vector<std::pair<int, int>> edges, long z) {
  if (edges.empty()) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
  }
  auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v) return 0;
  long del = chromatic(k, edges, z);
  // contract v into u, then close the gap left by v
  auto f = [&](int x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  std::vector<std::pair<int, int>> c;
  for (auto [a, b] : edges) c.emplace_back(f(a), f(b));
  return del - chromatic(k - 1, c, z);
}

std::vector<std::pair<int, int>> edge_list(const Multigraph& g) {
  std::vector<std::pair<int, int>> e;
  for (const auto& x : g.edges()) e.emplace_back(x.u, x.v);
  return e;
}

}  // namespace

TEST_CASE("mq_direct") {
  CHECK(mq_direct(k2(), 2) == P("2*q"));
  CHECK(mq_direct(Multigraph(1), 3) == P("1 + q + q^2"));
  CHECK(mq_direct(Multigraph::complete(3), 2).is_zero());
}

TEST_CASE("mq_subset") {
  CHECK(mq_subset(k2(), 2) == P("2*q"));
  for (int k = 1; k <= 3; ++k)
    CHECK(mq_subset(Multigraph::edgeless(k), 3) == polyq::pow(polyq::qint(3, q), static_cast<unsigned>(k)));
  CHECK(polyq::substitute(mq_subset(Multigraph::complete(3), 3), Var::q, polyq::Rational(1)) == Poly(6L));
}

TEST_CASE("mq_complete") {
  for (int n = 1; n <= 4; ++n) CHECK(mq_complete(1, n) == polyq::qint(n, q));
  CHECK(mq_complete(2, 3) == P("2*q + 2*q^2 + 2*q^3"));
  CHECK(mq_complete(3, 3) == P("6*q^3"));
  CHECK(mq_complete(4, 3).is_zero());
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 5; ++n) CHECK(mq_complete(k, n) == mq_direct(Multigraph::complete(k), n));
}

TEST_CASE("deletion-contraction oracle at q = 1") {
  std::vector<Multigraph> gs = {Multigraph::cycle(4), Multigraph::complete(4), Multigraph::path(5)};
  Multigraph multi(3);
  multi.add_edge(1, 2);
  multi.add_edge(1, 2);
  multi.add_edge(2, 3);
  gs.push_back(multi);
  Multigraph loop(2);
  loop.add_edge(1, 2);
  loop.add_edge(2, 2);
  gs.push_back(loop);
  for (const auto& g : gs)
    for (int n = 1; n <= 4; ++n) {
      const Poly at1 = polyq::substitute(mq_direct(g, n), Var::q, polyq::Rational(1));
      CHECK(at1 == Poly(chromatic(g.vertex_count(), edge_list(g), n)));
      CHECK(mq_direct(g, n) == mq_subset(g, n));
    }
}

TEST_CASE("bichromate and tutte") {
  CHECK(bichromate(k2()) == P("a^2 + a*b"));
  CHECK(bichromate(Multigraph::edgeless(3)) == P("a^3"));
  CHECK(bichromate(Multigraph::cycle(3)) == P("a^3 + 3*a^2*b + 3*a*b^2 + a*b^3"));
  CHECK(tutte(k2(), TutteForm::tutte) == P("x"));
  CHECK(tutte(Multigraph::cycle(3), TutteForm::tutte) == P("x^2 + x + y"));
  Multigraph loop(1);
  loop.add_edge(1, 1);
  CHECK(tutte(loop, TutteForm::tutte) == P("y"));
  // Whitney rank: sum u^{r(E)-r(A)} v^{|A|-r(A)}
  CHECK(tutte(k2(), TutteForm::whitney_rank) == P("1 + u"));
}

TEST_CASE("q_bichromate") {
  CHECK(q_bichromate(Multigraph(1), 3) == polyq::qint(3, q));
  CHECK(q_bichromate(k2(), 2) == P("1 + q") * P("1 + q") + P("x + q^2*x"));
  for (int y = 2; y <= 4; ++y) {
    const Multigraph g = Multigraph::cycle(4);
    Poly lhs = polyq::substitute(q_bichromate(g, y), Var::q, polyq::Rational(1));
    Poly rhs = polyq::substitute(polyq::substitute(bichromate(g), Var::a, polyq::Rational(y)), Var::b,
                                 polyq::var(Var::x));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("chord diagrams and the defected operator") {
  auto disjoint = ChordDiagram::from_positions({{1, 2}, {3, 4}});
  auto crossing = ChordDiagram::from_positions({{1, 3}, {2, 4}});
  auto single = ChordDiagram::from_positions({{1, 2}});
  for (int n = 1; n <= 4; ++n) {
    CHECK(mdef_chord(disjoint, n) == polyq::pow(polyq::qint(n, polyq::var(Var::t)), 2));
    CHECK(mdef_chord(single, n) == polyq::qint(n, polyq::var(Var::t)));
  }
  CHECK(mdef_chord(crossing, 2) == P("1 + t"));
  CHECK(crossing.intersection_graph().edge_count() == 1);
  CHECK(disjoint.intersection_graph().edge_count() == 0);
  CHECK_THROWS(ChordDiagram::from_positions({{1, 2}, {2, 3}}));
}
