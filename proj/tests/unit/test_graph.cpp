#include <doctest.h>

#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"

using namespace qgraph;
using namespace qgraph::graph;

TEST_CASE("components") {
  const Multigraph tri = Multigraph::cycle(3);
  auto none = components(tri, EdgeSubset(3));
  CHECK(none == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(component_count(tri, 0) == 3);
  auto all = components(tri, EdgeSubset::all(3));
  CHECK(all == std::vector<std::vector<int>>{{1, 2, 3}});

  Multigraph g(3);
  g.add_edge(1, 2);
  CHECK(components(g, EdgeSubset::all(1)) == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(component_sizes(g, 1) == std::vector<int>{2, 1});
}

TEST_CASE("odd degree count") {
  const Multigraph tri = Multigraph::cycle(3);
  CHECK(odd_degree_count(tri, EdgeSubset(3)) == 0);
  CHECK(odd_degree_count(tri, EdgeSubset(3, 1)) == 2);
  CHECK(odd_degree_count(tri, EdgeSubset::all(3)) == 0);
  Multigraph loop(1);
  loop.add_edge(1, 1);
  CHECK(odd_degree_count(loop, EdgeSubset::all(1)) == 0);
}

TEST_CASE("named families") {
  CHECK(Multigraph::complete(4).edge_count() == 6);
  CHECK(Multigraph::path(4).edge_count() == 3);
  CHECK(Multigraph::cycle(5).edge_count() == 5);
  CHECK(Multigraph::edgeless(3).edge_count() == 0);
  Multigraph g(2);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  CHECK(g.has_parallel_edges());
  CHECK_FALSE(g.has_loop());
}

TEST_CASE("graph file format") {
  Multigraph g = parse_graph("# triangle\nvertices 3\n1 2\n2 3\n3 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(parse_graph(to_text(g)).edges().size() == 3);
  CHECK_THROWS_AS(parse_graph("vertices 2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("1 2\n"), ParseError);
  try {
    parse_graph("vertices 2\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
  Multigraph h(2);
  CHECK_THROWS(h.add_edge(1, 5));
}
