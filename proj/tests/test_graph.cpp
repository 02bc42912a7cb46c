#include <algorithm>
#include <random>

#include "doctest.h"
#include "itline/families.hpp"
#include "itline/io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace itline;
namespace fam = itline::families;

TEST_CASE("degree counts parallel edges, neighbors do not") {
  const auto two = fam::two_cycle();
  CHECK(degree(two, 0) == 2);
  CHECK(distinct_neighbors(two, 0) == std::vector<VertexId>{1});
  CHECK(degree(MultiGraph(3), 1) == 0);
  CHECK(degree(fam::star(3), 0) == 3);
  CHECK_THROWS_AS(degree(two, 5), InputError);
  CHECK_THROWS_AS(distinct_neighbors(two, -1), InputError);
}

TEST_CASE("simple graphs have as many neighbors as degree") {
  for (const auto& c : support::corpus6())
    for (VertexId v = 0; v < c.graph.vertex_count(); ++v)
      CHECK(static_cast<int>(distinct_neighbors(c.graph, v).size()) == degree(c.graph, v));
}

TEST_CASE("construction rejects loops and unknown vertices") {
  MultiGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  CHECK(g.add_edge(0, 1) == 0);
  CHECK(g.add_edge(1, 0) == 1);
  CHECK_FALSE(g.is_simple());
  CHECK(g.edge(1).u == 1);
}

TEST_CASE("handshake on every corpus graph and family") {
  auto check = [](const MultiGraph& g) {
    int sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sum += degree(g, v);
    CHECK(sum == 2 * g.edge_count());
  };
  for (const auto& c : support::corpus6()) check(c.graph);
  check(fam::fig4a());
  check(fam::two_cycle());
}

TEST_CASE("subgraph distance") {
  const auto g = fam::fig1();
  const std::vector<VertexId> v12{11};
  std::vector<VertexId> path;
  for (int i = 0; i < 11; ++i) path.push_back(i);
  CHECK(subgraph_distance(g, v12, path) == 1);
  CHECK(subgraph_distance(g, path, path) == 0);

  MultiGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const std::vector<VertexId> a{0}, b{3};
  CHECK_FALSE(subgraph_distance(two, a, b).has_value());
  CHECK_THROWS_AS(subgraph_distance(two, a, std::vector<VertexId>{}), InputError);
}

TEST_CASE("subgraph distance is symmetric and obeys the triangle inequality") {
  for (const auto& c : support::corpus6()) {
    const auto& g = c.graph;
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const std::vector<VertexId> a{x}, b{y};
        const auto dxy = subgraph_distance(g, a, b);
        CHECK(dxy == subgraph_distance(g, b, a));
        for (int z = 0; z < n; ++z) {
          const std::vector<VertexId> m{z};
          CHECK(*dxy <= *subgraph_distance(g, a, m) + *subgraph_distance(g, m, b));
        }
      }
  }
}

TEST_CASE("distances agree with an independent BFS") {
  for (const auto& c : support::corpus6()) {
    const auto apsp = all_pairs_distances(c.graph);
    const int n = c.graph.vertex_count();
    for (int s = 0; s < n; ++s) {
      const auto ref = oracle::bfs(c.graph, {s});
      for (int t = 0; t < n; ++t) CHECK(apsp[s * n + t] == ref[t]);
    }
  }
}

TEST_CASE("diameter and components") {
  CHECK(diameter(fam::path(5)) == 4);
  CHECK(diameter(MultiGraph(1)) == 0);
  MultiGraph split(3);
  split.add_edge(0, 1);
  CHECK_THROWS_AS(diameter(split), InputError);
  CHECK(connected_components(split).size() == 2);
  CHECK_FALSE(is_connected(split));
}

TEST_CASE("subgraph helpers") {
  const auto g = fam::fig1();
  SubgraphH whole;
  for (EdgeId e = 0; e < g.edge_count(); ++e) whole.edges.push_back(e);
  CHECK(incident_edges(g, whole).size() == static_cast<std::size_t>(g.edge_count()));

  const auto c6 = fam::cycle(6);
  SubgraphH cyc({0, 1, 2, 3, 4, 5}, {});
  CHECK(odd_vertices(c6, cyc).empty());

  // Path v1..v11 plus isolated v12: two components, odd ends v1 and v11.
  SubgraphH h({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {11});
  CHECK(connected_components(g, h).size() == 2);
  CHECK(odd_vertices(g, h) == std::vector<VertexId>{0, 10});
  CHECK(vertices_of(g, h).size() == 12);
  const auto deg = degrees_in(g, h);
  CHECK(deg[11] == 0);
  CHECK(deg[2] == 2);

  SubgraphH bad({0}, {0});
  CHECK_THROWS_AS(validate(g, bad), InputError);
  CHECK_THROWS_AS(validate(g, SubgraphH({99}, {})), InputError);
}

TEST_CASE("trails") {
  const auto g = fam::cycle(4);
  Trail t{{0, 1, 2, 3, 0}, {0, 1, 2, 3}};
  CHECK(is_valid_trail(g, t));
  CHECK(t.closed());
  CHECK(dominates(g, t));
  Trail repeat{{0, 1, 0}, {0, 0}};
  CHECK_FALSE(is_valid_trail(g, repeat));
  Trail point{{0}, {}};
  CHECK(point.trivial());
  CHECK_FALSE(dominates(g, point));
  CHECK(dominates(fam::star(4), point));
}

TEST_CASE("edge list parsing") {
  const auto g = parse_edgelist("# two parallel edges\n3 3\n0 1\n0 1\n\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK_FALSE(g.is_simple());
  CHECK(serialize_edgelist(g) == "3 3\n0 1\n0 1\n1 2\n");

  try {
    parse_edgelist("3 2\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("2 1\n0 1\n1 0\n"), ParseError);
}

TEST_CASE("edge list round trip keeps the endpoint multiset") {
  std::mt19937 rng(7);
  for (const auto& c : support::corpus6()) {
    const auto g = support::relabel(c.graph, rng);
    CHECK(parse_edgelist(serialize_edgelist(g)) == g);
  }
  const auto f = fam::fig4a();
  CHECK(parse_edgelist(serialize_edgelist(f)) == f);
}

TEST_CASE("graph6") {
  const auto p3 = parse_graph6("Bg");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(serialize_graph6(fam::complete(4)) == "C~");
  CHECK(parse_graph6(">>graph6<<C~") == parse_graph6("C~"));
  CHECK(serialize_graph6(parse_graph6("D?{")) == "D?{");
  CHECK_THROWS_AS(serialize_graph6(fam::two_cycle()), InputError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);  // padding bit set

  for (const auto& c : support::corpus6())
    CHECK(support::same_edges(parse_graph6(serialize_graph6(c.graph)), c.graph));

  const auto big = fam::cycle(70);
  const auto text = serialize_graph6(big);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text).edge_count() == 70);
}

TEST_CASE("format sniffing") {
  CHECK(parse_graph("C~\n").edge_count() == 6);
  CHECK(parse_graph("2 2\n0 1\n0 1\n").edge_count() == 2);
  CHECK_THROWS_AS(parse_graph("\n\n"), ParseError);
}
