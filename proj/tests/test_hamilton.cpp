#include "doctest.h"
#include "itline/families.hpp"
#include "itline/hamilton.hpp"
#include "itline/line_graph.hpp"
#include "itline/structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace itline;
namespace fam = itline::families;

TEST_CASE("oracle basics") {
  CHECK(has_hamiltonian_path(fam::path(6)).status == SearchStatus::Found);
  CHECK(has_hamiltonian_cycle(fam::path(6)).status == SearchStatus::NotFound);
  CHECK(has_hamiltonian_path(fam::star(3)).status == SearchStatus::NotFound);

  const auto p = has_hamiltonian_path(fam::petersen());
  CHECK(p.status == SearchStatus::Found);
  CHECK(is_hamiltonian_path(fam::petersen(), p.order));
  CHECK(has_hamiltonian_cycle(fam::petersen()).status == SearchStatus::NotFound);

  CHECK(has_hamiltonian_path(MultiGraph(1)).status == SearchStatus::Found);
  CHECK(has_hamiltonian_cycle(MultiGraph(1)).status == SearchStatus::NotFound);
  CHECK(has_hamiltonian_cycle(fam::two_cycle()).status == SearchStatus::Found);
  CHECK(has_hamiltonian_cycle(fam::path(2)).status == SearchStatus::NotFound);
}

TEST_CASE("dp above its hard limit is refused") {
  CHECK_THROWS_AS(hamiltonian_path_dp(fam::cycle(25)), InputError);
}

TEST_CASE("backtracking handles graphs above the dp cap") {
  const auto l = line_graph(fam::petersen()).graph;  // 15 vertices
  HamiltonOptions opts;
  opts.dp_cap = 10;
  const auto r = has_hamiltonian_cycle(l, opts);
  CHECK(r.method == "backtrack");
  CHECK(r.status == SearchStatus::Found);
  CHECK(is_hamiltonian_cycle(l, r.order));

  const auto big = fam::fig4b(2);
  const auto s = has_hamiltonian_path(big);
  CHECK(s.method == "backtrack");
  CHECK(s.status == SearchStatus::NotFound);
}

TEST_CASE("dp, backtracking and permutations agree on every graph up to 7 vertices") {
  const auto all = enumerate_connected_graphs(7);
  for (const auto& c : all) {
    const auto& g = c.graph;
    const bool path = oracle::hamiltonian_path(g);
    const bool cycle = oracle::hamiltonian_cycle(g);
    const auto dp_p = hamiltonian_path_dp(g);
    const auto dp_c = hamiltonian_cycle_dp(g);
    const auto bt_p = hamiltonian_path_backtrack(g, default_budget());
    const auto bt_c = hamiltonian_cycle_backtrack(g, default_budget());
    CHECK((dp_p.status == SearchStatus::Found) == path);
    CHECK((bt_p.status == SearchStatus::Found) == path);
    CHECK((dp_c.status == SearchStatus::Found) == cycle);
    CHECK((bt_c.status == SearchStatus::Found) == cycle);
    if (path) {
      CHECK(oracle::is_order_path(g, dp_p.order, false));
      CHECK(oracle::is_order_path(g, bt_p.order, false));
    }
    if (cycle) {
      CHECK(oracle::is_order_path(g, dp_c.order, true));
      CHECK(oracle::is_order_path(g, bt_c.order, true));
    }
  }
}

TEST_CASE("line graphs of corpus graphs: dp agrees with the trail reductions") {
  for (const auto& c : support::corpus6()) {
    if (c.graph.edge_count() < 3) continue;
    const auto l = line_graph(c.graph).graph;
    const bool lp = has_hamiltonian_path(l).status == SearchStatus::Found;
    const bool lc = has_hamiltonian_cycle(l).status == SearchStatus::Found;
    CHECK(lp == (find_dominating_trail(c.graph, false).status == SearchStatus::Found));
    CHECK(lc == (find_dominating_trail(c.graph, true).status == SearchStatus::Found));
  }
}

TEST_CASE("lifting the fig1 trail") {
  const auto g = fam::fig1();
  Trail t;
  for (int v = 0; v < 11; ++v) t.vertices.push_back(v);
  for (int e = 0; e < 10; ++e) t.edges.push_back(e);
  const auto p = lift_trail_to_path(g, t);
  CHECK(p.vertices.size() == 13);
  CHECK(oracle::is_order_path(line_graph(g).graph, p.vertices, false));
  // Off-trail edges at v3 (edge id 10) follow the first trail edge into v3.
  CHECK(p.vertices[0] == 0);
  CHECK(p.vertices[1] == 1);
  CHECK(p.vertices[2] == 10);
}

TEST_CASE("lifting small trails") {
  const auto star = fam::star(3);
  const Trail one{{0, 1}, {0}};
  const auto p = lift_trail_to_path(star, one);
  CHECK(p.vertices.size() == 3);
  CHECK(oracle::is_order_path(line_graph(star).graph, p.vertices, false));

  const auto c6 = fam::cycle(6);
  const Trail around{{0, 1, 2, 3, 4, 5, 0}, {0, 1, 2, 3, 4, 5}};
  const auto c = lift_closed_trail_to_cycle(c6, around);
  CHECK(c.closed());
  CHECK(c.edges.size() == 6);
  const auto open = lift_trail_to_path(c6, around);
  CHECK(open.vertices.size() == 6);

  const auto c3 = fam::cycle(3);
  const auto tri = lift_closed_trail_to_cycle(c3, Trail{{0, 1, 2, 0}, {0, 1, 2}});
  CHECK(tri.edges.size() == 3);

  const auto f2 = fam::fig2(1);
  const Trail hexagon{{0, 1, 2, 3, 4, 5, 0}, {0, 1, 2, 3, 4, 5}};
  const auto big = lift_closed_trail_to_cycle(f2, hexagon);
  CHECK(big.edges.size() == 9);

  const auto k4 = fam::complete(4);
  const auto dt = find_dominating_trail(k4, true);
  REQUIRE(dt.trail);
  const auto k4c = lift_closed_trail_to_cycle(k4, *dt.trail);
  CHECK(k4c.edges.size() == 6);
  std::vector<VertexId> order(k4c.vertices.begin(), k4c.vertices.end() - 1);
  CHECK(oracle::is_order_path(line_graph(k4).graph, order, true));
}

TEST_CASE("lift preconditions") {
  const auto g = fam::path(5);
  CHECK_THROWS_AS(lift_trail_to_path(g, Trail{{0, 1}, {0}}), LiftError);
  CHECK_THROWS_AS(lift_trail_to_path(g, Trail{{0, 2}, {0}}), LiftError);
  CHECK_THROWS_AS(lift_closed_trail_to_cycle(fam::path(3), Trail{{1}, {}}), LiftError);
  CHECK_THROWS_AS(lift_closed_trail_to_cycle(fam::cycle(4), Trail{{0, 1, 2}, {0, 1}}), LiftError);
}

TEST_CASE("every found dominating trail lifts to a verified hamiltonian path or cycle") {
  for (const auto& c : support::corpus6()) {
    if (c.graph.edge_count() < 3) continue;
    const auto l = line_graph(c.graph).graph;
    if (const auto t = find_dominating_trail(c.graph, false).trail) {
      const auto p = lift_trail_to_path(c.graph, *t);
      CHECK(oracle::is_order_path(l, p.vertices, false));
    }
    if (const auto t = find_dominating_trail(c.graph, true).trail) {
      const auto cyc = lift_closed_trail_to_cycle(c.graph, *t);
      std::vector<VertexId> order(cyc.vertices.begin(), cyc.vertices.end() - 1);
      CHECK(oracle::is_order_path(l, order, true));
    }
  }
}
