#include "doctest.h"
#include "itline/families.hpp"
#include "itline/indices.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace itline;
namespace fam = itline::families;

namespace {

// Builds the next line graph from the oracle's adjacency pairs.
MultiGraph oracle_line_graph(const MultiGraph& g) {
  MultiGraph l(g.edge_count());
  for (const auto& [a, b] : oracle::line_graph_pairs(g)) l.add_edge(a, b);
  return l;
}

// Least level whose iterated line graph passes `test`, while levels stay tiny.
std::optional<int> brute_index(const MultiGraph& g, bool cycle, int vertex_cap = 9) {
  MultiGraph cur = g;
  for (int level = 0; level < 8; ++level) {
    if (cur.vertex_count() > vertex_cap) return std::nullopt;
    if (cur.edge_count() == 0 && cur.vertex_count() > 1) return std::nullopt;
    if (cycle ? oracle::hamiltonian_cycle(cur) : oracle::hamiltonian_path(cur)) return level;
    if (cur.edge_count() == 0) return std::nullopt;
    cur = oracle_line_graph(cur);
  }
  return std::nullopt;
}

int hp(const MultiGraph& g) {
  const auto r = hamiltonian_path_index(g);
  REQUIRE(r.status == SearchStatus::Found);
  return r.value;
}

int h(const MultiGraph& g) {
  const auto r = hamiltonian_index(g);
  REQUIRE(r.status == SearchStatus::Found);
  return r.value;
}

}  // namespace

TEST_CASE("path recognition") {
  CHECK(is_path_graph(fam::path(1)));
  CHECK(is_path_graph(fam::path(7)));
  CHECK_FALSE(is_path_graph(fam::cycle(5)));
  CHECK_FALSE(is_path_graph(fam::star(3)));
  CHECK_FALSE(is_path_graph(fam::two_cycle()));
}

TEST_CASE("index values on known graphs") {
  CHECK(hp(fam::path(6)) == 0);
  CHECK(hp(fam::cycle(5)) == 0);
  CHECK(h(fam::cycle(5)) == 0);
  CHECK(hp(fam::star(3)) == 1);
  CHECK(h(fam::star(3)) == 1);
  CHECK(hp(fam::star(5)) == 1);
  CHECK(hp(fam::petersen()) == 0);
  CHECK(h(fam::petersen()) == 1);
  CHECK(hp(fam::fig1()) == 1);
  for (int k = 1; k <= 3; ++k) {
    CHECK(hp(fam::fig2(k)) == k);
    CHECK(h(fam::fig2(k)) == k);
  }
  CHECK(hp(fam::fig3(1, 6)) == 3);
  CHECK(hp(fam::fig4b(1)) == 3);
  CHECK_THROWS_AS(hamiltonian_index(fam::path(4)), PathHasNoIndex);
}

TEST_CASE("index methods and witnesses") {
  const auto p = hamiltonian_path_index(fam::path(5));
  CHECK(p.method == IndexMethod::DirectOracle);
  CHECK(std::holds_alternative<std::vector<VertexId>>(p.witness));

  const auto f1 = hamiltonian_path_index(fam::fig1());
  CHECK(f1.method == IndexMethod::DominatingTrail);
  REQUIRE(std::holds_alternative<Trail>(f1.witness));
  CHECK(dominates(fam::fig1(), std::get<Trail>(f1.witness)));

  const auto g = fam::fig2(2);
  const auto f2 = hamiltonian_path_index(g);
  CHECK(f2.method == IndexMethod::EupWitness);
  REQUIRE(std::holds_alternative<SubgraphH>(f2.witness));
  CHECK(check_conditions(g, std::get<SubgraphH>(f2.witness), 2, Variant::EUP).passed());

  const auto h2 = hamiltonian_index(g);
  CHECK(h2.method == IndexMethod::EuWitness);
  REQUIRE(std::holds_alternative<SubgraphH>(h2.witness));
  CHECK(check_conditions(g, std::get<SubgraphH>(h2.witness), 2, Variant::EU).passed());

  const auto j = to_json(f2);
  CHECK(j["value"] == 2);
  CHECK(j["witness"]["kind"] == "subgraph");
  CHECK(to_string(IndexMethod::EupWitness) == "eup_witness");
}

TEST_CASE("unsettled searches are reported as Unknown") {
  IndexOptions opts;
  opts.budget.max_nodes = 1;
  const auto r = hamiltonian_path_index(fam::fig4b(1), opts);
  CHECK(r.status == SearchStatus::Unknown);
  CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("direct cross-check") {
  CHECK(direct_index_cross_check(fam::star(3), 1, IndexKind::Path).status ==
        CrossCheckStatus::Confirmed);
  CHECK(direct_index_cross_check(fam::path(6), 0, IndexKind::Path).status ==
        CrossCheckStatus::Confirmed);
  CHECK(direct_index_cross_check(fam::fig2(2), 2, IndexKind::Path).status ==
        CrossCheckStatus::Confirmed);
  CHECK(direct_index_cross_check(fam::fig2(2), 1, IndexKind::Path).status ==
        CrossCheckStatus::Mismatch);
  CHECK(direct_index_cross_check(fam::star(3), 0, IndexKind::Path).status ==
        CrossCheckStatus::Mismatch);
  CHECK(direct_index_cross_check(fam::fig4b(1), 3, IndexKind::Path).status ==
        CrossCheckStatus::CapExceeded);

  IndexOptions opts;
  opts.cross_check = true;
  const auto r = hamiltonian_index(fam::star(3), opts);
  REQUIRE(r.cross_check);
  CHECK(r.cross_check->status == CrossCheckStatus::Confirmed);
}

TEST_CASE("bound ingredients") {
  CHECK(delta_prime(fam::fig4b(1)) == 6);
  CHECK(d3_doublestar(fam::fig4b(1)) == 13);
  CHECK(delta_prime(fam::two_cycle()) == 1);

  const auto b3 = compute_bounds(fam::fig3(1, 6));
  CHECK(b3.status == SearchStatus::Found);
  CHECK(b3.ingredients.n == 18);
  CHECK(b3.ingredients.mt_star == 13);
  CHECK(b3.ingredients.d3_star == 4);
  CHECK(b3.thm_b1 == 3);
  CHECK(b3.cor1 == 5);
  CHECK(b3.cor2 == std::max(1, 18 - diameter(fam::fig3(1, 6)) - 1));

  const auto b4 = compute_bounds(fam::fig4b(2));
  CHECK(b4.ingredients.n == 22);
  CHECK(b4.thm_b2 == 4);
  CHECK(bound_thm_b2(fam::fig4b(2)) == 4);

  CHECK(bound_cor2(fam::path(6)) == 1);
  CHECK(bound_thm_b1(fam::path(6)) == 2);

  const auto j = to_json(b3);
  CHECK(j["ingredients"]["mt_star"] == 13);
  CHECK(j["min"] == b3.min_bound());
}

TEST_CASE("two-branch witness") {
  for (int s = 1; s <= 2; ++s) {
    const auto g = fam::fig4b(s);
    const auto w = two_branch_witness(g);
    CHECK(check_conditions(g, w, s + 2, Variant::EUP).passed());
  }
  CHECK_THROWS_AS(two_branch_witness(fam::cycle(5)), InputError);
}

TEST_CASE("indices agree with brute force over the small corpus") {
  for (const auto& c : support::corpus6()) {
    const auto& g = c.graph;
    INFO(c.id);
    const auto p = hamiltonian_path_index(g);
    REQUIRE(p.status == SearchStatus::Found);
    if (const auto ref = brute_index(g, false)) CHECK(p.value == *ref);
    if (is_path_graph(g)) continue;
    const auto q = hamiltonian_index(g);
    REQUIRE(q.status == SearchStatus::Found);
    if (const auto ref = brute_index(g, true)) CHECK(q.value == *ref);
  }
}

TEST_CASE("bounds dominate h_p, and h_p <= h, over the small corpus") {
  IndexOptions opts;
  opts.cross_check = true;
  for (const auto& c : support::corpus6()) {
    const auto& g = c.graph;
    if (g.edge_count() < 2) continue;
    INFO(c.id);
    const auto p = hamiltonian_path_index(g, opts);
    REQUIRE(p.status == SearchStatus::Found);
    REQUIRE(p.cross_check);
    CHECK(p.cross_check->status != CrossCheckStatus::Mismatch);
    const auto b = compute_bounds(g);
    REQUIRE(b.status == SearchStatus::Found);
    CHECK(p.value <= b.thm_b1);
    CHECK(p.value <= b.cor1);
    CHECK(p.value <= b.cor2);
    CHECK(p.value <= b.thm_b2);
    std::optional<IndexResult> q;
    if (!is_path_graph(g)) {
      q = hamiltonian_index(g, opts);
      REQUIRE(q->status == SearchStatus::Found);
      CHECK(p.value <= q->value);
      REQUIRE(q->cross_check);
      CHECK(q->cross_check->status != CrossCheckStatus::Mismatch);
    }
    const auto j = index_summary_json(c.id, p, q, b);
    for (const auto& [name, ok] : j["checks"].items()) CHECK_MESSAGE(ok == true, name);
  }
}
