#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "itline/budget.hpp"
#include "itline/eup.hpp"
#include "itline/graph.hpp"
#include "itline/hamilton.hpp"

namespace itline {

enum class IndexMethod { DirectOracle, DominatingTrail, EupWitness, EuWitness };
std::string to_string(IndexMethod m);

enum class IndexKind { Path, Cycle };  // h_p versus h

struct IndexOptions {
  SearchBudget budget = default_budget();  // applied afresh to each sub-search
  int dp_cap = kDefaultDpCap;
  ConditionOptions conditions;
  int workers = 1;
  bool cross_check = false;
  int cross_check_cap = 20;  // largest L^k(G) handed to the direct oracles
};

enum class CrossCheckStatus { Confirmed, CapExceeded, Mismatch };
std::string to_string(CrossCheckStatus s);

struct CrossCheck {
  CrossCheckStatus status = CrossCheckStatus::CapExceeded;
  std::string diagnostics;
};

/// Hamiltonian path order, dominating trail, or EU/EUP witness.
using IndexWitness = std::variant<std::monostate, std::vector<VertexId>, Trail, SubgraphH>;

struct IndexResult {
  SearchStatus status = SearchStatus::Unknown;  // Found: `value` is exact
  int value = -1;
  IndexMethod method = IndexMethod::DirectOracle;
  IndexWitness witness;
  std::optional<CrossCheck> cross_check;
  std::string diagnostics;
};

/// Raised by hamiltonian_index for paths, whose iterated line graphs are
/// never hamiltonian.
class PathHasNoIndex : public InputError {
 public:
  PathHasNoIndex() : InputError("a path has no hamiltonian index") {}
};

bool is_path_graph(const MultiGraph& g);

/// h_p(G): least n with L^n(G) traceable.
IndexResult hamiltonian_path_index(const MultiGraph& g, const IndexOptions& opts = {});
/// h(G): least n with L^n(G) hamiltonian. Throws PathHasNoIndex for paths.
IndexResult hamiltonian_index(const MultiGraph& g, const IndexOptions& opts = {});

/// Builds L^{claimed-1}(G) and L^{claimed}(G) (while they fit under the vertex
/// cap) and checks the claimed level is the first traceable/hamiltonian one.
CrossCheck direct_index_cross_check(const MultiGraph& g, int claimed, IndexKind kind,
                                    int vertex_cap = 20,
                                    const HamiltonOptions& hamilton = {});

/// Δ'(G): largest number of distinct neighbors.
int delta_prime(const MultiGraph& g);
/// d**_{>=3}(G): over vertices attaining Δ', the most degree->=3 vertices
/// outside the neighborhood.
int d3_doublestar(const MultiGraph& g);

struct BoundIngredients {
  int n = 0;
  int mt_star = 0;
  int d3_star = 0;
  int diam = 0;
  int delta_prime = 0;
  int d3_doublestar = 0;
};

struct BoundsReport {
  SearchStatus status = SearchStatus::Unknown;  // Unknown if MT* was not settled
  int thm_b1 = 0;  // n - mt* - d*_{>=3} + 2
  int cor1 = 0;    // max{1, n - mt*}
  int cor2 = 0;    // max{1, n - diam - 1}
  int thm_b2 = 0;  // floor((n - Δ' - d**_{>=3}) / 3) + 3
  BoundIngredients ingredients;

  int min_bound() const;
};

BoundsReport compute_bounds(const MultiGraph& g, const SearchBudget& budget = default_budget());
int bound_thm_b1(const MultiGraph& g, const SearchBudget& budget = default_budget());
int bound_cor1(const MultiGraph& g, const SearchBudget& budget = default_budget());
int bound_cor2(const MultiGraph& g);
int bound_thm_b2(const MultiGraph& g);

/// The subgraph used to certify the Δ'-bound: V_{>=3}(G), the two branches
/// richest in degree-<=2 vertices joined by a shortest connecting path, and
/// all pendent cycles. Throws InputError when G has fewer than two branches.
SubgraphH two_branch_witness(const MultiGraph& g);

nlohmann::json to_json(const IndexResult& r);
nlohmann::json to_json(const BoundsReport& b);

/// Per-graph summary {graph_id, hp, hp_method, h, bounds, checks}. `h` is
/// absent for paths. Checks compare a settled h_p against every bound and h.
nlohmann::json index_summary_json(const std::string& graph_id, const IndexResult& hp,
                                  const std::optional<IndexResult>& h, const BoundsReport& b);

}  // namespace itline
