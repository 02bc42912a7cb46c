#pragma once

#include <string>
#include <vector>

#include "itline/budget.hpp"
#include "itline/graph.hpp"

namespace itline {

inline constexpr int kDefaultDpCap = 20;

struct HamiltonOptions {
  int dp_cap = kDefaultDpCap;  // Held-Karp up to this many vertices, backtracking above
  SearchBudget budget = default_budget();
};

struct HamiltonResult {
  SearchStatus status = SearchStatus::Unknown;
  std::vector<VertexId> order;  // witness when Found; a cycle lists each vertex once
  std::string method;           // "dp" or "backtrack"
  std::string diagnostics;
};

HamiltonResult has_hamiltonian_path(const MultiGraph& g, const HamiltonOptions& opts = {});
HamiltonResult has_hamiltonian_cycle(const MultiGraph& g, const HamiltonOptions& opts = {});

// The two exact engines, exposed separately so they can be cross-checked.
HamiltonResult hamiltonian_path_dp(const MultiGraph& g);
HamiltonResult hamiltonian_cycle_dp(const MultiGraph& g);
HamiltonResult hamiltonian_path_backtrack(const MultiGraph& g, const SearchBudget& budget);
HamiltonResult hamiltonian_cycle_backtrack(const MultiGraph& g, const SearchBudget& budget);

bool is_hamiltonian_path(const MultiGraph& g, const std::vector<VertexId>& order);
bool is_hamiltonian_cycle(const MultiGraph& g, const std::vector<VertexId>& order);

/// Thrown when a lift precondition fails (trail invalid or not dominating).
class LiftError : public InputError {
 public:
  using InputError::InputError;
};

/// Turns a dominating trail of g into a hamiltonian path of L(g). Vertices of
/// the returned trail are vertices of line_graph(g) (i.e. edge ids of g); its
/// edges are edge ids of line_graph(g). Edges off the trail are slotted in at
/// the first visit of an endpoint, ascending by id.
Trail lift_trail_to_path(const MultiGraph& g, const Trail& t);

/// Same construction for a dominating closed trail; returns a hamiltonian
/// cycle of L(g) as a closed trail. Needs at least three edges in g.
Trail lift_closed_trail_to_cycle(const MultiGraph& g, const Trail& t);

}  // namespace itline
