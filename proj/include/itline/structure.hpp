#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "itline/budget.hpp"
#include "itline/graph.hpp"

namespace itline {

struct DegreeClasses {
  std::map<int, std::vector<VertexId>> by_degree;  // i -> V_i(G)
  std::vector<VertexId> high;                      // V_{>=3}(G)
  std::vector<VertexId> w;                         // W(G) = V(G) \ V_2(G)
};

DegreeClasses degree_classes(const MultiGraph& g);

/// Maximal path whose ends have degree != 2 and whose inner vertices have
/// degree 2. A cycle hanging off a single W-vertex is reported as a closed
/// branch (vertices.front() == vertices.back()).
struct Branch {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool closed = false;
  bool touches_degree_one = false;

  int length() const { return static_cast<int>(edges.size()); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
};

/// B(G), ordered by (smaller end vertex, first edge id). Cycle components whose
/// vertices all have degree 2 contribute nothing.
std::vector<Branch> branches(const MultiGraph& g);
/// B_1(G): branches containing a degree-one vertex.
std::vector<Branch> branches_b1(const MultiGraph& g);

/// PC(G): cycles meeting V_{>=3}(G) in exactly one vertex, as closed trails
/// starting and ending at that vertex.
std::vector<Trail> pendent_cycles(const MultiGraph& g);

struct MaxTrailResult {
  SearchStatus status = SearchStatus::Unknown;  // Found when proven optimal
  Trail trail;
  int mt_star = 0;
  int d3_star = 0;
  std::uint64_t nodes = 0;
};

/// Exact MT*(G): a trail with the most distinct vertices, then the fewest
/// degree->=3 vertices left off it. Throws InputError for disconnected input.
MaxTrailResult max_trail(const MultiGraph& g, const SearchBudget& budget = default_budget());

struct TrailSearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Trail> trail;
  std::uint64_t nodes = 0;
};

/// Searches for a trail T with every edge of g incident to V(T). A trivial
/// one-vertex trail qualifies only when every edge meets that vertex.
TrailSearchResult find_dominating_trail(const MultiGraph& g, bool closed,
                                        const SearchBudget& budget = default_budget());

}  // namespace itline
