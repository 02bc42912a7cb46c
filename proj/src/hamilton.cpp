#include "itline/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "itline/line_graph.hpp"

namespace itline {

namespace {

std::vector<std::vector<VertexId>> neighbor_lists(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = distinct_neighbors(g, v);
  return out;
}

int multiplicity(const MultiGraph& g, VertexId a, VertexId b) {
  int count = 0;
  for (EdgeId e : g.incident(a)) count += g.other_end(e, a) == b ? 1 : 0;
  return count;
}

bool adjacent(const MultiGraph& g, VertexId a, VertexId b) { return multiplicity(g, a, b) > 0; }

HamiltonResult trivial_cases(const MultiGraph& g, bool cycle, bool& handled) {
  handled = true;
  HamiltonResult r;
  r.method = "trivial";
  const int n = g.vertex_count();
  if (n == 0) {
    r.status = SearchStatus::NotFound;
    r.diagnostics = "empty graph";
  } else if (n == 1) {
    r.status = cycle ? SearchStatus::NotFound : SearchStatus::Found;
    if (!cycle) r.order = {0};
  } else if (n == 2 && cycle) {
    // A 2-cycle (two parallel edges) is the only hamiltonian graph of order 2.
    r.status = multiplicity(g, 0, 1) >= 2 ? SearchStatus::Found : SearchStatus::NotFound;
    if (r.status == SearchStatus::Found) r.order = {0, 1};
  } else if (!is_connected(g)) {
    r.status = SearchStatus::NotFound;
    r.diagnostics = "disconnected";
  } else {
    handled = false;
  }
  return r;
}

std::vector<std::uint32_t> adjacency_masks(const MultiGraph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

}  // namespace

bool is_hamiltonian_path(const MultiGraph& g, const std::vector<VertexId>& order) {
  const int n = g.vertex_count();
  if (n == 0 || static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (VertexId v : order) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!adjacent(g, order[i - 1], order[i])) return false;
  }
  return true;
}

bool is_hamiltonian_cycle(const MultiGraph& g, const std::vector<VertexId>& order) {
  const int n = g.vertex_count();
  if (n < 2 || !is_hamiltonian_path(g, order)) return false;
  if (n == 2) return multiplicity(g, order[0], order[1]) >= 2;
  return adjacent(g, order.back(), order.front());
}

HamiltonResult hamiltonian_path_dp(const MultiGraph& g) {
  bool handled = false;
  auto r = trivial_cases(g, false, handled);
  if (handled) return r;
  const int n = g.vertex_count();
  if (n > 24) throw InputError("bitmask DP supports at most 24 vertices");
  r.method = "dp";
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // ends[mask]: vertices at which some path covering exactly `mask` can end.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        const int u = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  if (ends[full] == 0) {
    r.status = SearchStatus::NotFound;
    return r;
  }
  std::uint32_t mask = full;
  int v = std::countr_zero(ends[full]);
  while (true) {
    r.order.push_back(v);
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
    if (prev == 0) break;
    v = std::countr_zero(ends[prev] & adj[v]);
    mask = prev;
  }
  std::reverse(r.order.begin(), r.order.end());
  r.status = SearchStatus::Found;
  return r;
}

HamiltonResult hamiltonian_cycle_dp(const MultiGraph& g) {
  bool handled = false;
  auto r = trivial_cases(g, true, handled);
  if (handled) return r;
  const int n = g.vertex_count();
  if (n > 24) throw InputError("bitmask DP supports at most 24 vertices");
  r.method = "dp";
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // Paths from vertex 0; only masks containing bit 0 are populated.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t e = ends[mask];
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        const int u = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  const std::uint32_t closing = ends[full] & adj[0];
  if (closing == 0) {
    r.status = SearchStatus::NotFound;
    return r;
  }
  std::uint32_t mask = full;
  int v = std::countr_zero(closing);
  while (true) {
    r.order.push_back(v);
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
    if (prev == 0) break;
    v = std::countr_zero(ends[prev] & adj[v]);
    mask = prev;
  }
  std::reverse(r.order.begin(), r.order.end());
  r.status = SearchStatus::Found;
  return r;
}

namespace {

/// Depth-first hamiltonian path/cycle search with dead-end and
/// connectivity pruning.
class Backtracker {
 public:
  Backtracker(const MultiGraph& g, bool cycle, const SearchBudget& budget)
      : g_(g), cycle_(cycle), nbrs_(neighbor_lists(g)), on_(g.vertex_count(), 0), meter_(budget) {}

  SearchStatus run(const std::vector<VertexId>& starts) {
    for (VertexId s : starts) {
      start_ = s;
      order_ = {s};
      on_[s] = 1;
      const auto status = dfs(s);
      on_[s] = 0;
      if (status != SearchStatus::NotFound) return status;
    }
    return SearchStatus::NotFound;
  }

  const std::vector<VertexId>& order() const { return order_; }
  std::uint64_t nodes() const { return meter_.used(); }

 private:
  int free_neighbors(VertexId w) const {
    int c = 0;
    for (VertexId x : nbrs_[w]) c += on_[x] ? 0 : 1;
    return c;
  }

  bool feasible(VertexId cur) const {
    const int n = g_.vertex_count();
    const int remaining = n - static_cast<int>(order_.size());
    if (remaining == 0) return true;
    std::vector<char> near_cur(n, 0), near_start(n, 0);
    for (VertexId x : nbrs_[cur]) near_cur[x] = 1;
    if (cycle_) {
      for (VertexId x : nbrs_[start_]) near_start[x] = 1;
    }
    int ends = 0;
    for (VertexId w = 0; w < n; ++w) {
      if (on_[w]) continue;
      const int avail = free_neighbors(w) + near_cur[w] + (cycle_ ? near_start[w] : 0);
      if (cycle_) {
        if (avail < 2) return false;
      } else {
        if (avail == 0) return false;
        if (avail == 1 && ++ends > 1) return false;
      }
    }
    // Unvisited vertices must all be reachable from cur through unvisited ones.
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    for (VertexId x : nbrs_[cur]) {
      if (!on_[x] && !seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
    int reached = static_cast<int>(stack.size());
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : nbrs_[x]) {
        if (!on_[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == remaining;
  }

  SearchStatus dfs(VertexId cur) {
    if (!meter_.spend()) return SearchStatus::Unknown;
    const int n = g_.vertex_count();
    if (static_cast<int>(order_.size()) == n) {
      if (!cycle_ || std::binary_search(nbrs_[cur].begin(), nbrs_[cur].end(), start_))
        return SearchStatus::Found;
      return SearchStatus::NotFound;
    }
    if (!feasible(cur)) return SearchStatus::NotFound;
    std::vector<std::pair<int, VertexId>> cand;
    for (VertexId x : nbrs_[cur]) {
      if (!on_[x]) cand.emplace_back(free_neighbors(x), x);
    }
    std::sort(cand.begin(), cand.end());
    for (auto [_, x] : cand) {
      on_[x] = 1;
      order_.push_back(x);
      const auto status = dfs(x);
      if (status == SearchStatus::Found) return status;
      order_.pop_back();
      on_[x] = 0;
      if (status == SearchStatus::Unknown) return status;
    }
    return SearchStatus::NotFound;
  }

  const MultiGraph& g_;
  bool cycle_;
  std::vector<std::vector<VertexId>> nbrs_;
  std::vector<char> on_;
  std::vector<VertexId> order_;
  VertexId start_ = 0;
  BudgetMeter meter_;
};

HamiltonResult backtrack(const MultiGraph& g, bool cycle, const SearchBudget& budget) {
  bool handled = false;
  auto r = trivial_cases(g, cycle, handled);
  if (handled) return r;
  r.method = "backtrack";
  const int n = g.vertex_count();
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    const auto d = distinct_neighbors(g, v).size();
    if (d <= 1) leaves.push_back(v);
  }
  if ((cycle && !leaves.empty()) || leaves.size() > 2) {
    r.status = SearchStatus::NotFound;
    r.diagnostics = std::to_string(leaves.size()) + " vertices with at most one neighbor";
    return r;
  }
  std::vector<VertexId> starts;
  if (cycle) {
    starts = {0};
  } else if (!leaves.empty()) {
    starts = {leaves.front()};
  } else {
    for (VertexId v = 0; v < n; ++v) starts.push_back(v);
  }
  Backtracker bt(g, cycle, budget);
  r.status = bt.run(starts);
  if (r.status == SearchStatus::Found) r.order = bt.order();
  if (r.status == SearchStatus::Unknown)
    r.diagnostics = "budget exhausted after " + std::to_string(bt.nodes()) + " nodes on " +
                    std::to_string(n) + " vertices";
  return r;
}

}  // namespace

HamiltonResult hamiltonian_path_backtrack(const MultiGraph& g, const SearchBudget& budget) {
  return backtrack(g, false, budget);
}

HamiltonResult hamiltonian_cycle_backtrack(const MultiGraph& g, const SearchBudget& budget) {
  return backtrack(g, true, budget);
}

HamiltonResult has_hamiltonian_path(const MultiGraph& g, const HamiltonOptions& opts) {
  if (g.vertex_count() <= opts.dp_cap) return hamiltonian_path_dp(g);
  return hamiltonian_path_backtrack(g, opts.budget);
}

HamiltonResult has_hamiltonian_cycle(const MultiGraph& g, const HamiltonOptions& opts) {
  if (g.vertex_count() <= opts.dp_cap) return hamiltonian_cycle_dp(g);
  return hamiltonian_cycle_backtrack(g, opts.budget);
}

namespace {

std::vector<EdgeId> lifted_sequence(const MultiGraph& g, const Trail& t) {
  if (!is_valid_trail(g, t)) throw LiftError("lift needs a valid trail");
  if (!dominates(g, t)) throw LiftError("lift needs a dominating trail");
  std::vector<char> placed(g.edge_count(), 0);
  for (EdgeId e : t.edges) placed[e] = 1;
  std::vector<EdgeId> seq;
  seq.reserve(g.edge_count());
  auto hang = [&](VertexId v) {
    std::vector<EdgeId> pendant;
    for (EdgeId e : g.incident(v)) {
      if (!placed[e]) {
        placed[e] = 1;
        pendant.push_back(e);
      }
    }
    std::sort(pendant.begin(), pendant.end());
    seq.insert(seq.end(), pendant.begin(), pendant.end());
  };
  hang(t.vertices.front());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    seq.push_back(t.edges[i]);
    hang(t.vertices[i + 1]);
  }
  return seq;
}

Trail as_line_graph_walk(const MultiGraph& line, const std::vector<EdgeId>& seq, bool close) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> id_of;
  for (const Edge& e : line.edges()) id_of[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.id;
  Trail out;
  out.vertices = seq;
  if (close) out.vertices.push_back(seq.front());
  for (std::size_t i = 1; i < out.vertices.size(); ++i) {
    const VertexId a = out.vertices[i - 1], b = out.vertices[i];
    out.edges.push_back(id_of.at({std::min(a, b), std::max(a, b)}));
  }
  return out;
}

}  // namespace

Trail lift_trail_to_path(const MultiGraph& g, const Trail& t) {
  if (g.edge_count() == 0) throw LiftError("lift needs at least one edge");
  const auto seq = lifted_sequence(g, t);
  const auto line = line_graph(g);
  if (!is_hamiltonian_path(line.graph, seq))
    throw std::logic_error("lifted sequence is not a hamiltonian path of L(G)");
  return as_line_graph_walk(line.graph, seq, false);
}

Trail lift_closed_trail_to_cycle(const MultiGraph& g, const Trail& t) {
  if (g.edge_count() < 3) throw LiftError("closed lift needs at least three edges");
  if (!t.closed()) throw LiftError("closed lift needs a closed trail");
  const auto seq = lifted_sequence(g, t);
  const auto line = line_graph(g);
  if (!is_hamiltonian_cycle(line.graph, seq))
    throw std::logic_error("lifted sequence is not a hamiltonian cycle of L(G)");
  return as_line_graph_walk(line.graph, seq, true);
}

}  // namespace itline
