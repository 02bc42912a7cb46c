#include "itline/line_graph.hpp"

#include <algorithm>
#include <utility>

namespace itline {

LineGraphResult line_graph(const MultiGraph& g) {
  if (g.edge_count() == 0) throw InputError("line graph of an edgeless graph is undefined");
  std::vector<std::pair<EdgeId, EdgeId>> adjacent;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        adjacent.emplace_back(std::min(inc[i], inc[j]), std::max(inc[i], inc[j]));
    }
  }
  // Parallel edges meet at both ends; L(G) keeps a single adjacency.
  std::sort(adjacent.begin(), adjacent.end());
  adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());

  LineGraphResult out{MultiGraph(g.edge_count(), adjacent), {}};
  out.origin.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.origin[e] = e;
  return out;
}

EdgelessLevel::EdgelessLevel(int level)
    : InputError("L^" + std::to_string(level) +
                 "(G) has no edges; the next iterated line graph does not exist"),
      level_(level) {}

IteratedLineGraph iterated_line_graph(const MultiGraph& g, int n, int cap) {
  if (n < 1) throw InputError("iteration count must be positive");
  IteratedLineGraph out;
  out.graph = g;
  for (int level = 1; level <= n; ++level) {
    if (out.graph.edge_count() == 0) throw EdgelessLevel(level - 1);
    if (out.graph.edge_count() > cap) {
      out.cap_exceeded = true;
      out.next_size = out.graph.edge_count();
      return out;
    }
    out.graph = line_graph(out.graph).graph;
    out.level = level;
  }
  return out;
}

bool is_claw_free(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v = 0; v < n; ++v) nbrs[v] = distinct_neighbors(g, v);
  auto adjacent = [&](VertexId a, VertexId b) {
    return std::binary_search(nbrs[a].begin(), nbrs[a].end(), b);
  };
  for (VertexId c = 0; c < n; ++c) {
    const auto& nb = nbrs[c];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!adjacent(nb[i], nb[k]) && !adjacent(nb[j], nb[k])) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace itline
