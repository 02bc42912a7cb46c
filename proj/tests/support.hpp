#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "itline/corpus.hpp"
#include "itline/graph.hpp"

namespace support {

/// Connected graphs with at most six vertices, enumerated once per process.
inline const std::vector<itline::CorpusGraph>& corpus6() {
  static const auto c = itline::enumerate_connected_graphs(6);
  return c;
}

/// Connected graphs with 1..7 edges.
inline const std::vector<itline::CorpusGraph>& corpus_e7() {
  static const auto c = itline::enumerate_connected_graphs_by_edges(7);
  return c;
}

inline itline::MultiGraph relabel(const itline::MultiGraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return itline::MultiGraph(g.vertex_count(), edges);
}

/// Same vertex count and the same multiset of unordered endpoint pairs.
inline bool same_edges(const itline::MultiGraph& a, const itline::MultiGraph& b) {
  auto norm = [](const itline::MultiGraph& g) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges()) es.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(es.begin(), es.end());
    return es;
  };
  return a.vertex_count() == b.vertex_count() && norm(a) == norm(b);
}

inline itline::MultiGraph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> es(edges);
  return itline::MultiGraph(n, es);
}

}  // namespace support
