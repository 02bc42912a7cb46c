#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "itline/graph.hpp"

namespace itline {

struct CorpusGraph {
  std::string id;
  MultiGraph graph;
};

/// Canonical relabeling of a simple graph: the permutation minimising the
/// upper-triangle adjacency bitstring, searched within classes of a
/// relabeling-invariant vertex signature. Returns the relabeled graph with
/// edges in ascending order. Limited to 12 vertices.
MultiGraph canonical_form(const MultiGraph& g);
/// graph6 of canonical_form(g).
std::string canonical_key(const MultiGraph& g);

inline constexpr int kMaxEnumerationVertices = 7;
inline constexpr int kMaxEnumerationEdges = 9;

/// Connected simple graphs with min_vertices..max_vertices vertices, one per
/// isomorphism class, ordered by (n, m, canonical graph6). Ids are
/// "v<n>-<4-digit index>". Throws InputError when max_vertices exceeds 7.
std::vector<CorpusGraph> enumerate_connected_graphs(int max_vertices, int min_vertices = 1);

/// Connected simple graphs with min_edges..max_edges edges, one per
/// isomorphism class, ordered by (m, n, canonical graph6). Ids are
/// "e<m>-<4-digit index>". Throws InputError when max_edges exceeds 9.
std::vector<CorpusGraph> enumerate_connected_graphs_by_edges(int max_edges, int min_edges = 1);

/// One graph6 string per non-empty line. Ids are "<prefix><line number>".
std::vector<CorpusGraph> read_g6_corpus(std::istream& in, const std::string& prefix = "line");

/// Keeps graphs that are connected and have at least min_edges edges.
std::vector<CorpusGraph> filter_corpus(std::vector<CorpusGraph> corpus, int min_edges);

}  // namespace itline
