#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itline {

using VertexId = int;
using EdgeId = int;

/// Raised for invalid arguments: unknown vertices, loops, malformed subgraphs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
};

/// Loopless undirected multigraph. Edge ids are dense (0..m-1) and never
/// change once assigned; parallel edges get distinct ids.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);
  MultiGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const;
  VertexId other_end(EdgeId e, VertexId v) const;

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  bool is_simple() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A subgraph H of G: an edge set plus explicitly listed isolated vertices.
/// Both lists are kept sorted and duplicate free.
struct SubgraphH {
  std::vector<EdgeId> edges;
  std::vector<VertexId> isolated;

  SubgraphH() = default;
  SubgraphH(std::vector<EdgeId> edge_ids, std::vector<VertexId> isolated_vertices);

  bool empty() const { return edges.empty() && isolated.empty(); }
  friend bool operator==(const SubgraphH&, const SubgraphH&) = default;
};

/// Alternating vertex/edge sequence v0 e1 v1 ... et vt with distinct edges.
struct Trail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  bool trivial() const { return edges.empty(); }
  friend bool operator==(const Trail&, const Trail&) = default;
};

inline constexpr int kUnreachable = -1;

int degree(const MultiGraph& g, VertexId v);
std::vector<VertexId> distinct_neighbors(const MultiGraph& g, VertexId v);
int max_degree(const MultiGraph& g);

/// Breadth-first distances from a set of sources; kUnreachable where none.
std::vector<int> bfs_distances(const MultiGraph& g, std::span<const VertexId> sources);

/// All-pairs shortest path lengths, row-major n*n, kUnreachable for no path.
std::vector<int> all_pairs_distances(const MultiGraph& g);

/// min d(a_i, b_j); std::nullopt stands for infinity (no connecting path).
std::optional<int> subgraph_distance(const MultiGraph& g, std::span<const VertexId> a,
                                     std::span<const VertexId> b);

bool is_connected(const MultiGraph& g);
int diameter(const MultiGraph& g);
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);

// Subgraph helpers. validate() throws InputError when h is not a subgraph of g.
void validate(const MultiGraph& g, const SubgraphH& h);
std::vector<VertexId> vertices_of(const MultiGraph& g, const SubgraphH& h);
std::vector<int> degrees_in(const MultiGraph& g, const SubgraphH& h);
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g, const SubgraphH& h);
std::vector<EdgeId> incident_edges(const MultiGraph& g, const SubgraphH& h);
std::vector<VertexId> odd_vertices(const MultiGraph& g, const SubgraphH& h);

/// Checks consecutive incidence and edge distinctness.
bool is_valid_trail(const MultiGraph& g, const Trail& t);
std::vector<VertexId> vertices_of(const Trail& t);
/// Every edge of g has an endpoint on t.
bool dominates(const MultiGraph& g, const Trail& t);

std::string to_string(const Trail& t);

}  // namespace itline
