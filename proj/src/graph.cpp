#include "itline/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace itline {

namespace {

void require_vertex(const MultiGraph& g, VertexId v) {
  if (!g.has_vertex(v))
    throw InputError("unknown vertex " + std::to_string(v) + " (graph has " +
                     std::to_string(g.vertex_count()) + " vertices)");
}

void sort_unique(std::vector<int>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MultiGraph::MultiGraph(int vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  incidence_.resize(vertex_count);
}

MultiGraph::MultiGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
    : MultiGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  require_vertex(*this, u);
  require_vertex(*this, v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " is not allowed");
  const EdgeId id = edge_count();
  edges_.push_back({id, u, v});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw InputError("unknown edge " + std::to_string(e));
  return edges_[e];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  require_vertex(*this, v);
  return incidence_[v];
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw InputError("edge " + std::to_string(e) + " is not incident with vertex " +
                   std::to_string(v));
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    if (a.edges_[e].u != b.edges_[e].u || a.edges_[e].v != b.edges_[e].v) return false;
  }
  return true;
}

SubgraphH::SubgraphH(std::vector<EdgeId> edge_ids, std::vector<VertexId> isolated_vertices)
    : edges(std::move(edge_ids)), isolated(std::move(isolated_vertices)) {
  sort_unique(edges);
  sort_unique(isolated);
}

int degree(const MultiGraph& g, VertexId v) { return static_cast<int>(g.incident(v).size()); }

std::vector<VertexId> distinct_neighbors(const MultiGraph& g, VertexId v) {
  std::vector<VertexId> out;
  for (EdgeId e : g.incident(v)) out.push_back(g.other_end(e, v));
  sort_unique(out);
  return out;
}

int max_degree(const MultiGraph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, degree(g, v));
  return best;
}

std::vector<int> bfs_distances(const MultiGraph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    require_vertex(g, s);
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other_end(e, v);
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (VertexId s = 0; s < n; ++s) {
    const VertexId src[] = {s};
    auto row = bfs_distances(g, src);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return out;
}

std::optional<int> subgraph_distance(const MultiGraph& g, std::span<const VertexId> a,
                                     std::span<const VertexId> b) {
  if (a.empty() || b.empty()) throw InputError("subgraph_distance needs nonempty vertex sets");
  for (VertexId v : b) require_vertex(g, v);
  const auto dist = bfs_distances(g, a);
  std::optional<int> best;
  for (VertexId v : b) {
    if (dist[v] == kUnreachable) continue;
    if (!best || dist[v] < *best) best = dist[v];
  }
  return best;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  const VertexId src[] = {0};
  const auto dist = bfs_distances(g, src);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int diameter(const MultiGraph& g) {
  if (!is_connected(g)) throw InputError("diameter of a disconnected graph is undefined");
  int best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const VertexId src[] = {s};
    const auto dist = bfs_distances(g, src);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
  std::vector<int> seen(g.vertex_count(), 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    const VertexId src[] = {s};
    const auto dist = bfs_distances(g, src);
    std::vector<VertexId> comp;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] != kUnreachable) {
        comp.push_back(v);
        seen[v] = 1;
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

void validate(const MultiGraph& g, const SubgraphH& h) {
  if (!std::is_sorted(h.edges.begin(), h.edges.end()) ||
      std::adjacent_find(h.edges.begin(), h.edges.end()) != h.edges.end())
    throw InputError("subgraph edge list must be sorted and duplicate free");
  std::vector<char> touched(g.vertex_count(), 0);
  for (EdgeId e : h.edges) {
    const Edge& ed = g.edge(e);
    touched[ed.u] = touched[ed.v] = 1;
  }
  for (VertexId v : h.isolated) {
    require_vertex(g, v);
    if (touched[v])
      throw InputError("vertex " + std::to_string(v) +
                       " is listed as isolated but has an incident subgraph edge");
  }
}

std::vector<VertexId> vertices_of(const MultiGraph& g, const SubgraphH& h) {
  std::vector<VertexId> out(h.isolated.begin(), h.isolated.end());
  for (EdgeId e : h.edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  sort_unique(out);
  return out;
}

std::vector<int> degrees_in(const MultiGraph& g, const SubgraphH& h) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : h.edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g, const SubgraphH& h) {
  UnionFind uf(g.vertex_count());
  for (EdgeId e : h.edges) uf.unite(g.edge(e).u, g.edge(e).v);
  const auto verts = vertices_of(g, h);
  std::vector<std::vector<VertexId>> out;
  std::vector<int> slot(g.vertex_count(), -1);
  for (VertexId v : verts) {
    const int root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

std::vector<EdgeId> incident_edges(const MultiGraph& g, const SubgraphH& h) {
  std::vector<EdgeId> out;
  for (VertexId v : vertices_of(g, h)) {
    for (EdgeId e : g.incident(v)) out.push_back(e);
  }
  sort_unique(out);
  return out;
}

std::vector<VertexId> odd_vertices(const MultiGraph& g, const SubgraphH& h) {
  const auto deg = degrees_in(g, h);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] % 2 == 1) out.push_back(v);
  }
  return out;
}

bool is_valid_trail(const MultiGraph& g, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1) return false;
  for (VertexId v : t.vertices) {
    if (!g.has_vertex(v)) return false;
  }
  std::vector<char> used(g.edge_count(), 0);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (e < 0 || e >= g.edge_count() || used[e]) return false;
    used[e] = 1;
    const Edge& ed = g.edge(e);
    const VertexId a = t.vertices[i];
    const VertexId b = t.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

std::vector<VertexId> vertices_of(const Trail& t) {
  std::vector<VertexId> out(t.vertices.begin(), t.vertices.end());
  sort_unique(out);
  return out;
}

bool dominates(const MultiGraph& g, const Trail& t) {
  std::vector<char> on(g.vertex_count(), 0);
  for (VertexId v : t.vertices) on[v] = 1;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return on[e.u] || on[e.v]; });
}

std::string to_string(const Trail& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (i) os << " -[" << t.edges[i - 1] << "]- ";
    os << t.vertices[i];
  }
  return os.str();
}

}  // namespace itline
