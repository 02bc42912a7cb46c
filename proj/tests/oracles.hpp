#pragma once

// Brute-force reference implementations written straight from the
// definitions. They share no code with the library beyond MultiGraph.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "itline/graph.hpp"

namespace oracle {

using itline::EdgeId;
using itline::MultiGraph;
using itline::VertexId;

inline std::vector<int> degrees(const MultiGraph& g) {
  std::vector<int> d(g.vertex_count(), 0);
  for (const auto& e : g.edges()) ++d[e.u], ++d[e.v];
  return d;
}

inline std::vector<std::vector<char>> adjacency(const MultiGraph& g) {
  std::vector<std::vector<char>> a(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Pairs {e, f} of edges sharing an endpoint.
inline std::set<std::pair<int, int>> line_graph_pairs(const MultiGraph& g) {
  std::set<std::pair<int, int>> out;
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
        out.emplace(static_cast<int>(i), static_cast<int>(j));
  return out;
}

inline bool permutation_search(const MultiGraph& g, bool cycle) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (n == 1) return !cycle;
  const auto a = adjacency(g);
  if (cycle && n == 2) return g.edge_count() >= 2;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (cycle && p[0] != 0) break;
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = a[p[i]][p[i + 1]];
    if (ok && cycle) ok = a[p[n - 1]][p[0]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool hamiltonian_path(const MultiGraph& g) { return permutation_search(g, false); }
inline bool hamiltonian_cycle(const MultiGraph& g) { return permutation_search(g, true); }

inline bool is_order_path(const MultiGraph& g, const std::vector<VertexId>& order, bool cycle) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]++) return false;
  }
  const auto a = adjacency(g);
  for (int i = 0; i + 1 < n; ++i)
    if (!a[order[i]][order[i + 1]]) return false;
  if (cycle && n >= 3 && !a[order[n - 1]][order[0]]) return false;
  return true;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Some trail has edge set exactly F iff F is connected with 0 or 2 odd
/// vertices (Euler). A dominating trail exists iff some such F, or a single
/// vertex, touches every edge.
inline bool dominating_trail(const MultiGraph& g, bool closed) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  for (int v = 0; v < n; ++v) {
    bool all = true;
    for (const auto& e : g.edges()) all = all && (e.u == v || e.v == v);
    if (all) return true;
  }
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> d(n, 0);
    UnionFind uf(n);
    std::vector<char> on(n, 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        const auto& e = g.edge(i);
        ++d[e.u], ++d[e.v];
        uf.unite(e.u, e.v);
        on[e.u] = on[e.v] = 1;
      }
    int odd = 0, root = -1;
    bool connected = true;
    for (int v = 0; v < n; ++v) {
      if (!on[v]) continue;
      odd += d[v] % 2;
      if (root < 0) root = uf.find(v);
      connected = connected && uf.find(v) == root;
    }
    if (!connected || odd > (closed ? 0 : 2)) continue;
    bool dom = true;
    for (const auto& e : g.edges()) dom = dom && (on[e.u] || on[e.v]);
    if (dom) return true;
  }
  return false;
}

inline std::vector<int> bfs(const MultiGraph& g, const std::vector<int>& sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  for (int s : sources) dist[s] = 0, q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& e : g.edges()) {
      int w = e.u == v ? e.v : e.v == v ? e.u : -1;
      if (w >= 0 && dist[w] < 0) dist[w] = dist[v] + 1, q.push(w);
    }
  }
  return dist;
}

struct OracleBranch {
  std::vector<int> edges;
  bool has_leaf = false;
};

/// Branches by growing from each edge through degree-2 vertices.
inline std::vector<OracleBranch> branches(const MultiGraph& g) {
  const auto d = degrees(g);
  const int m = g.edge_count();
  std::vector<char> used(m, 0);
  std::vector<OracleBranch> out;
  for (int start = 0; start < m; ++start) {
    if (used[start]) continue;
    std::vector<int> es{start};
    used[start] = 1;
    bool touches_w = false;
    // Extend from each end while the end has degree 2.
    for (int side = 0; side < 2; ++side) {
      int v = side == 0 ? g.edge(start).u : g.edge(start).v;
      int prev = start;
      while (d[v] == 2) {
        int next = -1;
        for (const auto& e : g.edges())
          if (e.id != prev && (e.u == v || e.v == v)) next = e.id;
        if (next < 0 || used[next]) break;
        used[next] = 1;
        es.push_back(next);
        v = g.edge(next).u == v ? g.edge(next).v : g.edge(next).u;
        prev = next;
      }
      if (d[v] != 2) touches_w = true;
    }
    if (!touches_w) continue;  // a cycle of degree-2 vertices
    OracleBranch b;
    b.edges = es;
    for (int e : es) b.has_leaf = b.has_leaf || d[g.edge(e).u] == 1 || d[g.edge(e).v] == 1;
    out.push_back(b);
  }
  return out;
}

enum class Var { EU, EUP };

/// Conditions straight from the definitions, with (III) checked over every
/// bipartition of the components of H.
inline bool literal_conditions(const MultiGraph& g, const std::vector<int>& h_edges,
                               const std::vector<int>& h_isolated, int k, Var var,
                               bool closed_branches = true) {
  const int n = g.vertex_count();
  const auto dg = degrees(g);
  std::vector<int> dh(n, 0);
  std::vector<char> in_h(n, 0);
  std::set<int> eh(h_edges.begin(), h_edges.end());
  for (int e : h_edges) {
    ++dh[g.edge(e).u], ++dh[g.edge(e).v];
    in_h[g.edge(e).u] = in_h[g.edge(e).v] = 1;
  }
  for (int v : h_isolated) in_h[v] = 1;
  if (std::count(in_h.begin(), in_h.end(), 1) == 0) return false;

  int odd = 0;
  for (int v = 0; v < n; ++v) odd += in_h[v] && dh[v] % 2;
  if (var == Var::EU ? odd != 0 : odd > 2) return false;

  for (int v = 0; v < n; ++v) {
    if (in_h[v] && dh[v] == 0 && dg[v] < 3) return false;
    if (dg[v] >= 3 && !in_h[v]) return false;
  }

  UnionFind uf(n);
  for (int e : h_edges) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<std::vector<int>> comps;
  std::vector<int> root_index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!in_h[v]) continue;
    int r = uf.find(v);
    if (root_index[r] < 0) root_index[r] = static_cast<int>(comps.size()), comps.emplace_back();
    comps[root_index[r]].push_back(v);
  }
  const int c = static_cast<int>(comps.size());
  if (c > 20) throw std::runtime_error("oracle enumerates at most 20 components");
  std::vector<std::vector<int>> dist(c, std::vector<int>(c, -1));
  for (int i = 0; i < c; ++i) {
    const auto d = bfs(g, comps[i]);
    for (int j = 0; j < c; ++j) {
      int best = -1;
      for (int v : comps[j])
        if (d[v] >= 0 && (best < 0 || d[v] < best)) best = d[v];
      dist[i][j] = best;
    }
  }
  for (std::uint32_t side = 1; side + 1 < (1u << c); ++side) {
    if (!(side & 1)) continue;  // each bipartition once
    bool close = false;
    for (int i = 0; i < c && !close; ++i)
      for (int j = 0; j < c && !close; ++j)
        if ((side >> i & 1) && !(side >> j & 1) && dist[i][j] >= 0 && dist[i][j] <= k - 1)
          close = true;
    if (!close) return false;
  }

  for (const auto& b : oracle::branches(g)) {
    bool avoided = true;
    for (int e : b.edges) avoided = avoided && !eh.count(e);
    const int len = static_cast<int>(b.edges.size());
    bool closed_b = false;
    {
      // closed when both ends coincide: count end vertices of odd multiplicity
      std::vector<int> cnt(n, 0);
      for (int e : b.edges) ++cnt[g.edge(e).u], ++cnt[g.edge(e).v];
      closed_b = std::none_of(cnt.begin(), cnt.end(), [](int x) { return x % 2; });
    }
    if (avoided && len > k + 1 && (closed_branches || !closed_b)) return false;
    if (b.has_leaf && len > k && (var == Var::EU || avoided)) return false;
  }
  return true;
}

/// EU_k / EUP_k nonempty, by trying every edge subset with the forced
/// isolated set V_{>=3} minus V(S).
inline bool family_nonempty(const MultiGraph& g, int k, Var var, bool closed_branches = true) {
  const int m = g.edge_count();
  const auto d = degrees(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> es;
    std::vector<char> touched(g.vertex_count(), 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) es.push_back(i), touched[g.edge(i).u] = touched[g.edge(i).v] = 1;
    std::vector<int> iso;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (d[v] >= 3 && !touched[v]) iso.push_back(v);
    if (literal_conditions(g, es, iso, k, var, closed_branches)) return true;
  }
  return false;
}

/// (most distinct vertices, fewest degree->=3 vertices missed) over all
/// trails, via edge sets with an Euler trail plus single-vertex trails.
inline std::pair<int, int> max_trail_stats(const MultiGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto d = degrees(g);
  int high = 0;
  for (int v = 0; v < n; ++v) high += d[v] >= 3;
  std::pair<int, int> best{1, high};
  for (int v = 0; v < n; ++v) best.second = std::min(best.second, high - (d[v] >= 3 ? 1 : 0));
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> dd(n, 0);
    UnionFind uf(n);
    std::vector<char> on(n, 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        const auto& e = g.edge(i);
        ++dd[e.u], ++dd[e.v];
        uf.unite(e.u, e.v);
        on[e.u] = on[e.v] = 1;
      }
    int odd = 0, root = -1, count = 0, missed = 0;
    bool connected = true;
    for (int v = 0; v < n; ++v) {
      if (!on[v]) {
        missed += d[v] >= 3;
        continue;
      }
      ++count;
      odd += dd[v] % 2;
      if (root < 0) root = uf.find(v);
      connected = connected && uf.find(v) == root;
    }
    if (!connected || odd > 2) continue;
    if (count > best.first || (count == best.first && missed < best.second)) best = {count, missed};
  }
  return best;
}

}  // namespace oracle
