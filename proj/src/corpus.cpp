#include "itline/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

#include "itline/io.hpp"

namespace itline {

namespace {

constexpr int kCanonicalLimit = 12;

using Adjacency = std::vector<std::vector<char>>;

Adjacency adjacency(const MultiGraph& g) {
  const int n = g.vertex_count();
  Adjacency a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Branch and bound over relabelings that respect the signature order. The
// code is the graph6 bit order: column j, rows 0..j-1.
class Canonizer {
 public:
  explicit Canonizer(const MultiGraph& g) : n_(g.vertex_count()), adj_(adjacency(g)) {
    std::vector<std::pair<int, std::vector<int>>> sig(n_);
    for (int v = 0; v < n_; ++v) {
      auto& [deg, nb] = sig[v];
      for (int w = 0; w < n_; ++w)
        if (adj_[v][w]) {
          ++deg;
          nb.push_back(static_cast<int>(std::count(adj_[w].begin(), adj_[w].end(), 1)));
        }
      std::sort(nb.begin(), nb.end());
    }
    std::vector<int> vs(n_);
    for (int v = 0; v < n_; ++v) vs[v] = v;
    std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    class_of_pos_.resize(n_);
    vertex_class_.resize(n_);
    int cls = -1;
    for (int i = 0; i < n_; ++i) {
      if (i == 0 || sig[vs[i]] != sig[vs[i - 1]]) ++cls;
      class_of_pos_[i] = cls;
      vertex_class_[vs[i]] = cls;
    }
    order_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  std::vector<int> run() {
    best_code_.clear();
    have_best_ = false;
    code_.clear();
    place(0);
    return best_order_;
  }

 private:
  // Compares the current code prefix with the same prefix of the best code.
  bool prefix_worse() const {
    if (!have_best_) return false;
    return std::lexicographical_compare(best_code_.begin(), best_code_.begin() + code_.size(),
                                        code_.begin(), code_.end());
  }

  void place(int pos) {
    if (pos == n_) {
      if (!have_best_ || code_ < best_code_) {
        best_code_ = code_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || vertex_class_[v] != class_of_pos_[pos]) continue;
      const std::size_t mark = code_.size();
      for (int i = 0; i < pos; ++i) code_.push_back(adj_[order_[i]][v]);
      if (!prefix_worse()) {
        order_[pos] = v;
        used_[v] = 1;
        place(pos + 1);
        used_[v] = 0;
      }
      code_.resize(mark);
    }
  }

  int n_;
  Adjacency adj_;
  std::vector<int> class_of_pos_;
  std::vector<int> vertex_class_;
  std::vector<int> order_;
  std::vector<char> used_;
  std::vector<char> code_;
  std::vector<char> best_code_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace

MultiGraph canonical_form(const MultiGraph& g) {
  if (!g.is_simple()) throw InputError("canonical_form needs a simple graph");
  if (g.vertex_count() > kCanonicalLimit)
    throw InputError("canonical_form is limited to 12 vertices");
  const int n = g.vertex_count();
  const auto order = Canonizer(g).run();
  std::vector<int> label(n);
  for (int pos = 0; pos < n; ++pos) label[order[pos]] = pos;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) {
    auto [a, b] = std::minmax(label[e.u], label[e.v]);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return MultiGraph(n, edges);
}

std::string canonical_key(const MultiGraph& g) { return serialize_graph6(canonical_form(g)); }

namespace {

struct Keyed {
  int n;
  int m;
  std::string key;
  MultiGraph graph;
};

MultiGraph with_extra_vertex(const MultiGraph& g, unsigned subset) {
  const int n = g.vertex_count();
  MultiGraph h(n + 1);
  for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v)
    if (subset & (1u << v)) h.add_edge(v, n);
  return h;
}

std::vector<CorpusGraph> number(std::vector<Keyed> gs, const std::string& prefix, bool by_edges) {
  std::sort(gs.begin(), gs.end(), [&](const Keyed& a, const Keyed& b) {
    if (by_edges) return std::tie(a.m, a.n, a.key) < std::tie(b.m, b.n, b.key);
    return std::tie(a.n, a.m, a.key) < std::tie(b.n, b.m, b.key);
  });
  std::vector<CorpusGraph> out;
  std::map<int, int> counter;
  for (auto& k : gs) {
    const int group = by_edges ? k.m : k.n;
    const int idx = counter[group]++;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%d-%04d", prefix.c_str(), group, idx);
    out.push_back({buf, std::move(k.graph)});
  }
  return out;
}

}  // namespace

std::vector<CorpusGraph> enumerate_connected_graphs(int max_vertices, int min_vertices) {
  if (max_vertices > kMaxEnumerationVertices)
    throw InputError("enumeration is limited to 7 vertices");
  if (max_vertices < 1) return {};
  min_vertices = std::max(min_vertices, 1);

  std::vector<Keyed> all;
  std::vector<MultiGraph> level{MultiGraph(1)};
  if (min_vertices <= 1) all.push_back({1, 0, canonical_key(level[0]), level[0]});
  for (int n = 2; n <= max_vertices; ++n) {
    std::map<std::string, MultiGraph> next;
    for (const auto& g : level)
      for (unsigned subset = 1; subset < (1u << (n - 1)); ++subset) {
        auto h = canonical_form(with_extra_vertex(g, subset));
        auto key = serialize_graph6(h);
        next.try_emplace(std::move(key), std::move(h));
      }
    level.clear();
    for (auto& [key, h] : next) {
      if (n >= min_vertices) all.push_back({n, h.edge_count(), key, h});
      level.push_back(std::move(h));
    }
  }
  return number(std::move(all), "v", false);
}

std::vector<CorpusGraph> enumerate_connected_graphs_by_edges(int max_edges, int min_edges) {
  if (max_edges > kMaxEnumerationEdges) throw InputError("enumeration is limited to 9 edges");
  min_edges = std::max(min_edges, 1);
  std::vector<Keyed> all;
  std::vector<MultiGraph> level{MultiGraph(1)};
  for (int m = 1; m <= max_edges; ++m) {
    std::map<std::string, MultiGraph> next;
    auto offer = [&](const MultiGraph& h) {
      auto c = canonical_form(h);
      next.try_emplace(serialize_graph6(c), std::move(c));
    };
    for (const auto& g : level) {
      const int n = g.vertex_count();
      const auto a = adjacency(g);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
          if (!a[u][v]) {
            MultiGraph h = g;
            h.add_edge(u, v);
            offer(h);
          }
        offer(with_extra_vertex(g, 1u << u));
      }
    }
    level.clear();
    for (auto& [key, h] : next) {
      if (m >= min_edges) all.push_back({h.vertex_count(), m, key, h});
      level.push_back(std::move(h));
    }
  }
  return number(std::move(all), "e", true);
}

std::vector<CorpusGraph> read_g6_corpus(std::istream& in, const std::string& prefix) {
  std::vector<CorpusGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({prefix + std::to_string(lineno), parse_graph6(line)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                       static_cast<std::size_t>(lineno));
    }
  }
  return out;
}

std::vector<CorpusGraph> filter_corpus(std::vector<CorpusGraph> corpus, int min_edges) {
  std::erase_if(corpus, [&](const CorpusGraph& c) {
    return c.graph.vertex_count() == 0 || c.graph.edge_count() < min_edges || !is_connected(c.graph);
  });
  return corpus;
}

}  // namespace itline
