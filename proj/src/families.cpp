#include "itline/families.hpp"

#include <map>

namespace itline::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void add_clique(MultiGraph& g, const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

}  // namespace

MultiGraph fig1() {
  MultiGraph g(12);
  for (VertexId v = 0; v + 1 < 11; ++v) g.add_edge(v, v + 1);
  g.add_edge(11, 2);
  g.add_edge(11, 5);
  g.add_edge(11, 8);
  return g;
}

MultiGraph fig2(int k) {
  require(k >= 1, "fig2 needs k >= 1");
  MultiGraph g(6 + 3 * k);
  for (VertexId v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6);
  VertexId next = 6;
  for (VertexId root : {0, 2, 4}) {
    VertexId prev = root;
    for (int i = 0; i < k; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

MultiGraph fig3(int s, int t) {
  require(s >= 1 && t >= 1, "fig3 needs positive s and t");
  require(t >= s + 5, "fig3 needs t >= s + 5");
  MultiGraph g(2 * t + s + 5);
  // 0..t-1 = x1..xt, t = w1, t+1..2t = yt..y1
  for (VertexId v = 0; v < 2 * t; ++v) g.add_edge(v, v + 1);
  const VertexId w1 = t;
  const VertexId z0 = 2 * t + 1;
  const VertexId w2 = z0 + s;
  VertexId prev = w1;
  for (int i = 0; i < s; ++i) {
    g.add_edge(prev, z0 + i);
    prev = z0 + i;
  }
  g.add_edge(prev, w2);
  // K4 gadget on w2..w5: four degree->=3 vertices off the long path.
  add_clique(g, {w2, w2 + 1, w2 + 2, w2 + 3});
  return g;
}

MultiGraph fig4a() {
  MultiGraph g(11);
  for (VertexId v = 0; v < 6; ++v) g.add_edge(v, v + 1);
  // 4-cycle p4 a b c
  g.add_edge(4, 7);
  g.add_edge(7, 8);
  g.add_edge(8, 9);
  g.add_edge(9, 4);
  // 2-cycle p2 d
  g.add_edge(2, 10);
  g.add_edge(2, 10);
  return g;
}

MultiGraph fig4b(int s) {
  require(s >= 1, "fig4b needs s >= 1");
  MultiGraph g(3 * s + 16);
  const VertexId c = 0;
  for (VertexId leaf = 1; leaf <= 3; ++leaf) g.add_edge(c, leaf);
  VertexId next = 4;
  for (int arm = 0; arm < 3; ++arm) {
    VertexId prev = c;
    for (int i = 0; i < s; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    const VertexId k0 = next;
    next += 4;
    g.add_edge(prev, k0);
    add_clique(g, {k0, k0 + 1, k0 + 2, k0 + 3});
  }
  return g;
}

MultiGraph path(int n) {
  require(n >= 1, "path needs n >= 1");
  MultiGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

MultiGraph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  MultiGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

MultiGraph star(int m) {
  require(m >= 1, "star needs m >= 1");
  MultiGraph g(m + 1);
  for (VertexId v = 1; v <= m; ++v) g.add_edge(0, v);
  return g;
}

MultiGraph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  MultiGraph g(n);
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  add_clique(g, all);
  return g;
}

MultiGraph two_cycle() {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  return g;
}

MultiGraph petersen() {
  MultiGraph g(10);
  for (VertexId v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);
    g.add_edge(v, v + 5);
    g.add_edge(5 + v, 5 + (v + 2) % 5);
  }
  return g;
}

namespace {

struct Entry {
  std::size_t arity;
  MultiGraph (*make)(const std::vector<int>&);
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"fig1", {0, [](const std::vector<int>&) { return fig1(); }}},
      {"fig2", {1, [](const std::vector<int>& p) { return fig2(p[0]); }}},
      {"fig3", {2, [](const std::vector<int>& p) { return fig3(p[0], p[1]); }}},
      {"fig4a", {0, [](const std::vector<int>&) { return fig4a(); }}},
      {"fig4b", {1, [](const std::vector<int>& p) { return fig4b(p[0]); }}},
      {"path", {1, [](const std::vector<int>& p) { return path(p[0]); }}},
      {"cycle", {1, [](const std::vector<int>& p) { return cycle(p[0]); }}},
      {"star", {1, [](const std::vector<int>& p) { return star(p[0]); }}},
      {"complete", {1, [](const std::vector<int>& p) { return complete(p[0]); }}},
      {"two_cycle", {0, [](const std::vector<int>&) { return two_cycle(); }}},
      {"petersen", {0, [](const std::vector<int>&) { return petersen(); }}},
  };
  return r;
}

}  // namespace

MultiGraph by_name(const std::string& name, const std::vector<int>& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown family: " + name);
  if (params.size() != it->second.arity)
    throw InputError(name + " takes " + std::to_string(it->second.arity) + " parameter(s)");
  return it->second.make(params);
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry()) out.push_back(name);
  return out;
}

}  // namespace itline::families
