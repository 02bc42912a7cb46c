#include "itline/indices.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "itline/line_graph.hpp"
#include "itline/structure.hpp"

namespace itline {

std::string to_string(IndexMethod m) {
  switch (m) {
    case IndexMethod::DirectOracle: return "direct_oracle";
    case IndexMethod::DominatingTrail: return "dominating_trail";
    case IndexMethod::EupWitness: return "eup_witness";
    case IndexMethod::EuWitness: return "eu_witness";
  }
  return "?";
}

std::string to_string(CrossCheckStatus s) {
  switch (s) {
    case CrossCheckStatus::Confirmed: return "confirmed";
    case CrossCheckStatus::CapExceeded: return "cap_exceeded";
    case CrossCheckStatus::Mismatch: return "mismatch";
  }
  return "?";
}

bool is_path_graph(const MultiGraph& g) {
  if (g.vertex_count() == 0) return false;
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1 && max_degree(g) <= 2;
}

namespace {

void require_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph is disconnected");
}

HamiltonOptions hamilton_options(const IndexOptions& o) {
  HamiltonOptions h;
  h.dp_cap = o.dp_cap;
  h.budget = o.budget;
  return h;
}

WitnessSearchOptions witness_options(const IndexOptions& o) {
  WitnessSearchOptions w;
  w.budget = o.budget;
  w.conditions = o.conditions;
  w.workers = o.workers;
  return w;
}

IndexResult unknown(std::string why) {
  IndexResult r;
  r.status = SearchStatus::Unknown;
  r.diagnostics = std::move(why);
  return r;
}

IndexResult found(int value, IndexMethod method, IndexWitness witness) {
  IndexResult r;
  r.status = SearchStatus::Found;
  r.value = value;
  r.method = method;
  r.witness = std::move(witness);
  return r;
}

void attach_cross_check(const MultiGraph& g, IndexResult& r, IndexKind kind,
                        const IndexOptions& opts) {
  if (!opts.cross_check || r.status != SearchStatus::Found) return;
  r.cross_check = direct_index_cross_check(g, r.value, kind, opts.cross_check_cap,
                                           hamilton_options(opts));
}

}  // namespace

IndexResult hamiltonian_path_index(const MultiGraph& g, const IndexOptions& opts) {
  require_connected(g);
  auto r = [&]() -> IndexResult {
    const auto hp = has_hamiltonian_path(g, hamilton_options(opts));
    if (hp.status == SearchStatus::Unknown) return unknown("hamiltonian path oracle: " + hp.diagnostics);
    if (hp.status == SearchStatus::Found) return found(0, IndexMethod::DirectOracle, hp.order);

    if (g.edge_count() >= 3) {
      const auto dt = find_dominating_trail(g, false, opts.budget);
      if (dt.status == SearchStatus::Unknown) return unknown("dominating trail search out of budget");
      if (dt.status == SearchStatus::Found) return found(1, IndexMethod::DominatingTrail, *dt.trail);
    }

    const int limit = std::max(2, bound_cor2(g));
    const auto wopts = witness_options(opts);
    for (int k = 2; k <= limit; ++k) {
      const auto w = find_witness(g, k, Variant::EUP, wopts);
      if (w.status == SearchStatus::Unknown)
        return unknown("EUP_" + std::to_string(k) + " search out of budget");
      if (w.status == SearchStatus::Found) return found(k, IndexMethod::EupWitness, *w.witness);
    }
    throw std::logic_error("no EUP_k witness up to the diameter bound " + std::to_string(limit));
  }();
  attach_cross_check(g, r, IndexKind::Path, opts);
  return r;
}

IndexResult hamiltonian_index(const MultiGraph& g, const IndexOptions& opts) {
  require_connected(g);
  if (is_path_graph(g)) throw PathHasNoIndex();
  auto r = [&]() -> IndexResult {
    const auto hc = has_hamiltonian_cycle(g, hamilton_options(opts));
    if (hc.status == SearchStatus::Unknown) return unknown("hamiltonian cycle oracle: " + hc.diagnostics);
    if (hc.status == SearchStatus::Found) return found(0, IndexMethod::DirectOracle, hc.order);

    if (g.edge_count() >= 3) {
      const auto dt = find_dominating_trail(g, true, opts.budget);
      if (dt.status == SearchStatus::Unknown) return unknown("closed dominating trail search out of budget");
      if (dt.status == SearchStatus::Found) return found(1, IndexMethod::DominatingTrail, *dt.trail);
    }

    int limit = diameter(g) + 1;
    for (const auto& b : branches(g)) limit = std::max(limit, b.length());
    limit = std::max(limit, 2);
    const auto wopts = witness_options(opts);
    for (int k = 2; k <= limit; ++k) {
      const auto w = find_witness(g, k, Variant::EU, wopts);
      if (w.status == SearchStatus::Unknown)
        return unknown("EU_" + std::to_string(k) + " search out of budget");
      if (w.status == SearchStatus::Found) return found(k, IndexMethod::EuWitness, *w.witness);
    }
    throw std::logic_error("no EU_k witness up to k = " + std::to_string(limit));
  }();
  attach_cross_check(g, r, IndexKind::Cycle, opts);
  return r;
}

CrossCheck direct_index_cross_check(const MultiGraph& g, int claimed, IndexKind kind,
                                    int vertex_cap, const HamiltonOptions& hamilton) {
  if (claimed < 0) throw InputError("claimed index must be nonnegative");
  const char* what = kind == IndexKind::Path ? "traceable" : "hamiltonian";

  // nullopt: undecided within the cap.
  auto oracle = [&](const MultiGraph& h) -> std::optional<bool> {
    if (h.vertex_count() > vertex_cap) return std::nullopt;
    const auto res = kind == IndexKind::Path ? has_hamiltonian_path(h, hamilton)
                                             : has_hamiltonian_cycle(h, hamilton);
    if (res.status == SearchStatus::Unknown) return std::nullopt;
    return res.status == SearchStatus::Found;
  };

  CrossCheck out;
  MultiGraph cur = g;
  const int first_checked = std::max(0, claimed - 1);
  for (int level = 0; level <= claimed; ++level) {
    if (level >= first_checked) {
      const bool expect = level == claimed;
      const auto got = oracle(cur);
      if (!got) {
        out.status = CrossCheckStatus::CapExceeded;
        out.diagnostics = "L^" + std::to_string(level) + " has " +
                          std::to_string(cur.vertex_count()) + " vertices, beyond the cap " +
                          std::to_string(vertex_cap);
        return out;
      }
      if (*got != expect) {
        out.status = CrossCheckStatus::Mismatch;
        out.diagnostics = "L^" + std::to_string(level) + (*got ? " is " : " is not ") + what;
        return out;
      }
    }
    if (level == claimed) break;
    if (cur.edge_count() == 0) {
      out.status = CrossCheckStatus::Mismatch;
      out.diagnostics = "L^" + std::to_string(level) + " has no edges";
      return out;
    }
    if (cur.edge_count() > kDefaultVertexCap) {
      out.status = CrossCheckStatus::CapExceeded;
      out.diagnostics = "L^" + std::to_string(level + 1) + " would have " +
                        std::to_string(cur.edge_count()) + " vertices";
      return out;
    }
    cur = line_graph(cur).graph;
  }
  out.status = CrossCheckStatus::Confirmed;
  out.diagnostics = "level " + std::to_string(claimed) + " is the first " + what + " one";
  return out;
}

int delta_prime(const MultiGraph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, static_cast<int>(distinct_neighbors(g, v).size()));
  return best;
}

int d3_doublestar(const MultiGraph& g) {
  const int dp = delta_prime(g);
  const auto high = degree_classes(g).high;
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nb = distinct_neighbors(g, v);
    if (static_cast<int>(nb.size()) != dp) continue;
    int outside = 0;
    for (VertexId x : high)
      if (!std::binary_search(nb.begin(), nb.end(), x)) ++outside;
    best = std::max(best, outside);
  }
  return best;
}

int BoundsReport::min_bound() const { return std::min({thm_b1, cor1, cor2, thm_b2}); }

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

int thm_b2_from(int n, int dp, int dss) { return floor_div(n - dp - dss, 3) + 3; }

}  // namespace

BoundsReport compute_bounds(const MultiGraph& g, const SearchBudget& budget) {
  require_connected(g);
  BoundsReport b;
  auto& in = b.ingredients;
  in.n = g.vertex_count();
  const auto mt = max_trail(g, budget);
  b.status = mt.status;
  in.mt_star = mt.mt_star;
  in.d3_star = mt.d3_star;
  in.diam = diameter(g);
  in.delta_prime = delta_prime(g);
  in.d3_doublestar = d3_doublestar(g);
  b.thm_b1 = in.n - in.mt_star - in.d3_star + 2;
  b.cor1 = std::max(1, in.n - in.mt_star);
  b.cor2 = std::max(1, in.n - in.diam - 1);
  b.thm_b2 = thm_b2_from(in.n, in.delta_prime, in.d3_doublestar);
  return b;
}

namespace {

MaxTrailResult settled_max_trail(const MultiGraph& g, const SearchBudget& budget) {
  require_connected(g);
  auto mt = max_trail(g, budget);
  if (mt.status != SearchStatus::Found) throw std::runtime_error("MT* search out of budget");
  return mt;
}

}  // namespace

int bound_thm_b1(const MultiGraph& g, const SearchBudget& budget) {
  const auto mt = settled_max_trail(g, budget);
  return g.vertex_count() - mt.mt_star - mt.d3_star + 2;
}

int bound_cor1(const MultiGraph& g, const SearchBudget& budget) {
  const auto mt = settled_max_trail(g, budget);
  return std::max(1, g.vertex_count() - mt.mt_star);
}

int bound_cor2(const MultiGraph& g) {
  require_connected(g);
  return std::max(1, g.vertex_count() - diameter(g) - 1);
}

int bound_thm_b2(const MultiGraph& g) {
  require_connected(g);
  return thm_b2_from(g.vertex_count(), delta_prime(g), d3_doublestar(g));
}

SubgraphH two_branch_witness(const MultiGraph& g) {
  require_connected(g);
  std::vector<Branch> open;
  for (auto& b : branches(g))
    if (!b.closed) open.push_back(std::move(b));
  if (open.size() < 2) throw InputError("graph has fewer than two open branches");

  auto low_degree_count = [&](const Branch& b) {
    std::set<VertexId> vs(b.vertices.begin(), b.vertices.end());
    return static_cast<int>(std::count_if(vs.begin(), vs.end(),
                                          [&](VertexId v) { return degree(g, v) <= 2; }));
  };
  std::vector<int> order(open.size());
  for (std::size_t i = 0; i < open.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int sa = low_degree_count(open[a]), sb = low_degree_count(open[b]);
    if (sa != sb) return sa > sb;
    return open[a].length() > open[b].length();
  });
  const Branch& b1 = open[order[0]];
  const Branch& b2 = open[order[1]];

  std::vector<EdgeId> edges(b1.edges.begin(), b1.edges.end());
  edges.insert(edges.end(), b2.edges.begin(), b2.edges.end());

  // Shortest path from V(b1) to V(b2), by multi-source BFS with parents.
  const int n = g.vertex_count();
  std::vector<int> dist(n, kUnreachable);
  std::vector<EdgeId> via(n, -1);
  std::deque<VertexId> q;
  for (VertexId v : b1.vertices)
    if (dist[v] == kUnreachable) {
      dist[v] = 0;
      q.push_back(v);
    }
  std::set<VertexId> targets(b2.vertices.begin(), b2.vertices.end());
  VertexId hit = -1;
  while (!q.empty() && hit < 0) {
    const VertexId v = q.front();
    q.pop_front();
    if (targets.count(v)) {
      hit = v;
      break;
    }
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other_end(e, v);
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      via[w] = e;
      q.push_back(w);
    }
  }
  for (VertexId v = hit; v >= 0 && via[v] >= 0; v = g.other_end(via[v], v)) edges.push_back(via[v]);

  for (const auto& c : pendent_cycles(g)) edges.insert(edges.end(), c.edges.begin(), c.edges.end());
  return canonical_subgraph(g, std::move(edges));
}

nlohmann::json to_json(const IndexResult& r) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  j["value"] = r.status == SearchStatus::Found ? nlohmann::json(r.value) : nlohmann::json(nullptr);
  j["method"] = to_string(r.method);
  if (const auto* order = std::get_if<std::vector<VertexId>>(&r.witness)) {
    j["witness"] = {{"kind", "order"}, {"vertices", *order}};
  } else if (const auto* t = std::get_if<Trail>(&r.witness)) {
    j["witness"] = {{"kind", "trail"}, {"vertices", t->vertices}, {"edges", t->edges}};
  } else if (const auto* h = std::get_if<SubgraphH>(&r.witness)) {
    j["witness"] = {{"kind", "subgraph"}, {"edges", h->edges}, {"isolated_vertices", h->isolated}};
  } else {
    j["witness"] = nullptr;
  }
  if (r.cross_check)
    j["cross_check"] = {{"status", to_string(r.cross_check->status)},
                        {"diagnostics", r.cross_check->diagnostics}};
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

nlohmann::json to_json(const BoundsReport& b) {
  const auto& in = b.ingredients;
  return {{"status", to_string(b.status)},
          {"thm_b1", b.thm_b1},
          {"cor1", b.cor1},
          {"cor2", b.cor2},
          {"thm_b2", b.thm_b2},
          {"min", b.min_bound()},
          {"ingredients",
           {{"n", in.n},
            {"mt_star", in.mt_star},
            {"d3_star", in.d3_star},
            {"diam", in.diam},
            {"delta_prime", in.delta_prime},
            {"d3_doublestar", in.d3_doublestar}}}};
}

nlohmann::json index_summary_json(const std::string& graph_id, const IndexResult& hp,
                                  const std::optional<IndexResult>& h, const BoundsReport& b) {
  auto settled = [](const IndexResult& r) {
    return r.status == SearchStatus::Found ? nlohmann::json(r.value) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["graph_id"] = graph_id;
  j["hp"] = settled(hp);
  j["hp_method"] = to_string(hp.method);
  j["h"] = h ? settled(*h) : nlohmann::json(nullptr);
  j["bounds"] = {{"thm_b1", b.thm_b1}, {"cor1", b.cor1}, {"cor2", b.cor2}, {"thm_b2", b.thm_b2}};
  nlohmann::json checks = nlohmann::json::object();
  if (hp.status == SearchStatus::Found) {
    if (b.status == SearchStatus::Found) {
      checks["hp_le_thm_b1"] = hp.value <= b.thm_b1;
      checks["hp_le_cor1"] = hp.value <= b.cor1;
    }
    checks["hp_le_cor2"] = hp.value <= b.cor2;
    checks["hp_le_thm_b2"] = hp.value <= b.thm_b2;
    if (h && h->status == SearchStatus::Found) checks["hp_le_h"] = hp.value <= h->value;
  }
  j["checks"] = checks;
  return j;
}

}  // namespace itline
