#include "itline/eup.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "itline/structure.hpp"

namespace itline {

std::string to_string(Variant v) { return v == Variant::EU ? "eu" : "eup"; }

Variant parse_variant(const std::string& s) {
  if (s == "eu" || s == "EU") return Variant::EU;
  if (s == "eup" || s == "EUP") return Variant::EUP;
  throw InputError("unknown variant '" + s + "' (expected eu or eup)");
}

std::string ConditionReport::first_failure() const {
  if (!nonempty.pass) return "nonempty";
  if (!parity.pass) return variant == Variant::EU ? "I" : "I'";
  if (!isolated.pass) return "II";
  if (!distance.pass) return "III";
  if (!branches.pass) return "IV";
  if (!pendant.pass) return variant == Variant::EU ? "V" : "V'";
  return {};
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

std::string describe(const Branch& b) {
  return "branch " + join(b.vertices) + " of length " + std::to_string(b.length());
}

/// Connectivity of the auxiliary graph on components, joined when their
/// distance in G is at most `threshold`. Returns the component indices
/// reachable from component 0.
std::vector<char> linked_components(const std::vector<std::vector<int>>& comp_dist,
                                    int threshold) {
  const std::size_t c = comp_dist.size();
  std::vector<char> seen(c, 0);
  if (c == 0) return seen;
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < c; ++b) {
      const int d = comp_dist[a][b];
      if (!seen[b] && d != kUnreachable && d <= threshold) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return seen;
}

}  // namespace

ConditionReport check_conditions(const MultiGraph& g, const SubgraphH& h, int k, Variant variant,
                                 const ConditionOptions& opts) {
  if (k < 1) throw InputError("k must be positive");
  validate(g, h);
  ConditionReport r;
  r.variant = variant;
  r.k = k;

  const auto verts = vertices_of(g, h);
  if (verts.empty()) r.nonempty = {false, "H has no vertices"};

  const auto odd = odd_vertices(g, h);
  const std::size_t odd_limit = variant == Variant::EU ? 0 : 2;
  if (odd.size() > odd_limit)
    r.parity = {false, "odd vertices " + join(odd) + " exceed " + std::to_string(odd_limit)};

  std::vector<char> in_h(g.vertex_count(), 0);
  for (VertexId v : verts) in_h[v] = 1;
  for (VertexId v : h.isolated) {
    if (degree(g, v) < 3) {
      r.isolated = {false, "isolated vertex " + std::to_string(v) + " has degree " +
                               std::to_string(degree(g, v)) + " in G"};
      break;
    }
  }
  if (r.isolated.pass) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (degree(g, v) >= 3 && !in_h[v]) {
        r.isolated = {false, "vertex " + std::to_string(v) + " of degree " +
                                 std::to_string(degree(g, v)) + " is missing from H"};
        break;
      }
    }
  }

  const auto comps = connected_components(g, h);
  if (comps.size() > 1) {
    std::vector<std::vector<int>> comp_dist(comps.size(), std::vector<int>(comps.size(), 0));
    for (std::size_t a = 0; a < comps.size(); ++a) {
      const auto dist = bfs_distances(g, comps[a]);
      for (std::size_t b = 0; b < comps.size(); ++b) {
        int best = kUnreachable;
        for (VertexId v : comps[b]) {
          if (dist[v] != kUnreachable && (best == kUnreachable || dist[v] < best)) best = dist[v];
        }
        comp_dist[a][b] = best;
      }
    }
    const auto seen = linked_components(comp_dist, k - 1);
    std::vector<int> near, far;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (VertexId v : comps[c]) (seen[c] ? near : far).push_back(v);
    }
    if (!far.empty()) {
      int gap = kUnreachable;
      for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = 0; b < comps.size(); ++b) {
          const int d = comp_dist[a][b];
          if (seen[a] && !seen[b] && d != kUnreachable && (gap == kUnreachable || d < gap)) gap = d;
        }
      }
      std::sort(near.begin(), near.end());
      std::sort(far.begin(), far.end());
      r.distance = {false, "components " + join(near) + " and " + join(far) + " are " +
                               (gap == kUnreachable ? std::string("disconnected")
                                                    : "at distance " + std::to_string(gap)) +
                               " > " + std::to_string(k - 1)};
    }
  }

  std::vector<char> in_edges(g.edge_count(), 0);
  for (EdgeId e : h.edges) in_edges[e] = 1;
  const auto all = branches(g);
  for (const Branch& b : all) {
    const bool avoided =
        std::none_of(b.edges.begin(), b.edges.end(), [&](EdgeId e) { return in_edges[e]; });
    if (r.branches.pass && avoided && (!b.closed || opts.closed_branches_count) &&
        b.length() > k + 1)
      r.branches = {false, describe(b) + " avoided by H exceeds " + std::to_string(k + 1)};
    if (r.pendant.pass && b.touches_degree_one && (variant == Variant::EU || avoided) &&
        b.length() > k)
      r.pendant = {false, describe(b) + (variant == Variant::EU ? "" : " avoided by H") +
                              " exceeds " + std::to_string(k)};
  }
  return r;
}

SubgraphH canonical_subgraph(const MultiGraph& g, std::vector<EdgeId> edges) {
  std::vector<char> touched(g.vertex_count(), 0);
  for (EdgeId e : edges) touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  std::vector<VertexId> extra;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) >= 3 && !touched[v]) extra.push_back(v);
  }
  return SubgraphH(std::move(edges), std::move(extra));
}

namespace {

/// A decision unit is a branch (or, when G is a cycle, the whole cycle). Each
/// option is an inclusion pattern over its edges. Patterns with three or more
/// odd inner vertices can never appear in a witness; among the rest only the
/// maximal representative of each parity class is kept, since growing a
/// component of H without changing parities cannot break any condition.
struct Option {
  std::vector<EdgeId> edges;
  int front_flip = 0;  // 1 if the pattern uses the edge at the front end
  int back_flip = 0;
  int inner_odd = 0;
};

struct Unit {
  std::vector<EdgeId> edges;
  VertexId front = -1;  // -1 for a cycle unit
  VertexId back = -1;
  bool touches_degree_one = false;
  std::vector<Option> options;
};

Option make_option(const Unit& u, const std::vector<char>& mask, bool cyclic) {
  Option o;
  const std::size_t len = mask.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (mask[i]) o.edges.push_back(u.edges[i]);
  }
  const std::size_t inner = cyclic ? len : len - 1;
  for (std::size_t i = 0; i < inner; ++i) {
    const int used = mask[i] + mask[(i + 1) % len];
    o.inner_odd += used == 1 ? 1 : 0;
  }
  if (!cyclic) {
    o.front_flip = mask.front();
    o.back_flip = mask.back();
  }
  return o;
}

class WitnessSearch {
 public:
  WitnessSearch(const MultiGraph& g, int k, Variant variant, const WitnessSearchOptions& opts)
      : g_(g), k_(k), variant_(variant), opts_(opts), meter_(opts.budget) {
    n_ = g.vertex_count();
    dist_ = all_pairs_distances(g);
    high_.assign(n_, 0);
    for (VertexId v = 0; v < n_; ++v) high_[v] = degree(g, v) >= 3 ? 1 : 0;
    odd_limit_ = variant == Variant::EU ? 0 : 2;
    build_units();
  }

  bool infeasible() const { return infeasible_; }
  std::size_t unit_count() const { return units_.size(); }

  struct State {
    std::vector<int> parity;
    std::vector<int> remaining;
    std::vector<int> choice;
    int odd = 0;
  };

  State initial_state() const {
    State s;
    s.parity.assign(n_, 0);
    s.remaining = ends_at_;
    s.choice.assign(units_.size(), -1);
    return s;
  }

  /// Applies option `o` of unit `i`; returns false if the odd budget breaks.
  bool apply(State& s, std::size_t i, int o) const {
    const Unit& u = units_[i];
    const Option& opt = u.options[o];
    s.choice[i] = o;
    s.odd += opt.inner_odd;
    if (u.front >= 0) {
      s.parity[u.front] ^= opt.front_flip;
      s.parity[u.back] ^= opt.back_flip;
      if (--s.remaining[u.front] == 0) s.odd += s.parity[u.front];
      if (--s.remaining[u.back] == 0) s.odd += s.parity[u.back];
    }
    return s.odd <= odd_limit_;
  }

  void undo(State& s, std::size_t i, int o) const {
    const Unit& u = units_[i];
    const Option& opt = u.options[o];
    if (u.front >= 0) {
      if (s.remaining[u.back]++ == 0) s.odd -= s.parity[u.back];
      if (s.remaining[u.front]++ == 0) s.odd -= s.parity[u.front];
      s.parity[u.back] ^= opt.back_flip;
      s.parity[u.front] ^= opt.front_flip;
    }
    s.odd -= opt.inner_odd;
    s.choice[i] = -1;
  }

  /// Depth-first over units from `depth`. Returns Found/NotFound/Unknown.
  SearchStatus dfs(State& s, std::size_t depth, const std::atomic<bool>* cancel) {
    if (cancel && cancel->load(std::memory_order_relaxed)) return SearchStatus::Unknown;
    if (depth == units_.size()) return leaf(s) ? SearchStatus::Found : SearchStatus::NotFound;
    const auto& options = units_[depth].options;
    for (int o = 0; o < static_cast<int>(options.size()); ++o) {
      if (!meter_.spend()) return SearchStatus::Unknown;
      const bool ok = apply(s, depth, o);
      SearchStatus r = SearchStatus::NotFound;
      if (ok) r = dfs(s, depth + 1, cancel);
      if (r == SearchStatus::Found) return r;
      undo(s, depth, o);
      if (r == SearchStatus::Unknown) return r;
    }
    return SearchStatus::NotFound;
  }

  /// Enumerates consistent choices for the first `depth` units.
  void prefixes(State& s, std::size_t at, std::size_t depth, std::vector<std::vector<int>>& out) {
    if (at == depth) {
      out.emplace_back(s.choice.begin(), s.choice.begin() + static_cast<std::ptrdiff_t>(depth));
      return;
    }
    for (int o = 0; o < static_cast<int>(units_[at].options.size()); ++o) {
      if (apply(s, at, o)) prefixes(s, at + 1, depth, out);
      undo(s, at, o);
    }
  }

  SubgraphH subgraph_of(const State& s) const {
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      const auto& opt = units_[i].options[s.choice[i]];
      edges.insert(edges.end(), opt.edges.begin(), opt.edges.end());
    }
    return canonical_subgraph(g_, std::move(edges));
  }

  BudgetMeter& meter() { return meter_; }
  std::uint64_t leaves() const { return leaves_.load(); }

 private:
  void build_units() {
    const auto all = branches(g_);
    if (all.empty() && g_.edge_count() > 0) {
      // Connected with no W-vertex: G is a cycle.
      Unit u;
      for (EdgeId e = 0; e < g_.edge_count(); ++e) u.edges.push_back(e);
      // Order edges around the cycle.
      std::vector<EdgeId> ordered;
      std::vector<char> used(g_.edge_count(), 0);
      VertexId cur = 0;
      EdgeId e = g_.incident(0)[0];
      for (int i = 0; i < g_.edge_count(); ++i) {
        ordered.push_back(e);
        used[e] = 1;
        cur = g_.other_end(e, cur);
        for (EdgeId f : g_.incident(cur)) {
          if (!used[f]) {
            e = f;
            break;
          }
        }
      }
      u.edges = ordered;
      const std::size_t len = u.edges.size();
      u.options.push_back(make_option(u, std::vector<char>(len, 0), true));
      u.options.push_back(make_option(u, std::vector<char>(len, 1), true));
      if (variant_ == Variant::EUP) {
        std::vector<char> mask(len, 1);
        mask[len - 1] = 0;
        u.options.push_back(make_option(u, mask, true));
      }
      units_.push_back(std::move(u));
    }

    std::vector<Unit> pending;
    for (const Branch& b : all) {
      if (variant_ == Variant::EU && b.touches_degree_one && b.length() > k_) {
        infeasible_ = true;  // (V) holds for no H at all
      }
      Unit u;
      u.edges = b.edges;
      u.front = b.front();
      u.back = b.back();
      u.touches_degree_one = b.touches_degree_one;
      const std::size_t len = u.edges.size();
      std::vector<std::vector<char>> masks;
      const bool may_avoid = !((!b.closed || opts_.conditions.closed_branches_count) &&
                               b.length() > k_ + 1) &&
                             !(variant_ == Variant::EUP && b.touches_degree_one && b.length() > k_);
      masks.emplace_back(len, 1);
      if (variant_ == Variant::EUP && len >= 2) {
        std::vector<char> drop_last(len, 1), drop_first(len, 1);
        drop_last[len - 1] = 0;
        drop_first[0] = 0;
        masks.push_back(drop_last);
        if (!b.closed) masks.push_back(drop_first);
        if (len >= 3) {
          std::vector<char> gap(len, 1), inner(len, 1);
          gap[1] = 0;
          inner.front() = inner.back() = 0;
          masks.push_back(gap);
          if (!b.closed) masks.push_back(inner);
        }
      }
      // Fuller patterns first: they reach connected candidates sooner.
      if (may_avoid) masks.emplace_back(len, 0);
      for (const auto& m : masks) u.options.push_back(make_option(u, m, false));
      pending.push_back(std::move(u));
    }

    // Order units so that vertex parities are settled early: sweep vertices in
    // BFS order and take every branch ending there.
    std::vector<std::vector<std::size_t>> at(n_);
    for (std::size_t i = 0; i < pending.size(); ++i) {
      at[pending[i].front].push_back(i);
      if (pending[i].back != pending[i].front) at[pending[i].back].push_back(i);
    }
    std::vector<char> placed(pending.size(), 0);
    // Pendant branches first: their degree-one end is settled at once.
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i].touches_degree_one) {
        placed[i] = 1;
        units_.push_back(pending[i]);
      }
    }
    if (n_ > 0) {
      VertexId root = 0;
      for (VertexId v = 0; v < n_; ++v) {
        if (degree(g_, v) > degree(g_, root)) root = v;
      }
      const VertexId src[] = {root};
      const auto d = bfs_distances(g_, src);
      std::vector<VertexId> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return d[a] < d[b]; });
      for (VertexId v : order) {
        for (std::size_t i : at[v]) {
          if (!placed[i]) {
            placed[i] = 1;
            units_.push_back(pending[i]);
          }
        }
      }
    }
    ends_at_.assign(n_, 0);
    for (const Unit& u : units_) {
      if (u.front < 0) continue;
      ++ends_at_[u.front];
      ++ends_at_[u.back];
    }
  }

  bool leaf(const State& s) {
    leaves_.fetch_add(1, std::memory_order_relaxed);
    // Union-find over the chosen edges, plus isolated high-degree vertices.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<char> in_h(n_, 0);
    for (std::size_t i = 0; i < units_.size(); ++i) {
      for (EdgeId e : units_[i].options[s.choice[i]].edges) {
        const Edge& ed = g_.edge(e);
        in_h[ed.u] = in_h[ed.v] = 1;
        parent[find(ed.u)] = find(ed.v);
      }
    }
    for (VertexId v = 0; v < n_; ++v) in_h[v] |= high_[v];
    std::vector<int> slot(n_, -1);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId v = 0; v < n_; ++v) {
      if (!in_h[v]) continue;
      const int r = find(v);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[slot[r]].push_back(v);
    }
    if (comps.empty()) return false;
    if (comps.size() == 1) return true;
    const int threshold = k_ - 1;
    if (threshold == 0) return false;
    // Distance from each component to every vertex, then component pairs.
    const std::size_t c = comps.size();
    std::vector<std::vector<int>> comp_dist(c, std::vector<int>(c, kUnreachable));
    std::vector<int> row(n_);
    for (std::size_t a = 0; a < c; ++a) {
      std::fill(row.begin(), row.end(), kUnreachable);
      for (VertexId u : comps[a]) {
        const int* du = &dist_[static_cast<std::size_t>(u) * n_];
        for (VertexId v = 0; v < n_; ++v) {
          if (du[v] != kUnreachable && (row[v] == kUnreachable || du[v] < row[v])) row[v] = du[v];
        }
      }
      for (std::size_t b = 0; b < c; ++b) {
        int best = kUnreachable;
        for (VertexId v : comps[b]) {
          if (row[v] != kUnreachable && (best == kUnreachable || row[v] < best)) best = row[v];
        }
        comp_dist[a][b] = best;
      }
    }
    const auto seen = linked_components(comp_dist, threshold);
    return std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
  }

  const MultiGraph& g_;
  int k_;
  Variant variant_;
  const WitnessSearchOptions& opts_;
  BudgetMeter meter_;
  int n_ = 0;
  int odd_limit_ = 2;
  bool infeasible_ = false;
  std::vector<int> dist_;
  std::vector<char> high_;
  std::vector<Unit> units_;
  std::vector<int> ends_at_;
  std::atomic<std::uint64_t> leaves_{0};
};

WitnessResult exhaustive_search(const MultiGraph& g, int k, Variant variant,
                                const WitnessSearchOptions& opts) {
  const int m = g.edge_count();
  if (m > 30) throw InputError("exhaustive witness enumeration is limited to 30 edges");
  WitnessResult out;
  BudgetMeter meter(opts.budget);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!meter.spend()) {
      out.status = SearchStatus::Unknown;
      out.nodes = out.candidates = meter.used();
      return out;
    }
    std::vector<EdgeId> edges;
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1) edges.push_back(e);
    }
    auto h = canonical_subgraph(g, std::move(edges));
    if (check_conditions(g, h, k, variant, opts.conditions).passed()) {
      out.status = SearchStatus::Found;
      out.witness = std::move(h);
      out.nodes = out.candidates = meter.used();
      return out;
    }
  }
  out.status = SearchStatus::NotFound;
  out.nodes = out.candidates = meter.used();
  return out;
}

}  // namespace

WitnessResult find_witness(const MultiGraph& g, int k, Variant variant,
                           const WitnessSearchOptions& opts) {
  if (k < 1) throw InputError("k must be positive");
  if (!is_connected(g)) throw InputError("find_witness needs a connected graph");
  if (opts.exhaustive) return exhaustive_search(g, k, variant, opts);

  WitnessResult out;
  WitnessSearch search(g, k, variant, opts);
  if (search.infeasible() || g.vertex_count() == 0) {
    out.status = SearchStatus::NotFound;
    return out;
  }

  std::optional<WitnessSearch::State> hit;
  if (opts.workers <= 1) {
    auto s = search.initial_state();
    out.status = search.dfs(s, 0, nullptr);
    if (out.status == SearchStatus::Found) hit = s;
  } else {
    // Split on the first few units; the lowest-indexed successful prefix wins,
    // which is the same witness the sequential search returns.
    std::size_t depth = 0;
    std::vector<std::vector<int>> tasks;
    while (depth < search.unit_count()) {
      ++depth;
      tasks.clear();
      auto s = search.initial_state();
      search.prefixes(s, 0, depth, tasks);
      if (tasks.size() >= static_cast<std::size_t>(4 * opts.workers)) break;
    }
    std::vector<SearchStatus> results(tasks.size(), SearchStatus::NotFound);
    std::vector<std::optional<WitnessSearch::State>> states(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{tasks.size()};
    std::vector<std::atomic<bool>> cancel(tasks.size());
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        if (i > best.load()) {
          results[i] = SearchStatus::Unknown;
          continue;
        }
        auto s = search.initial_state();
        for (std::size_t u = 0; u < tasks[i].size(); ++u) search.apply(s, u, tasks[i][u]);
        results[i] = search.dfs(s, tasks[i].size(), &cancel[i]);
        if (results[i] == SearchStatus::Found) {
          states[i] = s;
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          for (std::size_t j = i + 1; j < tasks.size(); ++j) cancel[j].store(true);
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < opts.workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    out.status = SearchStatus::NotFound;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (results[i] == SearchStatus::Found) {
        out.status = SearchStatus::Found;
        hit = states[i];
        break;
      }
      if (results[i] == SearchStatus::Unknown) {
        out.status = SearchStatus::Unknown;
        break;
      }
    }
  }

  out.nodes = search.meter().used();
  out.candidates = search.leaves();
  if (hit) {
    auto h = search.subgraph_of(*hit);
    const auto report = check_conditions(g, h, k, variant, opts.conditions);
    if (!report.passed())
      throw std::logic_error("witness search produced a subgraph failing condition " +
                             report.first_failure());
    out.witness = std::move(h);
  }
  return out;
}

nlohmann::json to_json(const ConditionReport& r) {
  auto verdict = [](const Verdict& v) {
    nlohmann::json j{{"pass", v.pass}};
    if (!v.pass) j["witness"] = v.witness;
    return j;
  };
  const bool eu = r.variant == Variant::EU;
  return {{"variant", to_string(r.variant)},
          {"k", r.k},
          {"passed", r.passed()},
          {"nonempty", verdict(r.nonempty)},
          {eu ? "I" : "I'", verdict(r.parity)},
          {"II", verdict(r.isolated)},
          {"III", verdict(r.distance)},
          {"IV", verdict(r.branches)},
          {eu ? "V" : "V'", verdict(r.pendant)}};
}

nlohmann::json witness_to_json(const SubgraphH& h, const ConditionReport& r) {
  return {{"edges", h.edges}, {"isolated_vertices", h.isolated}, {"report", to_json(r)}};
}

}  // namespace itline
