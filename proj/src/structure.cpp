#include "itline/structure.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace itline {

DegreeClasses degree_classes(const MultiGraph& g) {
  DegreeClasses out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = degree(g, v);
    out.by_degree[d].push_back(v);
    if (d >= 3) out.high.push_back(v);
    if (d != 2) out.w.push_back(v);
  }
  return out;
}

std::vector<Branch> branches(const MultiGraph& g) {
  std::vector<Branch> out;
  std::vector<char> used(g.edge_count(), 0);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (degree(g, start) == 2) continue;
    for (EdgeId first : g.incident(start)) {
      if (used[first]) continue;
      Branch b;
      b.vertices.push_back(start);
      VertexId cur = start;
      EdgeId e = first;
      while (true) {
        used[e] = 1;
        b.edges.push_back(e);
        cur = g.other_end(e, cur);
        b.vertices.push_back(cur);
        if (degree(g, cur) != 2) break;
        const auto inc = g.incident(cur);
        e = inc[0] == e ? inc[1] : inc[0];
      }
      b.closed = b.vertices.front() == b.vertices.back();
      b.touches_degree_one = degree(g, b.front()) == 1 || degree(g, b.back()) == 1;
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Branch> branches_b1(const MultiGraph& g) {
  auto all = branches(g);
  std::erase_if(all, [](const Branch& b) { return !b.touches_degree_one; });
  return all;
}

std::vector<Trail> pendent_cycles(const MultiGraph& g) {
  // Every vertex of such a cycle other than the anchor has degree exactly 2 in
  // G, so the pendent cycles are precisely the closed branches.
  std::vector<Trail> out;
  for (auto& b : branches(g)) {
    if (b.closed) out.push_back(Trail{std::move(b.vertices), std::move(b.edges)});
  }
  return out;
}

namespace {

/// Incremental state for depth-first trail enumeration.
class TrailWalker {
 public:
  explicit TrailWalker(const MultiGraph& g)
      : g_(g),
        words_((g.edge_count() + 63) / 64 + 2),
        used_(g.edge_count(), 0),
        visits_(g.vertex_count(), 0),
        cover_(g.edge_count(), 0),
        undominated_(g.edge_count()),
        key_(words_, 0) {}

  void visit(VertexId v) {
    if (visits_[v]++ == 0) {
      ++distinct_;
      for (EdgeId e : g_.incident(v)) {
        if (cover_[e]++ == 0) --undominated_;
      }
    }
  }
  void unvisit(VertexId v) {
    if (--visits_[v] == 0) {
      --distinct_;
      for (EdgeId e : g_.incident(v)) {
        if (--cover_[e] == 0) ++undominated_;
      }
    }
  }
  void take(EdgeId e) {
    used_[e] = 1;
    key_[e / 64] ^= std::uint64_t{1} << (e % 64);
  }
  void release(EdgeId e) {
    used_[e] = 0;
    key_[e / 64] ^= std::uint64_t{1} << (e % 64);
  }

  /// Vertices reachable from v through unused edges.
  const std::vector<char>& reach_from(VertexId v) {
    reach_.assign(g_.vertex_count(), 0);
    stack_.clear();
    stack_.push_back(v);
    reach_[v] = 1;
    while (!stack_.empty()) {
      const VertexId x = stack_.back();
      stack_.pop_back();
      for (EdgeId e : g_.incident(x)) {
        if (used_[e]) continue;
        const VertexId y = g_.other_end(e, x);
        if (!reach_[y]) {
          reach_[y] = 1;
          stack_.push_back(y);
        }
      }
    }
    return reach_;
  }

  /// Returns false when some undominated edge can no longer be dominated.
  bool domination_possible(const std::vector<char>& reach) const {
    if (undominated_ == 0) return true;
    for (const Edge& e : g_.edges()) {
      if (cover_[e.id] == 0 && !reach[e.u] && !reach[e.v]) return false;
    }
    return true;
  }

  /// Memo key for the current state; `a` and `b` carry current/start vertex.
  std::vector<std::uint64_t> key(VertexId a, VertexId b) const {
    auto k = key_;
    k[words_ - 2] = static_cast<std::uint64_t>(a);
    k[words_ - 1] = static_cast<std::uint64_t>(b);
    return k;
  }

  /// Unused edges at v, most newly-dominating first, then by id.
  std::vector<EdgeId> moves(VertexId v) const {
    std::vector<std::pair<int, EdgeId>> scored;
    for (EdgeId e : g_.incident(v)) {
      if (used_[e]) continue;
      const VertexId w = g_.other_end(e, v);
      int gain = 0;
      if (visits_[w] == 0) {
        gain = 1;
        for (EdgeId f : g_.incident(w)) gain += cover_[f] == 0 ? 1 : 0;
      }
      scored.emplace_back(-gain, e);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<EdgeId> out;
    out.reserve(scored.size());
    for (auto [_, e] : scored) out.push_back(e);
    return out;
  }

  bool visited(VertexId v) const { return visits_[v] > 0; }
  int distinct() const { return distinct_; }
  int undominated() const { return undominated_; }

 private:
  const MultiGraph& g_;
  std::size_t words_;
  std::vector<char> used_;
  std::vector<int> visits_;
  std::vector<int> cover_;
  int undominated_;
  int distinct_ = 0;
  std::vector<std::uint64_t> key_;
  std::vector<char> reach_;
  std::vector<VertexId> stack_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : k) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

constexpr std::size_t kMemoLimit = 6'000'000;

class Memo {
 public:
  /// True if the state was new (and is now recorded).
  bool insert(std::vector<std::uint64_t> key) {
    if (seen_.size() >= kMemoLimit) return !seen_.contains(key);
    return seen_.insert(std::move(key)).second;
  }

 private:
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> seen_;
};

std::vector<VertexId> start_order(const MultiGraph& g) {
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const int da = degree(g, a), db = degree(g, b);
    const bool oa = da % 2 == 1, ob = db % 2 == 1;
    if (oa != ob) return oa;
    return da > db;
  });
  return order;
}

}  // namespace

MaxTrailResult max_trail(const MultiGraph& g, const SearchBudget& budget) {
  if (!is_connected(g)) throw InputError("max_trail needs a connected graph");
  const int n = g.vertex_count();
  MaxTrailResult best;
  if (n == 0) {
    best.status = SearchStatus::Found;
    return best;
  }
  std::vector<char> high(n, 0);
  int high_total = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (degree(g, v) >= 3) {
      high[v] = 1;
      ++high_total;
    }
  }

  TrailWalker walker(g);
  BudgetMeter meter(budget);
  Memo memo;
  Trail current;
  int best_count = 0;
  int best_miss = high_total + 1;
  int high_on_trail = 0;

  auto record = [&]() {
    const int miss = high_total - high_on_trail;
    if (walker.distinct() > best_count || (walker.distinct() == best_count && miss < best_miss)) {
      best_count = walker.distinct();
      best_miss = miss;
      best.trail = current;
    }
  };
  auto enter = [&](VertexId v) {
    if (!walker.visited(v) && high[v]) ++high_on_trail;
    walker.visit(v);
  };
  auto leave = [&](VertexId v) {
    walker.unvisit(v);
    if (!walker.visited(v) && high[v]) --high_on_trail;
  };

  std::function<bool(VertexId)> dfs = [&](VertexId cur) -> bool {
    if (!meter.spend()) return false;
    record();
    if (best_count == n) return true;
    if (!memo.insert(walker.key(cur, 0))) return true;
    const auto& reach = walker.reach_from(cur);
    int ub = walker.distinct();
    int miss_lb = 0;
    for (VertexId v = 0; v < n; ++v) {
      const bool on = walker.visited(v);
      if (!on && reach[v]) ++ub;
      if (high[v] && !on && !reach[v]) ++miss_lb;
    }
    if (ub < best_count || (ub == best_count && miss_lb >= best_miss)) return true;
    for (EdgeId e : walker.moves(cur)) {
      const VertexId next = g.other_end(e, cur);
      walker.take(e);
      enter(next);
      current.edges.push_back(e);
      current.vertices.push_back(next);
      const bool ok = dfs(next);
      current.vertices.pop_back();
      current.edges.pop_back();
      leave(next);
      walker.release(e);
      if (!ok) return false;
      if (best_count == n) return true;
    }
    return true;
  };

  bool complete = true;
  for (VertexId s : start_order(g)) {
    current = Trail{{s}, {}};
    enter(s);
    complete = dfs(s);
    leave(s);
    if (!complete || best_count == n) break;
  }
  best.mt_star = best_count;
  best.d3_star = best_miss;
  best.nodes = meter.used();
  best.status = complete ? SearchStatus::Found : SearchStatus::Unknown;
  return best;
}

TrailSearchResult find_dominating_trail(const MultiGraph& g, bool closed,
                                        const SearchBudget& budget) {
  if (!is_connected(g)) throw InputError("find_dominating_trail needs a connected graph");
  TrailSearchResult out;
  const int n = g.vertex_count();
  if (n == 0) {
    out.status = SearchStatus::NotFound;
    return out;
  }
  // Trivial trail: a vertex meeting every edge.
  for (VertexId v = 0; v < n; ++v) {
    if (degree(g, v) == g.edge_count()) {
      out.status = SearchStatus::Found;
      out.trail = Trail{{v}, {}};
      return out;
    }
  }

  TrailWalker walker(g);
  BudgetMeter meter(budget);
  Memo memo;
  Trail current;
  VertexId start = 0;
  bool found = false;

  std::function<bool(VertexId)> dfs = [&](VertexId cur) -> bool {
    if (!meter.spend()) return false;
    const bool nonempty = !current.edges.empty();
    if (walker.undominated() == 0 && (!closed || (nonempty && cur == start))) {
      found = true;
      return true;
    }
    if (!memo.insert(walker.key(cur, closed ? start : 0))) return true;
    const auto& reach = walker.reach_from(cur);
    if (!walker.domination_possible(reach)) return true;
    if (closed && nonempty && !reach[start]) return true;
    for (EdgeId e : walker.moves(cur)) {
      const VertexId next = g.other_end(e, cur);
      walker.take(e);
      walker.visit(next);
      current.edges.push_back(e);
      current.vertices.push_back(next);
      const bool ok = dfs(next);
      if (found) return true;
      current.vertices.pop_back();
      current.edges.pop_back();
      walker.unvisit(next);
      walker.release(e);
      if (!ok) return false;
    }
    return true;
  };

  bool complete = true;
  for (VertexId s : start_order(g)) {
    if (degree(g, s) == 0) continue;
    start = s;
    current = Trail{{s}, {}};
    walker.visit(s);
    complete = dfs(s);
    if (found) break;
    walker.unvisit(s);
    if (!complete) break;
  }
  out.nodes = meter.used();
  if (found) {
    out.status = SearchStatus::Found;
    out.trail = current;
  } else {
    out.status = complete ? SearchStatus::NotFound : SearchStatus::Unknown;
  }
  return out;
}

}  // namespace itline
