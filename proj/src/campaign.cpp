#include "itline/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "itline/families.hpp"
#include "itline/indices.hpp"
#include "itline/io.hpp"
#include "itline/line_graph.hpp"
#include "itline/structure.hpp"

namespace itline {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Agree: return "agree";
    case Outcome::Mismatch: return "mismatch";
    case Outcome::Unknown: return "unknown";
    case Outcome::ExpectedMismatch: return "expected_mismatch";
  }
  return "?";
}

int CampaignReport::count(Outcome o) const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.outcome == o; }));
}

void CampaignReport::write_jsonl(std::ostream& out) const {
  for (const auto& r : records) {
    nlohmann::json j = {{"campaign", name},  {"graph_id", r.graph_id},
                        {"n", r.n},          {"m", r.m},
                        {"outcome", to_string(r.outcome)}, {"note", r.note},
                        {"detail", r.detail}};
    out << j.dump() << '\n';
  }
}

void CampaignReport::write_summary_csv(std::ostream& out, bool header) const {
  if (header) out << "campaign,graphs,agree,mismatch,expected_mismatch,unknown\n";
  out << name << ',' << records.size() << ',' << count(Outcome::Agree) << ','
      << count(Outcome::Mismatch) << ',' << count(Outcome::ExpectedMismatch) << ','
      << count(Outcome::Unknown) << '\n';
}

nlohmann::json CampaignReport::summary() const {
  return {{"campaign", name},
          {"graphs", records.size()},
          {"agree", count(Outcome::Agree)},
          {"mismatch", count(Outcome::Mismatch)},
          {"expected_mismatch", count(Outcome::ExpectedMismatch)},
          {"unknown", count(Outcome::Unknown)}};
}

namespace {

std::string describe(const SearchBudget& b) {
  std::string s = "node budget " + std::to_string(b.max_nodes);
  if (b.deadline) s += " or deadline";
  return s;
}

std::string unknown_note(const std::string& op, const std::string& id, const SearchBudget& b) {
  return op + " on " + id + ": " + describe(b) + " exhausted";
}

CampaignRecord blank(const CorpusGraph& c) {
  CampaignRecord r;
  r.graph_id = c.id;
  r.n = c.graph.vertex_count();
  r.m = c.graph.edge_count();
  return r;
}

HamiltonOptions hamilton_of(const CampaignConfig& cfg) {
  HamiltonOptions h;
  h.dp_cap = cfg.dp_cap;
  h.budget = cfg.budget;
  return h;
}

WitnessSearchOptions witness_of(const CampaignConfig& cfg) {
  WitnessSearchOptions w;
  w.budget = cfg.budget;
  w.conditions = cfg.conditions;
  return w;
}

IndexOptions index_of(const CampaignConfig& cfg) {
  IndexOptions o;
  o.budget = cfg.budget;
  o.dp_cap = cfg.dp_cap;
  o.conditions = cfg.conditions;
  return o;
}

void require_corpus(const std::vector<CorpusGraph>& corpus, int min_edges) {
  for (const auto& c : corpus) {
    if (c.graph.vertex_count() == 0 || !is_connected(c.graph))
      throw InputError(c.id + " is not connected");
    if (c.graph.edge_count() < min_edges)
      throw InputError(c.id + " has fewer than " + std::to_string(min_edges) + " edges");
  }
}

}  // namespace

LevelTruth iterated_line_graph_traceable(const MultiGraph& g, int n, const CampaignConfig& cfg,
                                         bool closed) {
  if (n < 0) throw InputError("level must be nonnegative");
  LevelTruth out;
  const auto hopts = hamilton_of(cfg);
  auto direct = [&](const MultiGraph& h) {
    return closed ? has_hamiltonian_cycle(h, hopts) : has_hamiltonian_path(h, hopts);
  };

  if (n == 0) {
    const auto r = direct(g);
    out.status = r.status;
    out.route = "dp";
    if (r.status == SearchStatus::Unknown) out.note = "direct oracle: " + r.diagnostics;
    return out;
  }

  MultiGraph h = g;
  if (n > 1) {
    auto base = iterated_line_graph(g, n - 1);
    if (base.cap_exceeded) {
      out.note = "L^" + std::to_string(base.level + 1) + " exceeds the vertex cap";
      return out;
    }
    h = std::move(base.graph);
  }
  if (h.edge_count() == 0) throw EdgelessLevel(n - 1);

  if (h.edge_count() >= 3) {
    out.route = "trail";
    const auto dt = find_dominating_trail(h, closed, cfg.budget);
    if (dt.status == SearchStatus::Unknown) {
      out.note = std::string(closed ? "closed " : "") + "dominating trail search";
      return out;
    }
    out.status = dt.status;
    if (dt.trail) {
      // Throws if the lifted order fails verification.
      if (closed)
        (void)lift_closed_trail_to_cycle(h, *dt.trail);
      else
        (void)lift_trail_to_path(h, *dt.trail);
    }
  } else {
    out.route = "dp";
  }

  if (out.route == "dp" || h.edge_count() <= cfg.cross_check_cap) {
    const auto top = line_graph(h).graph;
    const auto r = direct(top);
    if (r.status == SearchStatus::Unknown) {
      if (out.route == "dp") out.note = "direct oracle: " + r.diagnostics;
    } else {
      out.dp_check = r.status == SearchStatus::Found;
      if (out.route == "dp") out.status = r.status;
      out.routes_disagree = *out.dp_check != (out.status == SearchStatus::Found);
    }
  }
  return out;
}

CampaignReport run_campaign(const std::string& name, const std::vector<CorpusGraph>& corpus,
                            int workers,
                            const std::function<CampaignRecord(const CorpusGraph&)>& fn) {
  CampaignReport report;
  report.name = name;
  report.records.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        report.records[i] = fn(corpus[i]);
      } catch (const std::exception& e) {
        auto r = blank(corpus[i]);
        r.outcome = Outcome::Mismatch;
        r.note = std::string("exception: ") + e.what();
        report.records[i] = std::move(r);
      }
    }
  };
  const int threads = std::clamp(workers, 1, 256);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(report.records.begin(), report.records.end(),
            [](const auto& a, const auto& b) { return a.graph_id < b.graph_id; });
  return report;
}

CampaignReport verify_theorem_main(const std::vector<CorpusGraph>& corpus, int n,
                                   const CampaignConfig& cfg) {
  if (n < 1) throw InputError("level must be at least 1");
  require_corpus(corpus, 3);
  return run_campaign("main-n" + std::to_string(n), corpus, cfg.workers,
                      [&](const CorpusGraph& c) {
    auto rec = blank(c);
    const auto w = find_witness(c.graph, n, Variant::EUP, witness_of(cfg));
    if (w.status == SearchStatus::Unknown) {
      rec.note = unknown_note("find_witness(k=" + std::to_string(n) + ", EUP)", c.id, cfg.budget);
      return rec;
    }
    const auto truth = iterated_line_graph_traceable(c.graph, n, cfg);
    rec.detail["witness"] = w.status == SearchStatus::Found;
    if (w.witness) rec.detail["witness_edges"] = w.witness->edges;
    rec.detail["route"] = truth.route;
    if (truth.dp_check) rec.detail["dp_check"] = *truth.dp_check;
    if (truth.status == SearchStatus::Unknown) {
      rec.note = unknown_note(truth.note, c.id, cfg.budget);
      return rec;
    }
    const bool traceable = truth.status == SearchStatus::Found;
    rec.detail["traceable"] = traceable;
    if (truth.routes_disagree) {
      rec.outcome = Outcome::Mismatch;
      rec.note = "trail route and DP disagree on L^" + std::to_string(n);
    } else if (traceable == (w.status == SearchStatus::Found)) {
      rec.outcome = Outcome::Agree;
    } else {
      rec.outcome = n < 2 ? Outcome::ExpectedMismatch : Outcome::Mismatch;
      rec.note = traceable ? "L^n traceable but no EUP_n witness" : "EUP_n witness but L^n not traceable";
    }
    return rec;
  });
}

CampaignReport verify_theorem_induction(const std::vector<CorpusGraph>& corpus, int k,
                                        const CampaignConfig& cfg) {
  if (k < 1) throw InputError("k must be at least 1");
  require_corpus(corpus, 2);
  return run_campaign("induction-k" + std::to_string(k), corpus, cfg.workers,
                      [&](const CorpusGraph& c) {
    auto rec = blank(c);
    const auto lg = line_graph(c.graph).graph;
    const auto left = find_witness(lg, k, Variant::EUP, witness_of(cfg));
    if (left.status == SearchStatus::Unknown) {
      rec.note = unknown_note("find_witness(L(G), k=" + std::to_string(k) + ", EUP)", c.id, cfg.budget);
      return rec;
    }
    const auto right = find_witness(c.graph, k + 1, Variant::EUP, witness_of(cfg));
    if (right.status == SearchStatus::Unknown) {
      rec.note = unknown_note("find_witness(G, k=" + std::to_string(k + 1) + ", EUP)", c.id, cfg.budget);
      return rec;
    }
    const bool l = left.status == SearchStatus::Found;
    const bool r = right.status == SearchStatus::Found;
    rec.detail = {{"line_graph_side", l}, {"graph_side", r}};
    rec.outcome = l == r ? Outcome::Agree : Outcome::Mismatch;
    if (l != r) rec.note = l ? "EUP_k(L(G)) nonempty only" : "EUP_{k+1}(G) nonempty only";
    return rec;
  });
}

CampaignReport run_bounds_campaign(const std::vector<CorpusGraph>& corpus,
                                   const CampaignConfig& cfg) {
  require_corpus(corpus, 0);
  return run_campaign("bounds", corpus, cfg.workers, [&](const CorpusGraph& c) {
    auto rec = blank(c);
    const auto hp = hamiltonian_path_index(c.graph, index_of(cfg));
    const auto b = compute_bounds(c.graph, cfg.budget);
    std::optional<IndexResult> h;
    if (!is_path_graph(c.graph)) h = hamiltonian_index(c.graph, index_of(cfg));
    rec.detail = index_summary_json(c.id, hp, h, b);

    std::vector<std::string> unknowns;
    if (hp.status != SearchStatus::Found) unknowns.push_back("hamiltonian_path_index (" + hp.diagnostics + ")");
    if (b.status != SearchStatus::Found) unknowns.push_back("max_trail");
    if (h && h->status != SearchStatus::Found) unknowns.push_back("hamiltonian_index (" + h->diagnostics + ")");

    for (const auto& [name, ok] : rec.detail["checks"].items())
      if (!ok.get<bool>()) rec.note += (rec.note.empty() ? "" : "; ") + std::string("failed ") + name;
    if (!rec.note.empty()) {
      rec.outcome = Outcome::Mismatch;
    } else if (!unknowns.empty()) {
      for (const auto& u : unknowns)
        rec.note += (rec.note.empty() ? "" : "; ") + unknown_note(u, c.id, cfg.budget);
    } else {
      rec.outcome = Outcome::Agree;
    }
    return rec;
  });
}

namespace {

struct Claim {
  std::string id;
  MultiGraph graph;
  std::function<void(const MultiGraph&, CampaignRecord&, std::vector<std::string>&)> check;
};

void expect_eq(std::vector<std::string>& failures, const std::string& what, int got, int want) {
  if (got != want)
    failures.push_back(what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

CampaignReport run_family_suite(const CampaignConfig& cfg) {
  std::vector<Claim> claims;
  auto mark_unknown = [&](CampaignRecord& rec, const std::string& op) {
    if (!rec.note.empty()) rec.note += "; ";
    rec.note += unknown_note(op, rec.graph_id, cfg.budget);
  };

  // h_p with the search that settles it; fills rec.detail["h_p"].
  auto exact_hp = [&](const MultiGraph& g, CampaignRecord& rec) -> std::optional<int> {
    const auto r = hamiltonian_path_index(g, index_of(cfg));
    if (r.status != SearchStatus::Found) {
      mark_unknown(rec, "hamiltonian_path_index");
      return std::nullopt;
    }
    rec.detail["h_p"] = r.value;
    rec.detail["h_p_method"] = to_string(r.method);
    return r.value;
  };
  auto exhaustive_empty = [&](const MultiGraph& g, int k, CampaignRecord& rec,
                              std::vector<std::string>& failures) {
    auto w = witness_of(cfg);
    w.exhaustive = g.edge_count() <= 20;
    const auto r = find_witness(g, k, Variant::EUP, w);
    rec.detail["eup_" + std::to_string(k) + "_candidates"] = r.candidates;
    if (r.status == SearchStatus::Unknown)
      mark_unknown(rec, "find_witness(k=" + std::to_string(k) + ", EUP)");
    else if (r.status == SearchStatus::Found)
      failures.push_back("EUP_" + std::to_string(k) + " is nonempty");
  };

  claims.push_back({"fig1", families::fig1(), [&](const MultiGraph& g, CampaignRecord& rec,
                                                  std::vector<std::string>& failures) {
    exhaustive_empty(g, 1, rec, failures);
    const auto dt = find_dominating_trail(g, false, cfg.budget);
    if (dt.status != SearchStatus::Found) {
      failures.push_back("no dominating trail");
    } else {
      (void)lift_trail_to_path(g, *dt.trail);
      rec.detail["trail"] = to_string(*dt.trail);
    }
    if (auto hp = exact_hp(g, rec)) expect_eq(failures, "h_p", *hp, 1);
  }});

  for (int k = 1; k <= 3; ++k) {
    claims.push_back({"fig2-k" + std::to_string(k), families::fig2(k),
                      [&, k](const MultiGraph& g, CampaignRecord& rec,
                             std::vector<std::string>& failures) {
      if (auto hp = exact_hp(g, rec)) expect_eq(failures, "h_p", *hp, k);
      const auto h = hamiltonian_index(g, index_of(cfg));
      if (h.status != SearchStatus::Found) {
        mark_unknown(rec, "hamiltonian_index");
      } else {
        rec.detail["h"] = h.value;
        expect_eq(failures, "h", h.value, k);
      }
      if (k >= 2) exhaustive_empty(g, k - 1, rec, failures);
    }});
  }

  for (auto [s, t] : {std::pair{1, 6}, std::pair{2, 7}}) {
    claims.push_back({"fig3-s" + std::to_string(s) + "-t" + std::to_string(t),
                      families::fig3(s, t),
                      [&, s, t](const MultiGraph& g, CampaignRecord& rec,
                                std::vector<std::string>& failures) {
      const auto b = compute_bounds(g, cfg.budget);
      if (b.status != SearchStatus::Found) {
        mark_unknown(rec, "max_trail");
        return;
      }
      rec.detail["bounds"] = to_json(b);
      expect_eq(failures, "mt*", b.ingredients.mt_star, 2 * t + 1);
      expect_eq(failures, "d*", b.ingredients.d3_star, 4);
      expect_eq(failures, "thm_b1", b.thm_b1, s + 2);
      if (auto hp = exact_hp(g, rec)) expect_eq(failures, "h_p", *hp, s + 2);
    }});
  }

  for (int s : {1, 2}) {
    claims.push_back({"fig4b-s" + std::to_string(s), families::fig4b(s),
                      [&, s](const MultiGraph& g, CampaignRecord& rec,
                             std::vector<std::string>& failures) {
      expect_eq(failures, "delta'", delta_prime(g), 6);
      expect_eq(failures, "d**", d3_doublestar(g), 13);
      expect_eq(failures, "thm_b2", bound_thm_b2(g), s + 2);
      const auto w = two_branch_witness(g);
      const auto report = check_conditions(g, w, s + 2, Variant::EUP, cfg.conditions);
      rec.detail["two_branch_witness"] = witness_to_json(w, report);
      if (!report.passed()) failures.push_back("two-branch witness fails " + report.first_failure());
      if (s == 1) {
        auto wopts = witness_of(cfg);
        const auto r = find_witness(g, s + 1, Variant::EUP, wopts);
        rec.detail["eup_2"] = to_string(r.status);
        if (r.status == SearchStatus::Unknown) mark_unknown(rec, "find_witness(k=2, EUP)");
        if (r.status == SearchStatus::Found) failures.push_back("EUP_2 is nonempty");
      }
      if (auto hp = exact_hp(g, rec)) expect_eq(failures, "h_p", *hp, s + 2);
    }});
  }

  std::vector<CorpusGraph> corpus;
  for (const auto& c : claims) corpus.push_back({c.id, c.graph});
  auto report = run_campaign("families", corpus, cfg.workers, [&](const CorpusGraph& c) {
    auto rec = blank(c);
    const auto& claim = *std::find_if(claims.begin(), claims.end(),
                                      [&](const Claim& x) { return x.id == c.id; });
    std::vector<std::string> failures;
    claim.check(c.graph, rec, failures);
    if (!failures.empty()) {
      rec.outcome = Outcome::Mismatch;
      for (const auto& f : failures) rec.note += (rec.note.empty() ? "" : "; ") + f;
    } else {
      rec.outcome = rec.note.empty() ? Outcome::Agree : Outcome::Unknown;
    }
    return rec;
  });
  return report;
}

}  // namespace itline
