#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "itline/budget.hpp"
#include "itline/corpus.hpp"
#include "itline/eup.hpp"
#include "itline/hamilton.hpp"

namespace itline {

enum class Outcome {
  Agree,
  Mismatch,
  Unknown,
  ExpectedMismatch,  // a disagreement outside the range where equivalence is claimed
};
std::string to_string(Outcome o);

struct CampaignRecord {
  std::string graph_id;
  int n = 0;
  int m = 0;
  Outcome outcome = Outcome::Unknown;
  std::string note;  // names the operation and budget for Unknown, the failed check for Mismatch
  nlohmann::json detail = nlohmann::json::object();
};

struct CampaignReport {
  std::string name;
  std::vector<CampaignRecord> records;  // sorted by graph_id

  int count(Outcome o) const;
  bool ok() const { return count(Outcome::Mismatch) == 0; }
  /// No mismatches and no unknowns.
  bool complete() const { return ok() && count(Outcome::Unknown) == 0; }

  void write_jsonl(std::ostream& out) const;
  void write_summary_csv(std::ostream& out, bool header = true) const;
  nlohmann::json summary() const;
};

struct CampaignConfig {
  SearchBudget budget = default_budget();
  int workers = 1;
  int dp_cap = kDefaultDpCap;
  int cross_check_cap = 20;  // largest L^n(G) also checked by DP
  ConditionOptions conditions;
};

/// Traceability (or hamiltonicity) of L^n(G) decided through a dominating
/// (closed) trail of L^{n-1}(G), with a DP cross-check on L^n(G) when it is
/// small enough. A disagreement between the two routes is reported as Mismatch.
struct LevelTruth {
  SearchStatus status = SearchStatus::Unknown;  // Found: traceable, NotFound: not
  std::string route;                            // "trail" or "dp"
  std::optional<bool> dp_check;                 // DP verdict when it ran
  bool routes_disagree = false;
  std::string note;
};
LevelTruth iterated_line_graph_traceable(const MultiGraph& g, int n, const CampaignConfig& cfg,
                                         bool closed = false);

/// Runs fn over the corpus on cfg.workers threads and sorts by graph id.
CampaignReport run_campaign(const std::string& name, const std::vector<CorpusGraph>& corpus,
                            int workers,
                            const std::function<CampaignRecord(const CorpusGraph&)>& fn);

/// L^n(G) traceable iff EUP_n(G) nonempty, per graph. For n = 1 a
/// disagreement is recorded as ExpectedMismatch. Graphs must be connected
/// with at least three edges.
CampaignReport verify_theorem_main(const std::vector<CorpusGraph>& corpus, int n,
                                   const CampaignConfig& cfg = {});

/// EUP_k(L(G)) nonempty iff EUP_{k+1}(G) nonempty, per graph. Graphs must be
/// connected with at least two edges.
CampaignReport verify_theorem_induction(const std::vector<CorpusGraph>& corpus, int k,
                                        const CampaignConfig& cfg = {});

/// Exact h_p and h against every upper bound, and h_p <= h.
CampaignReport run_bounds_campaign(const std::vector<CorpusGraph>& corpus,
                                   const CampaignConfig& cfg = {});

/// The sharpness claims for the named families.
CampaignReport run_family_suite(const CampaignConfig& cfg = {});

}  // namespace itline
