#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "itline/budget.hpp"
#include "itline/graph.hpp"

namespace itline {

/// EU: the hamiltonian family (all degrees even, pendant branches bounded
/// unconditionally). EUP: the traceable family (at most two odd vertices,
/// pendant bound only for branches H avoids).
enum class Variant { EU, EUP };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct ConditionOptions {
  /// Whether cycles hanging off a single W-vertex count as branches for the
  /// length condition on branches avoided by H.
  bool closed_branches_count = true;
};

struct Verdict {
  bool pass = true;
  std::string witness;  // empty on pass; names the offending vertex/branch/components
};

/// Per-condition evaluation for one (H, k, variant).
struct ConditionReport {
  Variant variant = Variant::EUP;
  int k = 1;
  Verdict nonempty;   // H has at least one vertex
  Verdict parity;     // (I): all even / (I'): at most two odd
  Verdict isolated;   // (II): V_0(H) within V_{>=3}(G) within V(H)
  Verdict distance;   // (III): components linked by distance <= k-1
  Verdict branches;   // (IV): avoided branches have length <= k+1
  Verdict pendant;    // (V) / (V'): pendant branches have length <= k

  bool passed() const {
    return nonempty.pass && parity.pass && isolated.pass && distance.pass && branches.pass &&
           pendant.pass;
  }
  /// Name of the first failing condition, or empty.
  std::string first_failure() const;
};

ConditionReport check_conditions(const MultiGraph& g, const SubgraphH& h, int k, Variant variant,
                                 const ConditionOptions& opts = {});

/// H(S): edge set S plus every degree->=3 vertex of G that S does not touch.
SubgraphH canonical_subgraph(const MultiGraph& g, std::vector<EdgeId> edges);

struct WitnessSearchOptions {
  SearchBudget budget = default_budget();
  ConditionOptions conditions;
  /// Plain enumeration of all 2^m canonical candidates instead of the
  /// branch-decision search. Limited to 30 edges.
  bool exhaustive = false;
  /// Worker threads for the branch-decision search; the result does not
  /// depend on this value.
  int workers = 1;
};

struct WitnessResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<SubgraphH> witness;
  std::uint64_t nodes = 0;       // search nodes expanded
  std::uint64_t candidates = 0;  // complete candidates evaluated
};

/// Searches EU_k(G) / EUP_k(G) for a member. Throws InputError for a
/// disconnected graph or k < 1.
WitnessResult find_witness(const MultiGraph& g, int k, Variant variant,
                           const WitnessSearchOptions& opts = {});

nlohmann::json to_json(const ConditionReport& r);
/// {edges, isolated_vertices, report}
nlohmann::json witness_to_json(const SubgraphH& h, const ConditionReport& r);

}  // namespace itline
