// itline: command line front end for the iterated line graph library.
//
// Exit codes: 0 success, 1 a verification mismatch, 2 bad input or usage,
// 3 a search ran out of budget.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "itline/campaign.hpp"
#include "itline/corpus.hpp"
#include "itline/eup.hpp"
#include "itline/families.hpp"
#include "itline/indices.hpp"
#include "itline/io.hpp"
#include "itline/line_graph.hpp"
#include "itline/structure.hpp"

using namespace itline;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;

struct Globals {
  std::uint64_t budget = 0;  // 0: default (ITLINE_BUDGET or built in)
  double timeout = 0;        // seconds, 0: none
  int workers = 1;
  std::string format = "json";
};

SearchBudget make_budget(const Globals& g) {
  SearchBudget b = default_budget();
  if (g.budget > 0) b.max_nodes = g.budget;
  if (g.timeout > 0)
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(g.timeout));
  return b;
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit_graph(const MultiGraph& g, const std::string& format) {
  if (format == "g6") {
    std::cout << serialize_graph6(g) << '\n';
  } else if (format == "edgelist") {
    std::cout << serialize_edgelist(g);
  } else {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    std::cout << json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}}.dump()
              << '\n';
  }
}

int emit_report(const CampaignReport& r, const std::string& format, const std::string& jsonl) {
  if (!jsonl.empty()) {
    std::ofstream out(jsonl);
    if (!out) throw InputError("cannot write " + jsonl);
    r.write_jsonl(out);
  }
  if (format == "csv") {
    r.write_summary_csv(std::cout);
  } else {
    if (jsonl.empty()) r.write_jsonl(std::cout);
    std::cout << r.summary().dump() << '\n';
  }
  for (const auto& rec : r.records)
    if (rec.outcome == Outcome::Mismatch)
      std::cerr << "mismatch: " << rec.graph_id << ": " << rec.note << '\n';
  if (!r.ok()) return kExitMismatch;
  return r.count(Outcome::Unknown) > 0 ? kExitUnknown : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated line graphs: traceability conditions, indices and bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--budget", globals.budget, "Node expansions per search");
  app.add_option("--timeout", globals.timeout, "Wall-clock limit per search, seconds");
  app.add_option("--workers", globals.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "g6", "edgelist"}));

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file (edge list or graph6), - for stdin");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a named graph");
  std::string family;
  std::vector<int> params;
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Integer parameters");

  // linegraph
  auto* lg = app.add_subcommand("linegraph", "Iterated line graph");
  int iterate = 1;
  int cap = kDefaultVertexCap;
  add_input(lg);
  lg->add_option("--iterate", iterate, "Number of iterations")->check(CLI::NonNegativeNumber);
  lg->add_option("--cap", cap, "Vertex cap");

  // check-eup
  auto* ce = app.add_subcommand("check-eup", "Search EU_k / EUP_k for a witness");
  int k = 2;
  std::string variant = "eup";
  bool show_witness = false;
  bool exhaustive = false;
  bool open_branches_only = false;
  add_input(ce);
  ce->add_option("--k", k, "Parameter k")->check(CLI::PositiveNumber);
  ce->add_option("--variant", variant, "eu or eup")->check(CLI::IsMember({"eu", "eup"}));
  ce->add_flag("--witness", show_witness, "Print the witness and its condition report");
  ce->add_flag("--exhaustive", exhaustive, "Enumerate all edge subsets");
  ce->add_flag("--ignore-closed-branches", open_branches_only,
               "Leave pendent cycles out of the avoided-branch length condition");

  // index
  auto* ix = app.add_subcommand("index", "Exact hamiltonian (path) index");
  ix->set_help_flag("--help", "Print this help message and exit");  // frees "h" for --h
  bool want_hp = false;
  bool want_h = false;
  bool cross = false;
  int cross_cap = 20;
  add_input(ix);
  auto* hp_flag = ix->add_flag("--hp", want_hp, "Hamiltonian path index");
  ix->add_flag("--h", want_h, "Hamiltonian index")->excludes(hp_flag);
  ix->add_flag("--cross-check", cross, "Confirm by building the iterated line graphs");
  ix->add_option("--cross-check-cap", cross_cap, "Largest graph for the cross-check");

  // bounds
  auto* bd = app.add_subcommand("bounds", "Upper bounds on the hamiltonian path index");
  add_input(bd);

  // verify
  auto* vf = app.add_subcommand("verify", "Run a verification campaign");
  std::string theorem = "main";
  int max_vertices = 6;
  int max_edges = 7;
  int level = 2;
  std::string corpus_in;
  std::string jsonl;
  vf->add_option("--theorem", theorem, "main, induction, bounds or families")
      ->check(CLI::IsMember({"main", "induction", "bounds", "families"}));
  vf->add_option("--max-vertices", max_vertices, "Corpus: connected graphs up to this order");
  vf->add_option("--max-edges", max_edges, "Corpus for induction: graphs up to this size");
  vf->add_option("--level", level, "n for main, k for induction");
  vf->add_option("--in", corpus_in, "Read the corpus from a graph6 file instead");
  vf->add_option("--jsonl", jsonl, "Write per-graph records here");

  // corpus
  auto* cp = app.add_subcommand("corpus", "Read or generate a graph6 corpus");
  std::string cp_in;
  int enumerate = 0;
  bool dedup = false;
  cp->add_option("--in", cp_in, "graph6 file to read");
  cp->add_option("--enumerate", enumerate, "Emit connected graphs up to this order");
  cp->add_flag("--dedup", dedup, "Drop isomorphic duplicates");

  CLI11_PARSE(app, argc, argv);
  // Graph-producing commands default to a format the other commands can read.
  const std::string graph_format =
      app.get_option("--format")->count() > 0 ? globals.format : "edgelist";

  try {
    const SearchBudget budget = make_budget(globals);

    if (*gen) {
      emit_graph(families::by_name(family, params), graph_format);
      return 0;
    }

    if (*lg) {
      const auto g = parse_graph(slurp(input));
      const auto r = iterated_line_graph(g, iterate, cap);
      if (r.cap_exceeded) {
        std::cerr << "cap exceeded: L^" << r.level + 1 << " would have " << r.next_size
                  << " vertices\n";
        return kExitInput;
      }
      emit_graph(r.graph, graph_format);
      return 0;
    }

    if (*ce) {
      const auto g = parse_graph(slurp(input));
      WitnessSearchOptions opts;
      opts.budget = budget;
      opts.workers = globals.workers;
      opts.exhaustive = exhaustive;
      opts.conditions.closed_branches_count = !open_branches_only;
      const auto v = parse_variant(variant);
      const auto r = find_witness(g, k, v, opts);
      json out = {{"k", k},
                  {"variant", to_string(v)},
                  {"status", to_string(r.status)},
                  {"nodes", r.nodes},
                  {"candidates", r.candidates}};
      if (r.witness && show_witness)
        out["witness"] = witness_to_json(*r.witness, check_conditions(g, *r.witness, k, v, opts.conditions));
      std::cout << out.dump() << '\n';
      return r.status == SearchStatus::Unknown ? kExitUnknown : 0;
    }

    if (*ix) {
      const auto g = parse_graph(slurp(input));
      IndexOptions opts;
      opts.budget = budget;
      opts.workers = globals.workers;
      opts.cross_check = cross;
      opts.cross_check_cap = cross_cap;
      const auto r = want_h ? hamiltonian_index(g, opts) : hamiltonian_path_index(g, opts);
      auto out = to_json(r);
      out["index"] = want_h ? "h" : "h_p";
      std::cout << out.dump() << '\n';
      if (r.cross_check && r.cross_check->status == CrossCheckStatus::Mismatch) return kExitMismatch;
      return r.status == SearchStatus::Unknown ? kExitUnknown : 0;
    }

    if (*bd) {
      const auto g = parse_graph(slurp(input));
      const auto b = compute_bounds(g, budget);
      if (globals.format == "csv") {
        std::cout << "thm_b1,cor1,cor2,thm_b2,min\n"
                  << b.thm_b1 << ',' << b.cor1 << ',' << b.cor2 << ',' << b.thm_b2 << ','
                  << b.min_bound() << '\n';
      } else {
        std::cout << to_json(b).dump() << '\n';
      }
      return b.status == SearchStatus::Unknown ? kExitUnknown : 0;
    }

    if (*vf) {
      CampaignConfig cfg;
      cfg.budget = budget;
      cfg.workers = globals.workers;
      if (theorem == "families") return emit_report(run_family_suite(cfg), globals.format, jsonl);

      std::vector<CorpusGraph> corpus;
      if (!corpus_in.empty()) {
        std::istringstream in(slurp(corpus_in));
        corpus = read_g6_corpus(in);
      } else if (theorem == "induction") {
        corpus = enumerate_connected_graphs_by_edges(max_edges, 2);
      } else {
        corpus = enumerate_connected_graphs(max_vertices);
      }
      if (theorem == "main") {
        corpus = filter_corpus(std::move(corpus), 3);
        return emit_report(verify_theorem_main(corpus, level, cfg), globals.format, jsonl);
      }
      if (theorem == "induction") {
        corpus = filter_corpus(std::move(corpus), 2);
        return emit_report(verify_theorem_induction(corpus, level, cfg), globals.format, jsonl);
      }
      corpus = filter_corpus(std::move(corpus), 0);
      return emit_report(run_bounds_campaign(corpus, cfg), globals.format, jsonl);
    }

    if (*cp) {
      std::vector<CorpusGraph> corpus;
      if (!cp_in.empty()) {
        std::istringstream in(slurp(cp_in));
        corpus = read_g6_corpus(in);
      } else if (enumerate > 0) {
        corpus = enumerate_connected_graphs(enumerate);
      } else {
        std::cerr << "corpus: give --in or --enumerate\n";
        return kExitInput;
      }
      std::set<std::string> seen;
      int connected = 0;
      for (const auto& c : corpus) {
        if (is_connected(c.graph)) ++connected;
        if (dedup && !seen.insert(canonical_key(c.graph)).second) continue;
        if (globals.format == "g6")
          std::cout << serialize_graph6(c.graph) << '\n';
        else if (globals.format != "csv")
          std::cout << json{{"id", c.id}, {"n", c.graph.vertex_count()}, {"m", c.graph.edge_count()},
                            {"g6", serialize_graph6(c.graph)}}
                           .dump()
                    << '\n';
      }
      if (globals.format == "csv")
        std::cout << "graphs,connected,classes\n"
                  << corpus.size() << ',' << connected << ','
                  << (dedup ? static_cast<int>(seen.size()) : -1) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknown;
  }
  return 0;
}
