#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topmatch/audit.hpp"
#include "topmatch/cli/cache.hpp"
#include "topmatch/cli/report.hpp"
#include "topmatch/cli/verify.hpp"
#include "topmatch/graph_io.hpp"
#include "topmatch/homology.hpp"
#include "topmatch/interactive.hpp"
#include "topmatch/latin.hpp"
#include "topmatch/rainbow.hpp"
#include "topmatch/rainbow_io.hpp"
#include "topmatch/strategy.hpp"
#include "topmatch/transcript_io.hpp"

namespace topmatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// "K5", "K3,3", "C4", "P4", "E3" (edgeless) or "2K2" (perfect matching).
inline Graph graph_from_family(const std::string& name) {
  std::smatch m;
  auto num = [](const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); };
  if (std::regex_match(name, m, std::regex(R"(K(\d+),(\d+))"))) return complete_bipartite(num(m[1]), num(m[2]));
  if (std::regex_match(name, m, std::regex(R"(K(\d+))"))) return complete_graph(num(m[1]));
  if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) return cycle_graph(num(m[1]));
  if (std::regex_match(name, m, std::regex(R"(P(\d+))"))) return path_graph(num(m[1]));
  if (std::regex_match(name, m, std::regex(R"(E(\d+))"))) return empty_graph(num(m[1]));
  if (std::regex_match(name, m, std::regex(R"((\d+)K2)"))) return matching_graph(num(m[1]));
  throw InputError("unknown graph family '" + name + "'");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline SymbolArray read_array_file(const std::string& path) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return array_from_json(read_json_file(path));
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_array_text(in);
}

struct GraphSource {
  std::string file;
  std::string family;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", file, "graph JSON file");
    cmd->add_option("--family", family, "named graph: K5, K3,3, C4, P4, E3, 2K2");
  }
  Graph load() const {
    if (file.empty() == family.empty()) throw InputError("give exactly one of --graph and --family");
    return file.empty() ? graph_from_family(family) : graph_from_json(read_json_file(file));
  }
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string cache_dir;
  std::size_t budget_faces = kDefaultFaceBudget;
  std::size_t budget_vertices = kPsiVertexCap;
  unsigned threads = 1;
  bool json_out = false;
};

namespace detail {

inline void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json) out << j.dump(2) << '\n';
  else out << text;
}

inline std::string witness_text(const Witness& w) {
  std::string s;
  for (auto [cls, id] : w) s += (s.empty() ? "" : " ") + std::to_string(cls) + ":" + std::to_string(id);
  return s;
}

inline json witness_json(const Witness& w) {
  json a = json::array();
  for (auto [cls, id] : w) a.push_back({cls, id});
  return a;
}

inline json transversal_json(const Transversal& t) {
  json a = json::array();
  for (auto [r, c] : t) a.push_back({r, c});
  return a;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Reports go to `out`, diagnostics to
/// `err`; `in` feeds the interactive game.
inline int cli_dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact topological tools for rainbow matchings, transversals and the Meshulam game", "topmatch"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opt;
  app.add_option("--seed", opt.seed, "seed for generated instances");
  app.add_option("--cache-dir", opt.cache_dir, "result cache directory (TOPMATCH_CACHE overrides)");
  app.add_option("--budget-faces", opt.budget_faces, "face budget for complexes");
  app.add_option("--budget-vertices", opt.budget_vertices, "vertex cap for the game solver");
  app.add_option("--threads", opt.threads, "worker threads for sweeps")->check(CLI::Range(1u, 256u));
  app.add_flag("--json", opt.json_out, "JSON output");

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "homological connectivity of I(G) or M(G)");
  GraphSource eta_graph;
  eta_graph.attach(eta_cmd);
  bool eta_matching_flag = false;
  std::optional<std::size_t> eta_cap;
  std::optional<int> dump_dim;
  std::string dump_file;
  eta_cmd->add_flag("--matching", eta_matching_flag, "use the matching complex M(G)");
  eta_cmd->add_option("--cap", eta_cap, "only decide whether eta >= cap");
  eta_cmd->add_option("--dump-boundary", dump_dim, "write the boundary matrix of this dimension as triplets");
  eta_cmd->add_option("--dump-file", dump_file, "file for --dump-boundary (default stdout)");

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "value of the Meshulam game");
  GraphSource psi_graph;
  psi_graph.attach(psi_cmd);
  bool psi_outcomes = false;
  psi_cmd->add_flag("--outcomes", psi_outcomes, "list both branch values of every edge");

  // rainbow
  auto* rb_cmd = app.add_subcommand("rainbow", "rainbow matchings and independent systems of representatives");
  std::string rb_instance, rb_fixture, rb_write;
  std::optional<std::size_t> rb_cyclic, rb_random, rb_hall;
  std::size_t rb_k = 2;
  std::string rb_oracle = "eta";
  bool rb_conditions = false;
  rb_cmd->add_option("--instance", rb_instance, "instance JSON file");
  rb_cmd->add_option("--cyclic", rb_cyclic, "cyclic Stein instance of order n");
  rb_cmd->add_option("--random", rb_random, "seeded random Stein instance of order n");
  rb_cmd->add_option("--fixture", rb_fixture, "jin-yuster | multigraph")->check(CLI::IsMember({"jin-yuster", "multigraph"}));
  rb_cmd->add_option("--k", rb_k, "parameter of the multigraph fixture");
  rb_cmd->add_option("--hall", rb_hall, "run the Hall-type check with deficiency d");
  rb_cmd->add_option("--oracle", rb_oracle, "eta | psi")->check(CLI::IsMember({"eta", "psi"}));
  rb_cmd->add_flag("--conditions", rb_conditions, "evaluate the classical sufficient conditions");
  rb_cmd->add_option("--write", rb_write, "save the instance as JSON");

  // latin
  auto* lt_cmd = app.add_subcommand("latin", "Latin squares, equi-n arrays and transversals");
  std::string lt_array;
  std::optional<std::size_t> lt_cyclic, lt_stein, lt_rlatin, lt_requi;
  lt_cmd->add_option("--array", lt_array, "array file (text, or JSON with .json)");
  lt_cmd->add_option("--cyclic", lt_cyclic, "cyclic Latin square of order n");
  lt_cmd->add_option("--stein", lt_stein, "Stein's equi-n array of order n");
  lt_cmd->add_option("--random-latin", lt_rlatin, "seeded Latin square of order n");
  lt_cmd->add_option("--random-equi", lt_requi, "seeded equi-n array of order n");

  // strategy
  auto* st_cmd = app.add_subcommand("strategy", "CON's line-graph strategy with the inequality audit");
  GraphSource st_graph;
  st_graph.attach(st_cmd);
  std::string st_adversary = "optimal", st_transcript, st_replay;
  double st_p = 0.5;
  std::size_t st_leaves = 10'000'000;
  st_cmd->add_option("--adversary", st_adversary, "optimal | random | delete-until-forced | exhaustive")
      ->check(CLI::IsMember({"optimal", "random", "delete-until-forced", "exhaustive"}));
  st_cmd->add_option("--explode-probability", st_p, "for the random adversary")->check(CLI::Range(0.0, 1.0));
  st_cmd->add_option("--leaf-budget", st_leaves, "playout limit for the exhaustive adversary");
  st_cmd->add_option("--transcript", st_transcript, "write the transcript as JSON lines");
  st_cmd->add_option("--replay", st_replay, "audit a recorded transcript instead of playing");

  // play
  auto* pl_cmd = app.add_subcommand("play", "play the game interactively");
  GraphSource pl_graph;
  pl_graph.attach(pl_cmd);
  std::string pl_side = "con";
  pl_cmd->add_option("--side", pl_side, "con | non")->check(CLI::IsMember({"con", "non"}));

  // bounds
  auto* bd_cmd = app.add_subcommand("bounds", "partial transversal guarantees for order n");
  std::size_t bd_n = 0;
  bd_cmd->add_option("--n", bd_n, "order")->required();

  // verify
  auto* vf_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string vf_check;
  std::size_t vf_n = 0, vf_samples = 0, vf_classes = 0;
  bool vf_samples_set = false;
  vf_cmd->add_option("check", vf_check, "suite name")
      ->required()
      ->check(CLI::IsMember({"etaPsi", "igamma", "nu2", "blz", "theorem-eta", "stein23", "stein-average", "koksma",
                             "ryser", "stein-brualdi", "equirep", "fixtures"}));
  vf_cmd->add_option("--n", vf_n, "order / vertex count");
  auto* samples_opt = vf_cmd->add_option("--samples", vf_samples, "number of seeded instances");
  vf_cmd->add_option("--classes", vf_classes, "number of classes (equirep)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInvalidInput;
  }
  vf_samples_set = samples_opt->count() > 0;

  try {
    if (const char* env = std::getenv("TOPMATCH_CACHE"); env && *env) opt.cache_dir = env;
    ResultCache cache = opt.cache_dir.empty() ? ResultCache() : ResultCache(opt.cache_dir);
    VerifyContext ctx{cache, opt.seed, {opt.budget_faces, opt.budget_vertices, opt.threads}};
    const auto start = std::chrono::steady_clock::now();
    auto seconds = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    if (eta_cmd->parsed()) {
      Graph g = eta_graph.load();
      const Graph target = eta_matching_flag ? (require_simple(g, "eta --matching"), line_graph(g)) : g;
      std::optional<int> max_dim;
      if (eta_cap) max_dim = static_cast<int>(*eta_cap) - 1;
      if (dump_dim && max_dim) max_dim = std::max(*max_dim, *dump_dim);
      const SimplicialComplex c = independence_complex(target, max_dim, opt.budget_faces);
      const EtaValue e = eta(c, eta_cap);
      json j{{"eta", e.to_string()}, {"f_vector", c.f_vector()}, {"complex", eta_matching_flag ? "M(G)" : "I(G)"}};
      std::ostringstream text;
      text << "eta(" << (eta_matching_flag ? "M" : "I") << "(G)) = " << e.to_string() << "\n";
      text << "f-vector (from dim -1):";
      for (auto f : c.f_vector()) text << ' ' << f;
      text << "\n";
      if (!c.truncated()) {
        ChainRanks ranks(c);
        json betti = json::array();
        text << "reduced Betti numbers:";
        for (int d = -1; d <= c.top_dimension(); ++d) {
          betti.push_back(ranks.betti(d));
          text << ' ' << ranks.betti(d);
        }
        text << "\n";
        j["reduced_betti"] = betti;
      }
      detail::emit(out, opt.json_out, j, text.str());
      if (dump_dim) {
        const BoundaryMatrix m = boundary_matrix(c, *dump_dim);
        if (dump_file.empty()) {
          m.write_triplets(out);
        } else {
          std::ofstream f(dump_file);
          if (!f) throw InputError("cannot write " + dump_file);
          m.write_triplets(f);
        }
      }
      return kExitOk;
    }

    if (psi_cmd->parsed()) {
      const Graph g = psi_graph.load();
      const GameValue v = cached_psi(ctx, g);
      json j{{"psi", v.to_string()}, {"cache_hits", cache.hits()}};
      std::ostringstream text;
      text << "psi = " << v.to_string() << "\n";
      if (psi_outcomes) {
        json rows = json::array();
        for (const auto& o : edge_outcomes(g, opt.budget_vertices)) {
          rows.push_back({{"edge", o.edge},
                          {"after_delete", o.after_delete.to_string()},
                          {"after_explode", o.after_explode.to_string()}});
          text << "  [" << o.edge << "] " << g.edge(o.edge).u << "-" << g.edge(o.edge).v
               << "  delete -> " << o.after_delete.to_string() << "  explode -> " << o.after_explode.to_string()
               << "\n";
        }
        j["outcomes"] = rows;
      }
      detail::emit(out, opt.json_out, j, text.str());
      return kExitOk;
    }

    if (rb_cmd->parsed()) {
      const int sources = !rb_instance.empty() + rb_cyclic.has_value() + rb_random.has_value() + !rb_fixture.empty();
      if (sources != 1) throw InputError("give exactly one of --instance, --cyclic, --random, --fixture");
      ColorPartition cp;
      if (!rb_instance.empty()) cp = partition_from_json(read_json_file(rb_instance));
      else if (rb_cyclic) cp = cyclic_stein_instance(*rb_cyclic).partition;
      else if (rb_random) cp = random_stein_instance(*rb_random, opt.seed).partition;
      else if (rb_fixture == "jin-yuster") cp = jin_yuster();
      else cp = multigraph_example(rb_k);
      cp.validate();
      if (!rb_write.empty()) {
        std::ofstream f(rb_write);
        if (!f) throw InputError("cannot write " + rb_write);
        f << partition_to_json(cp).dump(2) << '\n';
      }
      json j{{"mode", cp.mode == PartitionMode::Edge ? "edge" : "vertex"}, {"classes", cp.class_count()}};
      std::ostringstream text;
      text << cp.class_count() << " classes, " << (cp.mode == PartitionMode::Edge ? "edge" : "vertex")
           << " partition\n";
      const auto best = cp.mode == PartitionMode::Edge ? max_rainbow_matching(cp) : max_partial_isr(cp);
      j["max_representatives"] = best.size;
      j["witness"] = detail::witness_json(best.witness);
      j["full"] = best.size == cp.class_count();
      text << (cp.mode == PartitionMode::Edge ? "max rainbow matching: " : "max partial ISR: ") << best.size
           << (best.size == cp.class_count() ? " (full)" : "") << "\n  witness (class:id) "
           << detail::witness_text(best.witness) << "\n";
      if (rb_hall) {
        const HallReport h = hall_condition_check(cp, *rb_hall,
                                                  rb_oracle == "psi" ? ConnectivityOracle::Psi : ConnectivityOracle::Eta,
                                                  opt.budget_faces, opt.budget_vertices);
        json hj{{"d", *rb_hall}, {"oracle", rb_oracle}, {"passed", h.passed}, {"subsets_checked", h.subsets_checked}};
        text << "Hall condition (d=" << *rb_hall << ", " << rb_oracle << "): " << (h.passed ? "holds" : "fails")
             << " over " << h.subsets_checked << " subsets\n";
        if (!h.passed) {
          hj["worst_subset"] = h.worst_subset;
          hj["worst_value"] = h.worst_value;
          hj["required"] = h.worst_required;
          text << "  worst subset {";
          for (std::size_t i = 0; i < h.worst_subset.size(); ++i) text << (i ? "," : "") << h.worst_subset[i];
          text << "}: " << h.worst_value << " < " << h.worst_required << "\n";
        }
        if (h.cross_validated) {
          hj["cross_validated"] = *h.cross_validated;
          text << "  partial ISR of size m-d " << (*h.cross_validated ? "found" : "NOT found") << "\n";
        }
        j["hall"] = hj;
      }
      if (rb_conditions) {
        const auto sc = check_sufficient_conditions(cp);
        json entries = json::array();
        text << "sufficient conditions (min class size " << sc.min_class_size << "):\n";
        for (const auto& e : sc.entries) {
          entries.push_back({{"name", e.name},
                             {"conjecture", e.conjecture},
                             {"applicable", e.applicable},
                             {"hypothesis", e.hypothesis},
                             {"detail", e.detail}});
          text << "  " << e.name << (e.conjecture ? " (conjecture)" : "") << ": "
               << (!e.applicable ? "not applicable" : e.hypothesis ? "holds" : "fails") << "  [" << e.detail << "]\n";
        }
        j["conditions"] = entries;
        j["guaranteed"] = sc.guaranteed();
      }
      detail::emit(out, opt.json_out, j, text.str());
      return kExitOk;
    }

    if (lt_cmd->parsed()) {
      const int sources = !lt_array.empty() + lt_cyclic.has_value() + lt_stein.has_value() + lt_rlatin.has_value() +
                          lt_requi.has_value();
      if (sources != 1) throw InputError("give exactly one array source");
      SymbolArray a;
      if (!lt_array.empty()) a = read_array_file(lt_array);
      else if (lt_cyclic) a = cyclic_latin(*lt_cyclic);
      else if (lt_stein) a = stein_array(*lt_stein);
      else if (lt_rlatin) a = random_latin(*lt_rlatin, opt.seed);
      else a = random_equi_array(*lt_requi, opt.seed);
      const auto t = cached_transversal(ctx, a);
      json j{{"array", array_to_json(a)},
             {"latin", is_latin(a)},
             {"equi_n", is_equi_n(a)},
             {"max_partial_transversal", t.size},
             {"lower_bound_only", t.lower_bound_only},
             {"witness", detail::transversal_json(t.witness)}};
      std::ostringstream text;
      write_array_text(text, a);
      text << "latin: " << (is_latin(a) ? "yes" : "no") << "   equi-n: " << (is_equi_n(a) ? "yes" : "no") << "\n";
      text << "max partial transversal: " << t.size << (t.lower_bound_only ? " (lower bound only)" : "") << "\n  cells";
      for (auto [r, c] : t.witness) text << " (" << r << "," << c << ")";
      text << "\n";
      if (a.order() <= 7 && a.order() > 0) {
        std::ostringstream avg;
        avg << cached_average(ctx, a);
        j["average_distinct_symbols"] = avg.str();
        text << "average distinct symbols over permutations: " << avg.str() << "\n";
      }
      detail::emit(out, opt.json_out, j, text.str());
      return kExitOk;
    }

    if (bd_cmd->parsed()) {
      json rows = json::array();
      std::ostringstream text;
      text << "guarantees for order " << bd_n << ":\n";
      for (const auto& b : bounds_table(bd_n)) {
        std::ostringstream exact;
        if (b.exact) exact << *b.exact;
        rows.push_back({{"name", b.name},
                        {"formula", b.formula},
                        {"exact", b.exact ? json(exact.str()) : json(nullptr)},
                        {"approx", static_cast<double>(b.approx)},
                        {"guaranteed", b.guaranteed.str()},
                        {"scope", b.scope}});
        text << "  " << std::left << std::setw(17) << b.name << std::setw(18) << b.formula << std::setw(12)
             << (b.exact ? exact.str() : std::to_string(static_cast<double>(b.approx))) << " -> "
             << b.guaranteed.str() << "   (" << b.scope << ")\n";
      }
      detail::emit(out, opt.json_out, json{{"n", bd_n}, {"bounds", rows}}, text.str());
      return kExitOk;
    }

    if (pl_cmd->parsed()) {
      const Graph g = pl_graph.load();
      const PlayRecord rec = interactive_game(g, pl_side == "con" ? Side::Con : Side::Non, in,
                                              opt.json_out ? err : out, opt.budget_vertices);
      if (opt.json_out) {
        json moves = json::array();
        for (const auto& m : rec.moves) moves.push_back({{"edge", m.edge}, {"response", to_string(m.response)}});
        out << json{{"moves", moves},
                    {"finished", rec.finished},
                    {"value", rec.finished ? json(rec.value.to_string()) : json(nullptr)},
                    {"psi", rec.root_psi.to_string()}}
                   .dump(2)
            << '\n';
      }
      return kExitOk;
    }

    VerificationReport rep;
    rep.seed = opt.seed;

    if (st_cmd->parsed()) {
      rep.command = "strategy";
      std::vector<AuditReport> audits;
      std::vector<GameTranscript> kept;
      std::size_t finite = 0, min_t = 0;
      Graph root;
      if (!st_replay.empty()) {
        std::ifstream f(st_replay);
        if (!f) throw InputError("cannot open " + st_replay);
        GameTranscript tr = read_transcript(f);
        root = tr.root;
        rep.parameters = {{"replay", st_replay}};
        audits.push_back(audit_transcript(tr, root));
        kept.push_back(std::move(tr));
      } else {
        root = st_graph.load();
        rep.parameters = {{"graph", graph_to_json(root)}, {"adversary", st_adversary}};
        if (st_adversary == "exhaustive") {
          for_each_playout(
              root,
              [&](const GameTranscript& tr) {
                audits.push_back(audit_transcript(tr, root));
                if (kept.empty()) kept.push_back(tr);
                if (!tr.infinite) {
                  min_t = finite ? std::min(min_t, tr.explosions()) : tr.explosions();
                  ++finite;
                }
              },
              st_leaves);
        } else {
          Adversary non = st_adversary == "optimal"  ? optimal_adversary(opt.budget_vertices)
                          : st_adversary == "random" ? random_adversary(opt.seed, st_p)
                                                     : delete_until_forced();
          if (st_adversary == "random") rep.parameters["explode_probability"] = st_p;
          GameTranscript tr = con_strategy_play(root, non);
          audits.push_back(audit_transcript(tr, root));
          kept.push_back(std::move(tr));
        }
      }
      if (!st_transcript.empty() && !kept.empty()) {
        std::ofstream f(st_transcript);
        if (!f) throw InputError("cannot write " + st_transcript);
        write_transcript(f, kept.front());
      }
      const char* names[] = {checks::kBalanced,           checks::kRemovalCount, checks::kRemovalSides,
                             checks::kHowManyRemoved,     checks::kThird,        checks::kTerminalIndependent,
                             checks::kDeltaSmall,         checks::kEdgeDrop,     checks::kHeadline,
                             checks::kSmallWorld};
      for (const char* name : names) {
        ReportCheck c{name, checks::is_core(name) ? CheckKind::Theorem : CheckKind::Conjecture};
        std::size_t evaluated = 0;
        for (std::size_t i = 0; i < audits.size(); ++i) {
          const auto fails = audits[i].count(name, CheckOutcome::Fail);
          const auto passes = audits[i].count(name, CheckOutcome::Pass);
          const auto vac = audits[i].count(name, CheckOutcome::Vacuous);
          evaluated += fails + passes + vac;
          c.vacuous += vac;
          if (fails) {
            ++c.violations;
            for (const auto& r : audits[i].failures())
              if (r.name == name) {
                rep.add_counterexample(name, {{"playout", i}, {"step", r.step ? json(*r.step) : json(nullptr)},
                                              {"detail", r.detail}});
                break;
              }
          }
        }
        c.instances = audits.size();
        c.outcome = c.violations ? CheckOutcome::Fail
                    : (evaluated > 0 && c.vacuous == evaluated) ? CheckOutcome::Vacuous
                                                                 : CheckOutcome::Pass;
        c.detail = std::to_string(evaluated) + " evaluations over " + std::to_string(audits.size()) +
                   " playouts, " + std::to_string(c.violations) + " playouts failing";
        rep.checks.push_back(std::move(c));
      }
      if (!st_replay.empty() || st_adversary != "exhaustive") {
        rep.parameters["value"] = kept.front().value().to_string();
        rep.parameters["explosions"] = kept.front().explosions();
      } else {
        rep.parameters["playouts"] = audits.size();
        rep.parameters["finite_playouts"] = finite;
        if (finite) rep.parameters["min_explosions"] = min_t;
      }
      std::ostringstream bound;
      bound << strategy_bound(root);
      rep.parameters["bound"] = bound.str();
    } else if (vf_cmd->parsed()) {
      rep.command = "verify " + vf_check;
      auto pick = [&](std::size_t n_default, std::size_t samples_default) {
        if (vf_n == 0) vf_n = n_default;
        if (!vf_samples_set) vf_samples = samples_default;
      };
      if (vf_check == "etaPsi" || vf_check == "igamma" || vf_check == "nu2") {
        pick(5, 0);
        const GraphBound which = vf_check == "etaPsi" ? GraphBound::EtaPsi
                                 : vf_check == "igamma" ? GraphBound::Igamma
                                                        : GraphBound::Nu2;
        verify_graph_bound(ctx, rep, which, vf_n, vf_samples);
      } else if (vf_check == "blz") {
        if (vf_n == 0) {
          for (std::size_t n = 2; n <= 5; ++n) verify_blz(ctx, rep, n);
        } else {
          verify_blz(ctx, rep, vf_n);
        }
      } else if (vf_check == "theorem-eta") {
        pick(2, 0);
        verify_theorem_eta(ctx, rep, vf_n, vf_samples);
      } else if (vf_check == "stein23") {
        pick(3, 500);
        verify_stein23(ctx, rep, vf_n, vf_samples);
      } else if (vf_check == "stein-average") {
        pick(3, 50);
        verify_stein_average(ctx, rep, vf_n, vf_samples);
      } else if (vf_check == "koksma") {
        pick(4, 100);
        verify_transversal_floor(ctx, rep, "koksma", CheckKind::Theorem, ArraySource::Latin, vf_n, vf_samples,
                                 (2 * vf_n + 2) / 3);
      } else if (vf_check == "ryser") {
        pick(5, 100);
        if (vf_n % 2 == 0) throw InputError("ryser: n must be odd");
        verify_transversal_floor(ctx, rep, "ryser", CheckKind::Conjecture, ArraySource::Latin, vf_n, vf_samples, vf_n);
      } else if (vf_check == "stein-brualdi") {
        pick(4, 100);
        verify_transversal_floor(ctx, rep, "brualdi", CheckKind::Conjecture, ArraySource::Latin, vf_n, vf_samples,
                                 vf_n - 1);
        verify_transversal_floor(ctx, rep, "stein", CheckKind::Conjecture, ArraySource::EquiN, vf_n, vf_samples,
                                 vf_n - 1);
      } else if (vf_check == "equirep") {
        pick(3, 100);
        if (vf_classes == 0) vf_classes = vf_n;
        verify_equirep_sweep(ctx, rep, vf_n, vf_classes, vf_samples);
      } else {
        verify_fixtures(ctx, rep);
      }
      rep.parameters = {{"check", vf_check}};
      if (vf_n) rep.parameters["n"] = vf_n;
      if (vf_samples) rep.parameters["samples"] = vf_samples;
      if (vf_classes) rep.parameters["classes"] = vf_classes;
    }

    rep.wall_clock_seconds = seconds();
    rep.cache_hits = cache.hits();
    if (opt.json_out) out << rep.to_json().dump(2) << '\n';
    else rep.print_table(out);
    for (const auto& c : rep.checks)
      if (c.outcome == CheckOutcome::Fail)
        err << (c.kind == CheckKind::Theorem ? "THEOREM VIOLATION: " : "DISCOVERY: ") << c.name << " (" << c.detail
            << ")\n";
    return rep.exit_code();
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const SizeError& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CorruptionError& e) {
    err << "corrupt input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const UndominatableError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ProtocolError& e) {
    err << "protocol error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace topmatch::cli
