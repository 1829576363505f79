#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "topmatch/cli/cache.hpp"
#include "topmatch/cli/report.hpp"
#include "topmatch/graph_io.hpp"
#include "topmatch/homology.hpp"
#include "topmatch/latin.hpp"
#include "topmatch/rainbow.hpp"
#include "topmatch/rainbow_io.hpp"

namespace topmatch::cli {

struct Budgets {
  std::size_t faces = kDefaultFaceBudget;
  std::size_t psi_vertices = kPsiVertexCap;
  unsigned threads = 1;
};

struct VerifyContext {
  ResultCache& cache;
  std::uint64_t seed = 0;
  Budgets budgets;
};

/// Runs f(0..count-1) on up to `threads` workers and returns the results in
/// index order. The first exception thrown by any worker is rethrown.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned threads, F&& f) {
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// ---------------------------------------------------------------------------
// Instance generators

/// Graph on n vertices whose edge set is the bit pattern of mask over the
/// pairs (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

/// G(n, 1/2).
inline Graph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

/// K_{n,n} restricted to the edges whose ids are set in mask.
inline Graph bipartite_subgraph(std::size_t n, std::uint64_t mask) {
  Graph g = complete_bipartite(n, n);
  for (EdgeId id = 0; id < n * n; ++id)
    if (!(mask >> id & 1U)) g.remove_edge(id);
  return g;
}

// ---------------------------------------------------------------------------
// Cached computations

inline EtaValue parse_eta(const std::string& s) {
  if (s == "inf") return EtaValue::infinite();
  if (s.rfind(">=", 0) == 0) return EtaValue::at_least(std::stoull(s.substr(2)));
  return EtaValue::finite(std::stoull(s));
}

inline GameValue parse_game_value(const std::string& s) {
  if (s == "inf") return GameValue::infinite();
  return GameValue::finite(static_cast<std::uint32_t>(std::stoul(s)));
}

inline std::string array_key(const SymbolArray& a) {
  std::string k = "A" + std::to_string(a.order());
  for (int c : a.cells()) k += "," + std::to_string(c);
  return k;
}

inline EtaValue cached_eta(VerifyContext& ctx, const Graph& g) {
  const json v = ctx.cache.fetch("eta-independence", canonical_key(g), "", [&] {
    return eta_independence(g, std::nullopt, ctx.budgets.faces).to_string();
  });
  return parse_eta(v.get<std::string>());
}

inline GameValue cached_psi(VerifyContext& ctx, const Graph& g) {
  const json v = ctx.cache.fetch("psi", canonical_key(g), "", [&] { return psi(g, ctx.budgets.psi_vertices).to_string(); });
  return parse_game_value(v.get<std::string>());
}

inline std::size_t cached_igamma(VerifyContext& ctx, const Graph& g) {
  return ctx.cache.fetch("igamma", canonical_key(g), "", [&] { return igamma(g); }).get<std::size_t>();
}

inline std::size_t cached_matching_number(VerifyContext& ctx, const Graph& g) {
  return ctx.cache.fetch("nu", canonical_key(g), "", [&] { return max_matching(g); }).get<std::size_t>();
}

inline std::size_t cached_rainbow(VerifyContext& ctx, const ColorPartition& cp) {
  return ctx.cache.fetch("max-rainbow", partition_to_json(cp).dump(), "", [&] { return max_rainbow_matching(cp).size; })
      .get<std::size_t>();
}

inline bool cached_isr(VerifyContext& ctx, const ColorPartition& cp) {
  return ctx.cache.fetch("isr", partition_to_json(cp).dump(), "", [&] { return isr_exists(cp).first; }).get<bool>();
}

inline TransversalResult cached_transversal(VerifyContext& ctx, const SymbolArray& a) {
  const json v = ctx.cache.fetch("max-transversal", array_key(a), "", [&] {
    const auto r = max_partial_transversal(a);
    json w = json::array();
    for (auto [i, j] : r.witness) w.push_back({i, j});
    return json{{"size", r.size}, {"lower_bound_only", r.lower_bound_only}, {"witness", w}};
  });
  TransversalResult r;
  r.size = v.at("size");
  r.lower_bound_only = v.at("lower_bound_only");
  for (const auto& c : v.at("witness")) r.witness.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
  return r;
}

inline Rational cached_average(VerifyContext& ctx, const SymbolArray& a) {
  const json v = ctx.cache.fetch("average-distinct", array_key(a), "", [&] {
    std::ostringstream s;
    s << average_distinct_symbols(a);
    return s.str();
  });
  return Rational(v.get<std::string>());
}

inline bool cached_equirep(VerifyContext& ctx, const ColorPartition& cp) {
  return ctx.cache.fetch("equirep", partition_to_json(cp).dump(), "", [&] { return verify_equirep(cp).holds; })
      .get<bool>();
}

// ---------------------------------------------------------------------------
// Sweeps

/// Outcome of one instance of a sweep.
struct InstanceOutcome {
  bool vacuous = false;
  bool violated = false;
  json payload;
};

/// Folds per-instance outcomes into one report line.
inline void record_sweep(VerificationReport& rep, std::string name, CheckKind kind,
                         const std::vector<InstanceOutcome>& outcomes, std::string extra = {}) {
  ReportCheck c{std::move(name), kind, CheckOutcome::Pass, {}, outcomes.size(), 0, 0};
  for (const auto& o : outcomes) {
    if (o.vacuous) ++c.vacuous;
    if (o.violated) {
      ++c.violations;
      rep.add_counterexample(c.name, o.payload);
    }
  }
  if (c.violations) c.outcome = CheckOutcome::Fail;
  else if (c.instances > 0 && c.vacuous == c.instances) c.outcome = CheckOutcome::Vacuous;
  c.detail = std::to_string(c.instances) + " instances, " + std::to_string(c.violations) + " violations";
  if (c.vacuous) c.detail += ", " + std::to_string(c.vacuous) + " vacuous";
  if (!extra.empty()) c.detail += "; " + extra;
  rep.checks.push_back(std::move(c));
}

inline void record_single(VerificationReport& rep, std::string name, CheckKind kind, bool ok, std::string detail,
                          json payload = nullptr) {
  if (!ok && !payload.is_null()) rep.add_counterexample(name, payload);
  rep.checks.push_back({std::move(name), kind, ok ? CheckOutcome::Pass : CheckOutcome::Fail, std::move(detail), 1,
                        ok ? 0u : 1u, 0});
}

enum class GraphBound { EtaPsi, Igamma, Nu2 };

/// All labelled graphs on n vertices (samples == 0) or `samples` seeded G(n, 1/2) graphs.
inline void verify_graph_bound(VerifyContext& ctx, VerificationReport& rep, GraphBound which, std::size_t n,
                               std::size_t samples) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (samples == 0 && n > 6) throw InputError("exhaustive sweeps stop at 6 vertices; pass --samples");
  const std::size_t count = samples ? samples : (std::size_t{1} << pairs);
  auto outcomes = parallel_map<InstanceOutcome>(count, ctx.budgets.threads, [&](std::size_t i) {
    const Graph g = samples ? random_graph(n, derive_seed(ctx.seed, i)) : graph_from_mask(n, i);
    InstanceOutcome o;
    const EtaValue e = cached_eta(ctx, g);
    json payload{{"graph", graph_to_json(g)}, {"eta", e.to_string()}};
    switch (which) {
      case GraphBound::EtaPsi: {
        const GameValue p = cached_psi(ctx, g);
        o.violated = p.is_infinite() ? !e.is_infinite() : !e.reaches(p.value());
        payload["psi"] = p.to_string();
        break;
      }
      case GraphBound::Igamma: {
        bool isolated = false;
        for (auto v : members(g.active())) isolated = isolated || g.degree(v) == 0;
        if (isolated) {
          o.vacuous = true;  // iγ undefined; I(G) is a cone
          o.violated = !e.is_infinite();
        } else {
          const auto ig = cached_igamma(ctx, g);
          o.violated = !e.reaches(ig);
          payload["igamma"] = ig;
        }
        break;
      }
      case GraphBound::Nu2: {
        const auto nu = cached_matching_number(ctx, g);
        o.violated = !e.reaches(Rational(static_cast<long long>(nu), 2));
        payload["nu"] = nu;
        break;
      }
    }
    o.payload = std::move(payload);
    return o;
  });
  const char* names[] = {"etaPsi", "igamma", "nu2"};
  record_sweep(rep, std::string(names[static_cast<int>(which)]) + " n=" + std::to_string(n), CheckKind::Theorem,
               outcomes, samples ? "seeded G(n,1/2)" : "all labelled graphs");
}

/// η(M(K_{n,n})) >= floor(2n/3), and the stated equality.
inline void verify_blz(VerifyContext& ctx, VerificationReport& rep, std::size_t n) {
  const Graph lg = line_graph(complete_bipartite(n, n));
  const EtaValue e = cached_eta(ctx, lg);
  const std::size_t target = 2 * n / 3;
  const std::string detail = "eta=" + e.to_string() + " floor(2n/3)=" + std::to_string(target);
  const json payload{{"n", n}, {"eta", e.to_string()}, {"floor_2n_3", target}};
  record_single(rep, "blz-lower n=" + std::to_string(n), CheckKind::Theorem, e.reaches(target), detail, payload);
  record_single(rep, "blz-equality n=" + std::to_string(n), CheckKind::Theorem, e.is_finite() && e.value() == target,
                detail, payload);
}

/// η(M(F)) >= |F|/n - n/3 - 1/2 for F ⊆ E(K_{n,n}).
inline void verify_theorem_eta(VerifyContext& ctx, VerificationReport& rep, std::size_t n, std::size_t samples) {
  if (n == 0 || n > 8) throw InputError("theorem-eta: n must be between 1 and 8");
  if (samples == 0 && n > 3) throw InputError("theorem-eta: exhaustive only for n <= 3; pass --samples");
  const std::size_t count = samples ? samples : (std::size_t{1} << (n * n));
  auto outcomes = parallel_map<InstanceOutcome>(count, ctx.budgets.threads, [&](std::size_t i) {
    std::uint64_t mask = i;
    if (samples) {
      std::mt19937_64 rng(derive_seed(ctx.seed, i));
      mask = rng() & ((n * n == 64) ? ~0ULL : ((1ULL << (n * n)) - 1));
    }
    const Graph f = bipartite_subgraph(n, mask);
    const EtaValue e = cached_eta(ctx, line_graph(f));
    const Rational bound = Rational(static_cast<long long>(f.size()), static_cast<long long>(n)) -
                           Rational(static_cast<long long>(n), 3) - Rational(1, 2);
    InstanceOutcome o;
    o.violated = !e.reaches(bound);
    std::ostringstream b;
    b << bound;
    o.payload = {{"n", n}, {"edges", graph_to_json(f).at("edges")}, {"eta", e.to_string()}, {"bound", b.str()}};
    return o;
  });
  record_sweep(rep, "theorem-eta n=" + std::to_string(n), CheckKind::Theorem, outcomes,
               samples ? "seeded subsets" : "all subsets");
}

inline void verify_stein23(VerifyContext& ctx, VerificationReport& rep, std::size_t n, std::size_t samples) {
  const BigInt need = ceil_rational(bound_stein23(n));
  std::vector<std::size_t> sizes(samples);
  auto outcomes = parallel_map<InstanceOutcome>(samples, ctx.budgets.threads, [&](std::size_t i) {
    const SteinInstance inst = random_stein_instance(n, derive_seed(ctx.seed, i));
    const auto size = cached_rainbow(ctx, inst.partition);
    sizes[i] = size;
    InstanceOutcome o;
    o.violated = BigInt(size) < need;
    o.payload = {{"instance", partition_to_json(inst.partition)}, {"max_rainbow", size}};
    return o;
  });
  std::size_t min_seen = samples ? n : 0, below = 0;
  std::vector<InstanceOutcome> knn(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    min_seen = std::min(min_seen, sizes[i]);
    if (sizes[i] + 1 < n) {
      ++below;
      knn[i].violated = true;
      knn[i].payload = outcomes[i].payload;
    }
  }
  record_sweep(rep, "stein23 n=" + std::to_string(n), CheckKind::Theorem, outcomes,
               "need >= " + need.str() + ", min observed " + std::to_string(min_seen));
  record_sweep(rep, "steinknn n=" + std::to_string(n), CheckKind::Conjecture, knn,
               std::to_string(below) + " below n-1");
}

inline void verify_stein_average(VerifyContext& ctx, VerificationReport& rep, std::size_t n, std::size_t samples) {
  const Rational bound = stein_average_bound(n);
  auto outcomes = parallel_map<InstanceOutcome>(samples, ctx.budgets.threads, [&](std::size_t i) {
    const SymbolArray a = random_equi_array(n, derive_seed(ctx.seed, i));
    const Rational avg = cached_average(ctx, a);
    InstanceOutcome o;
    o.violated = avg < bound;
    std::ostringstream s;
    s << avg;
    o.payload = {{"array", array_to_json(a)}, {"average", s.str()}};
    return o;
  });
  std::ostringstream b;
  b << bound;
  record_sweep(rep, "stein-average n=" + std::to_string(n), CheckKind::Theorem, outcomes, "bound " + b.str());
}

enum class ArraySource { Latin, EquiN };

/// Sweeps max_partial_transversal over seeded arrays against a threshold.
/// Results that are only lower bounds and fall short count as vacuous.
inline void verify_transversal_floor(VerifyContext& ctx, VerificationReport& rep, const std::string& name,
                                     CheckKind kind, ArraySource source, std::size_t n, std::size_t samples,
                                     std::size_t need) {
  std::size_t min_seen = n;
  std::vector<std::size_t> sizes(samples);
  auto outcomes = parallel_map<InstanceOutcome>(samples, ctx.budgets.threads, [&](std::size_t i) {
    const auto s = derive_seed(ctx.seed, i);
    const SymbolArray a = source == ArraySource::Latin ? random_latin(n, s) : random_equi_array(n, s);
    const auto r = cached_transversal(ctx, a);
    sizes[i] = r.size;
    InstanceOutcome o;
    if (r.size < need) {
      if (r.lower_bound_only) o.vacuous = true;
      else o.violated = true;
    }
    o.payload = {{"array", array_to_json(a)}, {"max_partial_transversal", r.size}};
    return o;
  });
  for (auto s : sizes) min_seen = std::min(min_seen, s);
  record_sweep(rep, name + " n=" + std::to_string(n), kind, outcomes,
               "need >= " + std::to_string(need) + ", min observed " + std::to_string(samples ? min_seen : 0));
}

/// Uniformly random class for each edge of K_{n,n}; empty classes dropped.
inline ColorPartition random_edge_partition(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  SymbolArray colors(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) colors(i, j) = static_cast<int>(pick(rng));
  return partition_from_colors(colors);
}

inline void verify_equirep_sweep(VerifyContext& ctx, VerificationReport& rep, std::size_t n, std::size_t m,
                                 std::size_t samples) {
  if (m == 0 || m > n) throw InputError("equirep: need 1 <= classes <= n");
  auto outcomes = parallel_map<InstanceOutcome>(samples, ctx.budgets.threads, [&](std::size_t i) {
    const ColorPartition cp = random_edge_partition(n, m, derive_seed(ctx.seed, i));
    InstanceOutcome o;
    o.violated = !cached_equirep(ctx, cp);
    o.payload = {{"instance", partition_to_json(cp)}};
    return o;
  });
  record_sweep(rep, "equirep n=" + std::to_string(n) + " m=" + std::to_string(m), CheckKind::Conjecture, outcomes);
}

inline void verify_fixtures(VerifyContext& ctx, VerificationReport& rep) {
  const ColorPartition jy = jin_yuster();
  const bool jy_isr = cached_isr(ctx, jy);
  record_single(rep, "jin-yuster no ISR", CheckKind::Theorem, !jy_isr, jy_isr ? "ISR found" : "no ISR (81 branches)");
  const HallReport hall = hall_condition_check(jy, 0, ConnectivityOracle::Eta, ctx.budgets.faces);
  std::string worst;
  for (auto i : hall.worst_subset) worst += (worst.empty() ? "" : ",") + std::to_string(i);
  record_single(rep, "jin-yuster Hall condition fails", CheckKind::Theorem, !hall.passed,
                hall.passed ? "condition holds" : "worst I={" + worst + "} eta=" + hall.worst_value +
                                                      " < " + std::to_string(hall.worst_required));
  for (std::size_t k : {2, 3}) {
    const ColorPartition mg = multigraph_example(k);
    const auto size = cached_rainbow(ctx, mg);
    record_single(rep, "multigraph k=" + std::to_string(k) + " no full rainbow matching", CheckKind::Theorem,
                  size < k + 1, "max " + std::to_string(size) + " of " + std::to_string(k + 1) + " classes");
  }
  for (std::size_t n : {2, 4, 6}) {
    const auto r = cached_transversal(ctx, cyclic_latin(n));
    record_single(rep, "cyclic-latin n=" + std::to_string(n) + " max partial n-1", CheckKind::Theorem,
                  !r.lower_bound_only && r.size + 1 == n, "max " + std::to_string(r.size));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = cached_transversal(ctx, stein_array(n));
    record_single(rep, "stein-array n=" + std::to_string(n) + " max partial n-1", CheckKind::Theorem,
                  !r.lower_bound_only && r.size + 1 == n, "max " + std::to_string(r.size));
  }
}

}  // namespace topmatch::cli
