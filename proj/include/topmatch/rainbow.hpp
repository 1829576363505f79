#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topmatch/game.hpp"
#include "topmatch/graph.hpp"
#include "topmatch/homology.hpp"
#include "topmatch/symbol_array.hpp"

namespace topmatch {

enum class PartitionMode { Edge, Vertex };

/// A graph together with a partition of its edges (rainbow matchings) or of
/// its vertices (independent sets of representatives). Class k of the list
/// has class id k+1.
struct ColorPartition {
  Graph host;
  PartitionMode mode = PartitionMode::Edge;
  std::vector<std::vector<std::uint32_t>> classes;

  std::size_t class_count() const { return classes.size(); }

  /// Throws InputError unless the classes partition the ground set exactly.
  void validate() const {
    const std::size_t space = mode == PartitionMode::Edge ? host.edge_slots() : host.vertex_count();
    std::vector<bool> seen(space, false);
    std::size_t covered = 0;
    for (const auto& cls : classes) {
      if (cls.empty()) throw InputError("colour classes must be nonempty");
      for (auto id : cls) {
        const bool present = mode == PartitionMode::Edge ? host.has_edge(id) : host.is_active(id);
        if (!present) throw InputError("colour class names an element outside the ground set");
        if (seen[id]) throw InputError("colour classes overlap");
        seen[id] = true;
        ++covered;
      }
    }
    const std::size_t ground = mode == PartitionMode::Edge ? host.size() : host.order();
    if (covered != ground) throw InputError("colour classes do not cover the ground set");
  }
};

/// Edge (i, j) of K_{n,n} coloured colors(i, j); class ids follow the
/// ascending order of the distinct colours.
inline ColorPartition partition_from_colors(const SymbolArray& colors) {
  const auto n = colors.order();
  ColorPartition cp{complete_bipartite(n, n), PartitionMode::Edge, {}};
  const auto alphabet = colors.alphabet();
  cp.classes.resize(alphabet.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), colors(i, j)) -
                                              alphabet.begin());
      cp.classes[k].push_back(static_cast<std::uint32_t>(i * n + j));
    }
  return cp;
}

/// Inverse of partition_from_colors for partitions over K_{n,n} built by
/// complete_bipartite: cell (i, j) holds the 0-based class index.
inline SymbolArray colors_of(const ColorPartition& cp) {
  const auto n = cp.host.vertex_count() / 2;
  if (cp.mode != PartitionMode::Edge || cp.host.edge_slots() != n * n)
    throw InputError("expected an edge partition of K_{n,n}");
  SymbolArray a(n, -1);
  for (std::size_t k = 0; k < cp.classes.size(); ++k)
    for (auto id : cp.classes[k]) a(id / n, id % n) = static_cast<int>(k);
  return a;
}

/// Partition of E(K_{n,n}) into n classes of size n.
struct SteinInstance {
  std::size_t n = 0;
  ColorPartition partition;

  static SteinInstance from_colors(const SymbolArray& colors) {
    if (!is_equi_n(colors)) throw InputError("a Stein instance needs every colour on exactly n edges");
    return {colors.order(), partition_from_colors(colors)};
  }
};

/// colour(i, j) = i + j mod n.
inline SteinInstance cyclic_stein_instance(std::size_t n) {
  SymbolArray c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<int>((i + j) % n);
  return SteinInstance::from_colors(c);
}

/// Independent stream seed for instance `index` of a sweep (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Cyclic colouring followed by `swaps` (default 10 n^2) seeded exchanges of
/// the colours of two differently coloured edges; class sizes stay n.
inline SteinInstance random_stein_instance(std::size_t n, std::uint64_t seed, std::optional<std::size_t> swaps = {}) {
  if (n == 0) throw InputError("order must be at least 1");
  SymbolArray c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<int>((i + j) % n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> cell(0, n * n - 1);
  const std::size_t rounds = swaps.value_or(10 * n * n);
  for (std::size_t s = 0; s < rounds && n > 1; ++s) {
    std::size_t a, b;
    do {
      a = cell(rng);
      b = cell(rng);
    } while (c(a / n, a % n) == c(b / n, b % n));
    std::swap(c(a / n, a % n), c(b / n, b % n));
  }
  return SteinInstance::from_colors(c);
}

// ---------------------------------------------------------------------------
// Exact representative search

inline constexpr std::size_t kDefaultNodeBudget = 50'000'000;

/// (class id, element id) pairs, one per used class, ascending by class.
using Witness = std::vector<std::pair<std::size_t, std::uint32_t>>;

struct RepresentativeResult {
  std::size_t size = 0;
  Witness witness;
};

namespace detail {

/// Largest set of pairwise compatible elements, at most one per class.
/// Classes are tried in order, elements ascending, "take" before "skip",
/// so the first optimum found is the lexicographically least witness.
class RepresentativeSearch {
 public:
  RepresentativeSearch(std::vector<std::vector<std::uint32_t>> classes, std::vector<VertexSet> conflicts,
                       std::size_t node_budget)
      : classes_(std::move(classes)), conflicts_(std::move(conflicts)), budget_(node_budget) {
    for (auto& c : classes_) std::sort(c.begin(), c.end());
  }

  RepresentativeResult run(std::optional<std::size_t> stop_at = {}) {
    stop_at_ = stop_at;
    VertexSet blocked(conflicts_.empty() ? 0 : conflicts_[0].size());
    std::vector<std::pair<std::size_t, std::uint32_t>> chosen;
    dfs(0, blocked, chosen);
    return best_;
  }

 private:
  bool done() const { return stop_at_ && best_.size >= *stop_at_; }

  void dfs(std::size_t c, const VertexSet& blocked, std::vector<std::pair<std::size_t, std::uint32_t>>& chosen) {
    if (++nodes_ > budget_) throw SizeError("representative search exceeded its node budget");
    if (chosen.size() > best_.size || (best_.witness.empty() && chosen.size() == best_.size && !found_)) {
      best_.size = chosen.size();
      best_.witness = chosen;
      found_ = true;
    }
    if (c == classes_.size() || done()) return;
    std::size_t open = 0;
    for (std::size_t k = c; k < classes_.size(); ++k)
      for (auto id : classes_[k])
        if (!blocked.test(id)) {
          ++open;
          break;
        }
    if (chosen.size() + open <= best_.size) return;
    for (auto id : classes_[c]) {
      if (blocked.test(id)) continue;
      chosen.emplace_back(c + 1, id);
      dfs(c + 1, blocked | conflicts_[id], chosen);
      chosen.pop_back();
      if (done()) return;
    }
    dfs(c + 1, blocked, chosen);
  }

  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<VertexSet> conflicts_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::optional<std::size_t> stop_at_;
  bool found_ = false;
  RepresentativeResult best_;
};

/// Conflict sets over the partition's ground ids; an element conflicts with itself.
inline std::vector<VertexSet> conflict_sets(const ColorPartition& cp) {
  if (cp.mode == PartitionMode::Edge) {
    const auto slots = cp.host.edge_slots();
    std::vector<VertexSet> out(slots, VertexSet(slots));
    for (EdgeId a : cp.host.edge_ids()) {
      const auto& ea = cp.host.edge(a);
      for (Vertex w : {ea.u, ea.v})
        for (EdgeId b : cp.host.incident(w)) out[a].set(b);
    }
    return out;
  }
  const auto n = cp.host.vertex_count();
  std::vector<VertexSet> out(n, VertexSet(n));
  for (auto v : members(cp.host.active())) {
    out[v] = cp.host.neighbors(v);
    out[v].set(v);
  }
  return out;
}

}  // namespace detail

/// Maximum partial rainbow matching of an edge partition, by branch and
/// bound over the colours.
inline RepresentativeResult max_rainbow_matching(const ColorPartition& inst,
                                                 std::size_t node_budget = kDefaultNodeBudget) {
  if (inst.mode != PartitionMode::Edge) throw InputError("max_rainbow_matching needs an edge partition");
  inst.validate();
  return detail::RepresentativeSearch(inst.classes, detail::conflict_sets(inst), node_budget).run();
}

/// Maximum partial ISR of a vertex partition.
inline RepresentativeResult max_partial_isr(const ColorPartition& inst, std::size_t node_budget = kDefaultNodeBudget) {
  if (inst.mode != PartitionMode::Vertex) throw InputError("max_partial_isr needs a vertex partition");
  inst.validate();
  require_simple(inst.host, "max_partial_isr");
  return detail::RepresentativeSearch(inst.classes, detail::conflict_sets(inst), node_budget).run();
}

/// Full ISR decision; the witness is the lexicographically least ISR.
inline std::pair<bool, std::optional<Witness>> isr_exists(const ColorPartition& inst,
                                                          std::size_t node_budget = kDefaultNodeBudget) {
  if (inst.mode != PartitionMode::Vertex) throw InputError("isr_exists needs a vertex partition");
  inst.validate();
  require_simple(inst.host, "isr_exists");
  auto res = detail::RepresentativeSearch(inst.classes, detail::conflict_sets(inst), node_budget).run(inst.class_count());
  if (res.size == inst.class_count()) return {true, res.witness};
  return {false, std::nullopt};
}

/// The same instance as a vertex partition of the line graph (vertex ids are
/// the host's edge ids).
inline ColorPartition to_line_graph_partition(const ColorPartition& inst) {
  if (inst.mode != PartitionMode::Edge) throw InputError("expected an edge partition");
  return {line_graph(inst.host), PartitionMode::Vertex, inst.classes};
}

/// Adds d dummy "slots": class i gains private vertices w(i, 0..d-1), and
/// w(i, k) ~ w(j, k) for i != j. A full ISR of the result exists iff the
/// original has a partial ISR of size at least m - d.
inline ColorPartition deficiency_augmented(const ColorPartition& inst, std::size_t d) {
  if (inst.mode != PartitionMode::Vertex) throw InputError("expected a vertex partition");
  const auto n = inst.host.vertex_count();
  const auto m = inst.class_count();
  Graph g(n + m * d);
  for (std::size_t v = 0; v < n; ++v)
    if (!inst.host.is_active(static_cast<Vertex>(v))) g.remove_vertex(static_cast<Vertex>(v));
  for (EdgeId id : inst.host.edge_ids()) g.add_edge(inst.host.edge(id).u, inst.host.edge(id).v);
  auto slot = [&](std::size_t i, std::size_t k) { return static_cast<Vertex>(n + i * d + k); };
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) g.add_edge(slot(i, k), slot(j, k));
  ColorPartition out{std::move(g), PartitionMode::Vertex, inst.classes};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) out.classes[i].push_back(slot(i, k));
  return out;
}

// ---------------------------------------------------------------------------
// Hall-type condition

enum class ConnectivityOracle { Eta, Psi };

struct HallReport {
  bool passed = true;
  std::size_t subsets_checked = 0;
  /// Failing subset with the largest deficit (first in enumeration order on
  /// ties); empty when every subset passes.
  std::vector<std::size_t> worst_subset;
  std::string worst_value;  // connectivity (or its lower bound) on the worst subset
  std::size_t worst_required = 0;
  /// Present when the condition passed: whether a partial ISR of size m - d
  /// was found on the deficiency-augmented instance.
  std::optional<bool> cross_validated;
  std::optional<Witness> witness;
};

/// For every nonempty I of the classes, checks connectivity of the
/// independence complex of G[V_I] against |I| - d. With the Eta oracle the
/// homology is computed only up to the threshold; with Psi the game value is
/// used as a lower bound. Edge partitions are checked on the line graph.
inline HallReport hall_condition_check(const ColorPartition& inst_in, std::size_t d, ConnectivityOracle oracle,
                                       std::size_t face_budget = kDefaultFaceBudget,
                                       std::size_t psi_cap = kPsiVertexCap) {
  inst_in.validate();
  const ColorPartition inst = inst_in.mode == PartitionMode::Edge ? to_line_graph_partition(inst_in) : inst_in;
  require_simple(inst.host, "hall_condition_check");
  const auto m = inst.class_count();
  if (m > 20) throw SizeError("hall_condition_check: more than 20 classes");
  HallReport rep;
  long long worst_deficit = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= d) continue;  // |I| - d <= 0 holds for every complex
    const std::size_t need = size - d;
    VertexSet part(inst.host.vertex_count());
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i))
        for (auto v : inst.classes[i]) part.set(v);
    const Graph sub = induced_subgraph(inst.host, part);
    ++rep.subsets_checked;
    bool ok;
    std::string shown;
    long long have;
    if (oracle == ConnectivityOracle::Eta) {
      const EtaValue e = eta_independence(sub, need, face_budget);
      ok = e.reaches(need);
      shown = e.to_string();
      have = static_cast<long long>(e.value());
    } else {
      const GameValue g = psi(sub, psi_cap);
      ok = g.is_infinite() || g.value() >= need;
      shown = g.to_string();
      have = g.is_infinite() ? static_cast<long long>(need) : static_cast<long long>(g.value());
    }
    if (!ok) {
      const long long deficit = static_cast<long long>(need) - have;
      if (rep.passed || deficit > worst_deficit) {
        worst_deficit = deficit;
        rep.worst_subset.clear();
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) rep.worst_subset.push_back(i + 1);
        rep.worst_value = shown;
        rep.worst_required = need;
      }
      rep.passed = false;
    }
  }
  if (rep.passed) {
    if (d >= m) {
      rep.cross_validated = true;
      rep.witness = Witness{};
    } else {
      auto [exists, witness] = isr_exists(deficiency_augmented(inst, d));
      rep.cross_validated = exists;
      if (witness) {
        Witness real;
        for (auto [cls, v] : *witness)
          if (v < inst.host.vertex_count()) real.emplace_back(cls, v);
        rep.witness = real;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bounds

inline BigInt ceil_rational(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt fl = num / den;
  if (num % den != 0 && num > 0) fl += 1;
  return fl;
}

/// 2n/3 - 1/2.
inline Rational bound_stein23(std::size_t n) {
  if (n == 0) throw InputError("order must be at least 1");
  return Rational(2 * static_cast<long long>(n), 3) - Rational(1, 2);
}

/// n (1 - D_n / n!).
inline Rational stein_average_bound(std::size_t n) {
  if (n == 0) throw InputError("order must be at least 1");
  return Rational(static_cast<long long>(n)) * (Rational(1) - Rational(derangements(n), factorial(n)));
}

struct BoundEntry {
  std::string name;
  std::string formula;
  std::optional<Rational> exact;  // when the bound is rational
  long double approx = 0;
  BigInt guaranteed;  // least integer at or above the bound, floored at 0
  std::string scope;
};

/// Partial transversal / rainbow matching size guarantees for order n.
inline std::vector<BoundEntry> bounds_table(std::size_t n) {
  if (n == 0) throw InputError("order must be at least 1");
  std::vector<BoundEntry> out;
  auto clamp = [](BigInt b) { return b < 0 ? BigInt(0) : b; };
  auto add_exact = [&](std::string name, std::string formula, Rational q, std::string scope) {
    out.push_back({std::move(name), std::move(formula), q, static_cast<long double>(q.convert_to<double>()),
                   clamp(ceil_rational(q)), std::move(scope)});
  };
  const auto nn = static_cast<long long>(n);
  add_exact("Koksma", "2n/3", Rational(2 * nn, 3), "Latin squares");
  {
    const auto r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
    long long root = r;
    while ((root + 1) * (root + 1) <= nn) ++root;
    while (root * root > nn) --root;
    // ceil(n - sqrt n) = n - floor(sqrt n)
    out.push_back({"Woolbright", "n - sqrt(n)", root * root == nn ? std::optional<Rational>(Rational(nn - root)) : std::nullopt,
                   static_cast<long double>(n) - std::sqrt(static_cast<long double>(n)), clamp(BigInt(nn - root)),
                   "Latin squares"});
  }
  {
    const long double l = std::log2(static_cast<long double>(n));
    const long double v = static_cast<long double>(n) - 11.0L * l * l;
    out.push_back({"Shor-Hatami", "n - 11 log2(n)^2", std::nullopt, v,
                   clamp(BigInt(static_cast<long long>(std::ceil(v - 1e-12L)))), "Latin squares"});
  }
  add_exact("Stein average", "n(1 - D_n/n!)", stein_average_bound(n), "equi-n arrays");
  add_exact("Topological Hall", "2n/3 - 1/2", bound_stein23(n), "equi-n arrays / Stein partitions of K_{n,n}");
  return out;
}

// ---------------------------------------------------------------------------
// Arrays

/// Mean over all n! permutation submatrices of the number of distinct
/// symbols they contain.
inline Rational average_distinct_symbols(const SymbolArray& arr) {
  const auto n = arr.order();
  if (n > 7) throw SizeError("average_distinct_symbols enumerates n! permutations; n must be at most 7");
  if (n == 0) return Rational(0);
  const auto alphabet = arr.alphabet();
  std::vector<std::size_t> code(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      code[i * n + j] = static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), arr(i, j)) -
                                                 alphabet.begin());
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::size_t> stamp(alphabet.size(), 0);
  std::size_t round = 0;
  long long total = 0, count = 0;
  do {
    ++round;
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = stamp[code[i * n + perm[i]]];
      if (s != round) {
        s = round;
        ++total;
      }
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(total, count);
}

struct EquirepResult {
  bool holds = false;
  /// Column matched to each row, when a qualifying perfect matching exists.
  std::optional<std::vector<std::size_t>> witness;
  std::vector<long long> required;  // floor(|E_i|/n) - 1 per class
  std::string report;
};

/// Searches the perfect matchings F of K_{n,n} (in lexicographic order of the
/// column permutation) for one with |F ∩ E_i| >= floor(|E_i|/n) - 1 for all
/// i, strictly for all but at most one i.
inline EquirepResult verify_equirep(const ColorPartition& inst) {
  inst.validate();
  const SymbolArray colors = colors_of(inst);
  const auto n = colors.order();
  const auto m = inst.class_count();
  if (m > n) throw InputError("verify_equirep: expects at most n classes");
  if (n > 8) throw SizeError("verify_equirep enumerates n! perfect matchings; n must be at most 8");
  EquirepResult res;
  for (const auto& cls : inst.classes) res.required.push_back(static_cast<long long>(cls.size() / n) - 1);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<long long> hits(m);
  do {
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++hits[static_cast<std::size_t>(colors(i, perm[i]))];
    bool ok = true;
    std::size_t tight = 0;
    for (std::size_t k = 0; k < m && ok; ++k) {
      if (hits[k] < res.required[k]) ok = false;
      else if (hits[k] == res.required[k]) ++tight;
    }
    if (ok && tight <= 1) {
      res.holds = true;
      res.witness = perm;
      res.report = "perfect matching found";
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  res.report = "no perfect matching satisfies the requirement";
  return res;
}

// ---------------------------------------------------------------------------
// Fixtures

/// Twelve vertices a(i, j), i <= 3, j <= 4 (vertex (i-1)*4 + (j-1)), classes
/// V_j = {a(1,j), a(2,j), a(3,j)}, and edges forming the three 4-cycles
/// a11 a12 a21 a22, a13 a14 a23 a24 and a31 a33 a32 a34. Δ = 2, |V_j| = 3,
/// and there is no ISR.
inline ColorPartition jin_yuster() {
  auto a = [](int i, int j) { return static_cast<Vertex>((i - 1) * 4 + (j - 1)); };
  Graph g(12);
  const std::array<std::array<Vertex, 4>, 3> cycles{{{a(1, 1), a(1, 2), a(2, 1), a(2, 2)},
                                                     {a(1, 3), a(1, 4), a(2, 3), a(2, 4)},
                                                     {a(3, 1), a(3, 3), a(3, 2), a(3, 4)}}};
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < 4; ++k) g.add_edge(c[k], c[(k + 1) % 4]);
  ColorPartition cp{std::move(g), PartitionMode::Vertex, {}};
  for (int j = 1; j <= 4; ++j) cp.classes.push_back({a(1, j), a(2, j), a(3, j)});
  return cp;
}

/// For i = 1..k, class V_i holds k parallel copies each of e_i = a_i b_i and
/// f_i = c_i d_i; class V_0 = {a_i d_i, b_i c_i : i <= k}. Every class has
/// 2k edges, Δ(H) = k+1, and no rainbow matching uses all k+1 classes.
/// V_0 is class id 1, V_i is class id i+1. Vertices a_i, b_i, c_i, d_i are
/// 4(i-1) + 0..3.
inline ColorPartition multigraph_example(std::size_t k) {
  if (k < 2) throw InputError("multigraph_example needs k >= 2");
  Graph h(4 * k);
  ColorPartition cp{Graph{}, PartitionMode::Edge, std::vector<std::vector<std::uint32_t>>(k + 1)};
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = static_cast<Vertex>(4 * i), b = a + 1, c = a + 2, d = a + 3;
    for (std::size_t copy = 0; copy < k; ++copy) {
      cp.classes[i + 1].push_back(h.add_edge(a, b));
      cp.classes[i + 1].push_back(h.add_edge(c, d));
    }
    cp.classes[0].push_back(h.add_edge(a, d));
    cp.classes[0].push_back(h.add_edge(b, c));
  }
  cp.host = std::move(h);
  return cp;
}

struct ConditionEntry {
  std::string name;
  bool conjecture = false;
  bool applicable = false;  // the statement's setting fits the instance
  bool hypothesis = false;  // its size condition holds
  std::string detail;
};

struct SufficiencyReport {
  std::size_t min_class_size = 0;
  std::size_t max_degree_graph = 0;  // Δ of the graph the ISR lives in
  std::optional<std::size_t> max_degree_host;  // Δ(H) for edge partitions
  std::vector<ConditionEntry> entries;

  /// Some proven theorem guarantees a full ISR / rainbow matching.
  bool guaranteed() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ConditionEntry& e) { return !e.conjecture && e.applicable && e.hypothesis; });
  }
};

/// Evaluates the classical sufficient conditions for a full ISR: Haxell's
/// |V_i| >= 2Δ(G); for line graphs |V_i| >= 2Δ(H) and |V_i| >= Δ(L(H)) + 2;
/// and the conjectured |V_i| > Δ(H) + 1 for simple bipartite H.
inline SufficiencyReport check_sufficient_conditions(const ColorPartition& inst) {
  inst.validate();
  SufficiencyReport rep;
  rep.min_class_size = inst.classes.empty() ? 0 : inst.classes[0].size();
  for (const auto& c : inst.classes) rep.min_class_size = std::min(rep.min_class_size, c.size());
  const std::size_t s = rep.min_class_size;
  auto show = [](std::size_t a, const char* op, std::size_t b) {
    return std::to_string(a) + " " + op + " " + std::to_string(b);
  };
  if (inst.mode == PartitionMode::Vertex) {
    rep.max_degree_graph = inst.host.max_degree();
    const auto dg = rep.max_degree_graph;
    rep.entries.push_back({"basic", false, true, s >= 2 * dg, "min|V_i| >= 2Δ(G): " + show(s, ">=", 2 * dg)});
    rep.entries.push_back({"deltah", false, false, false, "needs an edge partition of a line graph"});
    rep.entries.push_back({"aabtheorem", false, false, false, "needs an edge partition of a line graph"});
    rep.entries.push_back({"deltaplus1", true, false, false, "needs an edge partition of a bipartite graph"});
    return rep;
  }
  const Graph lg = line_graph(inst.host);
  rep.max_degree_graph = lg.max_degree();
  rep.max_degree_host = inst.host.max_degree();
  const auto dg = rep.max_degree_graph, dh = *rep.max_degree_host;
  const bool simple_bipartite = inst.host.is_simple() && two_coloring(inst.host).has_value();
  rep.entries.push_back({"basic", false, true, s >= 2 * dg, "min|V_i| >= 2Δ(L(H)): " + show(s, ">=", 2 * dg)});
  rep.entries.push_back({"deltah", false, true, s >= 2 * dh, "min|V_i| >= 2Δ(H): " + show(s, ">=", 2 * dh)});
  rep.entries.push_back({"aabtheorem", false, true, s >= dg + 2, "min|V_i| >= Δ(L(H))+2: " + show(s, ">=", dg + 2)});
  rep.entries.push_back({"deltaplus1", true, simple_bipartite, s > dh + 1,
                         std::string(simple_bipartite ? "" : "H is not simple bipartite; ") +
                             "min|V_i| > Δ(H)+1: " + show(s, ">", dh + 1)});
  return rep;
}

}  // namespace topmatch
