#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "topmatch/strategy.hpp"

namespace topmatch {

enum class CheckOutcome { Pass, Fail, Vacuous };

inline const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Vacuous: return "vacuous";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  std::optional<std::size_t> step;
  CheckOutcome outcome = CheckOutcome::Pass;
  std::string detail;
};

// Names of the audited inequalities.
namespace checks {
inline constexpr const char* kBalanced = "balanced";              // 0 <= |X_i| - |Y_i| <= 1
inline constexpr const char* kRemovalCount = "removal-count";     // 2 or 3 vertices per sequence
inline constexpr const char* kRemovalSides = "removal-sides";     // 3 removed: two from X; 2 removed: one each
inline constexpr const char* kHowManyRemoved = "howmanyremoved";  // e_i - e_{i+1} bound
inline constexpr const char* kThird = "third";                    // t >= (n_0 - n_t)/3
inline constexpr const char* kTerminalIndependent = "terminal-independent";  // V_t independent in G_i
inline constexpr const char* kSmallWorld = "smallworld";          // max(|X_i\V_t|,|Y_i\V_t|) = ceil((n_i-n_t)/2)
inline constexpr const char* kDeltaSmall = "deltasmall";          // delta_i <= ceil((n_i-n_t)/2)
inline constexpr const char* kEdgeDrop = "ejejplus1";             // e_j - e_{j+1} <= n_j - n_t/2 - 1/2
inline constexpr const char* kHeadline = "headline";              // t >= n_0/3 - k_0 - 1/2

/// Everything except smallworld, which is a derived equality that the
/// strategy does not maintain (side differences can swing from -1 to +1).
inline bool is_core(const std::string& name) { return name != kSmallWorld; }
}  // namespace checks

struct AuditReport {
  std::vector<CheckResult> results;

  bool passed() const {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.outcome == CheckOutcome::Fail; });
  }
  bool core_passed() const {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
      return r.outcome == CheckOutcome::Fail && checks::is_core(r.name);
    });
  }
  bool passed(const std::string& name) const {
    return std::none_of(results.begin(), results.end(), [&](const CheckResult& r) {
      return r.name == name && r.outcome == CheckOutcome::Fail;
    });
  }
  std::size_t count(const std::string& name, CheckOutcome o) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const CheckResult& r) {
      return r.name == name && r.outcome == o;
    }));
  }
  std::vector<CheckResult> failures() const {
    std::vector<CheckResult> out;
    for (const auto& r : results)
      if (r.outcome == CheckOutcome::Fail) out.push_back(r);
    return out;
  }
};

namespace detail {
inline std::size_t ceil_half(std::size_t a) { return (a + 1) / 2; }
}  // namespace detail

/// Replays the transcript against root and evaluates every inequality of
/// the strategy's accounting. Throws CorruptionError when the recorded
/// states do not match the replay.
inline AuditReport audit_transcript(const GameTranscript& tr, const Graph& root_in) {
  AuditReport rep;
  auto add = [&](const char* name, std::optional<std::size_t> step, bool ok, std::string detail) {
    rep.results.push_back({name, step, ok ? CheckOutcome::Pass : CheckOutcome::Fail, std::move(detail)});
  };
  auto vacuous = [&](const char* name, std::string detail) {
    rep.results.push_back({name, std::nullopt, CheckOutcome::Vacuous, std::move(detail)});
  };

  const Graph root = prepare_strategy_root(root_in);
  const VertexSet& first = root.bipartition()->first;
  Graph cur = root;

  struct StepState {
    std::size_t n, edges, x_size, y_size, delta, removed, next_edges;
    VertexSet xs, ys;
  };
  std::vector<StepState> steps;

  for (std::size_t i = 0; i < tr.sequences.size(); ++i) {
    const auto& s = tr.sequences[i];
    const VertexSet ps = first & cur.active();
    const VertexSet qs = cur.active() - ps;
    if (s.index != i || s.n != cur.order() || s.edges != cur.size() || s.p != ps.count() || s.q != qs.count())
      throw CorruptionError("transcript sequence " + std::to_string(i) + " does not match the replayed graph");
    const bool x_first = names_first_side_x(i, s.p, s.q);
    if (s.x_is_first != x_first)
      throw CorruptionError("transcript sequence " + std::to_string(i) + " names the sides inconsistently");
    const VertexSet& xs = x_first ? ps : qs;
    const VertexSet& ys = x_first ? qs : ps;
    if (!cur.is_active(s.v) || cur.degree(s.v) != s.delta)
      throw CorruptionError("transcript sequence " + std::to_string(i) + " records a wrong chosen vertex degree");
    for (const auto& o : s.offers)
      if (!cur.has_edge(o.e) || !cur.has_edge(o.f))
        throw CorruptionError("transcript sequence " + std::to_string(i) + " offers an absent edge");

    const long long diff = static_cast<long long>(xs.count()) - static_cast<long long>(ys.count());
    add(checks::kBalanced, i, diff >= 0 && diff <= 1,
        "|X|=" + std::to_string(xs.count()) + " |Y|=" + std::to_string(ys.count()));

    if (s.removed.empty()) {
      if (i + 1 != tr.sequences.size() || !tr.infinite)
        throw CorruptionError("transcript sequence " + std::to_string(i) + " removes nothing but the game continues");
      break;
    }
    VertexSet gone(root.vertex_count());
    for (Vertex w : s.removed) {
      if (!cur.is_active(w) || gone.test(w))
        throw CorruptionError("transcript sequence " + std::to_string(i) + " removes an absent vertex");
      gone.set(w);
    }
    const std::size_t from_x = (gone & xs).count();
    const std::size_t from_y = (gone & ys).count();
    const std::size_t k = s.removed.size();
    add(checks::kRemovalCount, i, k == 2 || k == 3, std::to_string(k) + " removed");
    add(checks::kRemovalSides, i, (k == 3 && from_x == 2 && from_y == 1) || (k == 2 && from_x == 1 && from_y == 1),
        std::to_string(from_x) + " from X, " + std::to_string(from_y) + " from Y");

    StepState st{cur.order(), cur.size(), xs.count(), ys.count(), s.delta, k, 0, xs, ys};
    cur.remove_vertices(gone);
    st.next_edges = cur.size();
    const std::size_t drop = st.edges - st.next_edges;
    const std::size_t bound = k == 3 ? st.n + st.delta - 2 : st.x_size + st.delta - 1;
    add(checks::kHowManyRemoved, i, k > 3 || drop <= bound,
        "e_i-e_{i+1}=" + std::to_string(drop) + " bound " + std::to_string(bound));
    steps.push_back(std::move(st));
  }

  if (tr.infinite) {
    vacuous(checks::kHeadline, "game ended at infinity");
    for (const char* name : {checks::kThird, checks::kTerminalIndependent, checks::kSmallWorld, checks::kDeltaSmall,
                             checks::kEdgeDrop})
      vacuous(name, "no terminal graph");
    return rep;
  }
  if (cur.size() != 0) throw CorruptionError("finite transcript ends on a graph that still has edges");
  if (tr.terminal.size() == cur.vertex_count() && tr.terminal != cur.active())
    throw CorruptionError("recorded terminal vertex set does not match the replay");

  const std::size_t t = steps.size();
  const std::size_t n0 = root.order();
  const VertexSet vt = cur.active();
  const std::size_t nt = vt.count();
  {
    const std::size_t tidx = tr.sequences.size();
    const VertexSet ps = first & vt;
    const VertexSet qs = vt - ps;
    const bool x_first = names_first_side_x(tidx, ps.count(), qs.count());
    const long long diff = static_cast<long long>((x_first ? ps : qs).count()) -
                           static_cast<long long>((x_first ? qs : ps).count());
    add(checks::kBalanced, tidx, diff >= 0 && diff <= 1, "terminal graph");
  }
  add(checks::kThird, std::nullopt, 3 * t >= n0 - nt,
      "t=" + std::to_string(t) + " n_0=" + std::to_string(n0) + " n_t=" + std::to_string(nt));
  add(checks::kTerminalIndependent, std::nullopt, root.is_independent(vt), "V_t against the root");

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    const std::size_t half = detail::ceil_half(st.n - nt);
    const std::size_t far = std::max((st.xs - vt).count(), (st.ys - vt).count());
    add(checks::kSmallWorld, i, far == half,
        "max=" + std::to_string(far) + " ceil((n_i-n_t)/2)=" + std::to_string(half));
    add(checks::kDeltaSmall, i, st.delta <= half,
        "delta=" + std::to_string(st.delta) + " ceil((n_i-n_t)/2)=" + std::to_string(half));
    if (st.removed == 2) {
      // 2(e_j - e_{j+1}) <= 2 n_j - n_t - 1
      const long long lhs = 2 * static_cast<long long>(st.edges - st.next_edges);
      const long long rhs = 2 * static_cast<long long>(st.n) - static_cast<long long>(nt) - 1;
      add(checks::kEdgeDrop, i, lhs <= rhs,
          "e_j-e_{j+1}=" + std::to_string(st.edges - st.next_edges) + " n_j=" + std::to_string(st.n) +
              " n_t=" + std::to_string(nt));
    }
  }

  const Rational bound = Rational(static_cast<long long>(n0), 3) - density_defect(root) - Rational(1, 2);
  std::ostringstream detail;
  detail << "t=" << t << " bound=" << bound;
  add(checks::kHeadline, std::nullopt, Rational(static_cast<long long>(t)) >= bound, detail.str());
  return rep;
}

/// n_0/3 - k(G) - 1/2 for the root graph.
inline Rational strategy_bound(const Graph& g) {
  return Rational(static_cast<long long>(g.order()), 3) - density_defect(g) - Rational(1, 2);
}

}  // namespace topmatch
