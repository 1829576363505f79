#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "topmatch/graph.hpp"

namespace topmatch {

/// Value of the Meshulam game: a natural number or infinity.
class GameValue {
 public:
  constexpr GameValue() = default;
  static constexpr GameValue finite(std::uint32_t v) { return GameValue(v); }
  static constexpr GameValue infinite() { return GameValue(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint32_t value() const { return v_; }
  constexpr GameValue plus_one() const { return is_infinite() ? *this : GameValue(v_ + 1); }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

  friend constexpr auto operator<=>(const GameValue&, const GameValue&) = default;

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit GameValue(std::uint32_t v) : v_(v) {}
  std::uint32_t v_ = 0;
};

enum class Response { Delete, Explode };

inline const char* to_string(Response r) { return r == Response::Delete ? "delete" : "explode"; }

inline constexpr std::size_t kPsiVertexCap = 12;

/// Exact game value by memoized recursion
///   Ψ(G) = max_e min(Ψ(G - e), Ψ(G * e) + 1),
/// with Ψ = 0 on the empty vertex set and Ψ = ∞ once a vertex is isolated.
/// Positions are keyed by their (vertex set, edge set) within the root
/// graph, which is the labeled canonical key restricted to this root. An
/// edge whose explosion branch cannot beat the running maximum is skipped
/// without evaluating its deletion branch; this never changes the value.
class PsiSolver {
 public:
  explicit PsiSolver(const Graph& g, std::size_t cap = kPsiVertexCap) {
    require_simple(g, "psi");
    const auto verts = members(g.active());
    if (verts.size() > cap)
      throw SizeError("psi: " + std::to_string(verts.size()) + " vertices exceeds cap " + std::to_string(cap));
    if (verts.size() > 16) throw SizeError("psi: at most 16 vertices are supported");
    std::vector<std::size_t> index(g.vertex_count(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    incident_.assign(verts.size(), 0);
    for (EdgeId id : g.edge_ids()) {
      const auto a = static_cast<std::uint32_t>(index[g.edge(id).u]);
      const auto b = static_cast<std::uint32_t>(index[g.edge(id).v]);
      const std::size_t bit = ends_.size();
      ends_.push_back({a, b});
      local_.emplace(id, bit);
      incident_[a] |= Mask(1) << bit;
      incident_[b] |= Mask(1) << bit;
    }
    root_vertices_ = verts.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << verts.size()) - 1);
    root_edges_ = ends_.empty() ? Mask(0) : ((ends_.size() == 128 ? ~Mask(0) : (Mask(1) << ends_.size()) - 1));
  }

  GameValue value() { return wrap(solve(root_vertices_, root_edges_)); }

  /// Ψ(G - e).
  GameValue after_delete(EdgeId e) {
    const auto bit = local(e);
    return wrap(solve(root_vertices_, root_edges_ & ~(Mask(1) << bit)));
  }

  /// Ψ(G * e).
  GameValue after_explode(EdgeId e) {
    std::uint32_t vm = root_vertices_;
    Mask em = root_edges_;
    explode(vm, em, local(e));
    return wrap(solve(vm, em));
  }

  std::size_t positions_stored() const { return memo_.size(); }

 private:
  using Mask = unsigned __int128;
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  struct Key {
    std::uint32_t vertices;
    Mask edges;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      const auto lo = static_cast<std::uint64_t>(k.edges);
      const auto hi = static_cast<std::uint64_t>(k.edges >> 64);
      std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
      h ^= hi + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
      h ^= k.vertices * 0xC2B2AE3D27D4EB4FULL;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  static GameValue wrap(std::uint32_t v) { return v == kInf ? GameValue::infinite() : GameValue::finite(v); }

  std::size_t local(EdgeId e) const {
    auto it = local_.find(e);
    if (it == local_.end()) throw InputError("psi: edge id " + std::to_string(e) + " is not present");
    return it->second;
  }

  static int lowest(Mask m) {
    const auto lo = static_cast<std::uint64_t>(m);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
  }

  void explode(std::uint32_t& vm, Mask& em, std::size_t bit) const {
    std::uint32_t gone = (1u << ends_[bit][0]) | (1u << ends_[bit][1]);
    for (std::uint32_t end : ends_[bit])
      for (Mask m = incident_[end] & em; m; m &= m - 1) {
        const auto& ee = ends_[static_cast<std::size_t>(lowest(m))];
        gone |= (1u << ee[0]) | (1u << ee[1]);
      }
    vm &= ~gone;
    for (std::uint32_t r = gone; r; r &= r - 1) em &= ~incident_[static_cast<std::size_t>(std::countr_zero(r))];
  }

  std::uint32_t solve(std::uint32_t vm, Mask em) {
    if (vm == 0) return 0;
    for (std::uint32_t r = vm; r; r &= r - 1)
      if ((incident_[static_cast<std::size_t>(std::countr_zero(r))] & em) == 0) return kInf;
    const Key key{vm, em};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint32_t best = 0;
    for (Mask m = em; m; m &= m - 1) {
      const auto bit = static_cast<std::size_t>(lowest(m));
      std::uint32_t xv = vm;
      Mask xe = em;
      explode(xv, xe, bit);
      std::uint32_t blown = solve(xv, xe);
      if (blown != kInf) ++blown;
      if (blown <= best) continue;
      const std::uint32_t kept = solve(vm, em & ~(Mask(1) << bit));
      best = std::max(best, std::min(blown, kept));
      if (best == kInf) break;
    }
    memo_.emplace(key, best);
    return best;
  }

  std::vector<std::array<std::uint32_t, 2>> ends_;
  std::unordered_map<EdgeId, std::size_t> local_;
  std::vector<Mask> incident_;
  std::uint32_t root_vertices_ = 0;
  Mask root_edges_ = 0;
  std::unordered_map<Key, std::uint32_t, KeyHash> memo_;
};

inline GameValue psi(const Graph& g, std::size_t cap = kPsiVertexCap) { return PsiSolver(g, cap).value(); }

struct EdgeOutcome {
  EdgeId edge;
  GameValue after_delete;   // Ψ(G - e)
  GameValue after_explode;  // Ψ(G * e) + 1
  GameValue worst() const { return std::min(after_delete, after_explode); }
};

/// Both branch values for every edge, ascending by edge id.
inline std::vector<EdgeOutcome> edge_outcomes(const Graph& g, std::size_t cap = kPsiVertexCap) {
  PsiSolver solver(g, cap);
  std::vector<EdgeOutcome> out;
  for (EdgeId id : g.edge_ids())
    out.push_back({id, solver.after_delete(id), solver.after_explode(id).plus_one()});
  return out;
}

/// NON's optimal answer to the offer of e; Delete on ties.
inline Response non_best_response(const Graph& g, EdgeId e, std::size_t cap = kPsiVertexCap) {
  if (!g.has_edge(e)) throw InputError("non_best_response: edge id " + std::to_string(e) + " is not present");
  PsiSolver solver(g, cap);
  const GameValue deleted = solver.after_delete(e);
  const GameValue exploded = solver.after_explode(e).plus_one();
  return std::min(deleted, exploded) == deleted ? Response::Delete : Response::Explode;
}

/// CON's optimal offer: an edge attaining Ψ(G), lowest id first.
inline std::optional<EdgeId> con_best_offer(const Graph& g, std::size_t cap = kPsiVertexCap) {
  std::optional<EdgeId> best;
  GameValue best_value;
  for (const auto& o : edge_outcomes(g, cap))
    if (!best || o.worst() > best_value) {
      best = o.edge;
      best_value = o.worst();
    }
  return best;
}

}  // namespace topmatch
