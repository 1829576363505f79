#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "topmatch/errors.hpp"

namespace topmatch {

using Vertex = std::uint32_t;
/// Index into a graph's edge list. Ids are never reused, so they survive
/// vertex and edge removal.
using EdgeId = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v
};

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

inline std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

/// Undirected graph over the label space [0, vertex_count). Only the
/// vertices in active() belong to the graph; removed vertices keep their
/// labels so that side membership and edge ids stay stable across the game.
class Graph {
 public:
  Graph() = default;

  /// All n vertices active, no edges.
  explicit Graph(std::size_t n) : n_(n), active_(n), incident_(n) {
    active_.set();
  }

  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Adds an edge (a parallel copy if u, v are already adjacent).
  EdgeId add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loops are not allowed");
    if (!active_.test(u) || !active_.test(v))
      throw InputError("edge endpoint is not an active vertex");
    if (u > v) std::swap(u, v);
    if (sides_ && sides_->first.test(u) == sides_->first.test(v))
      throw InputError("edge does not cross the bipartition");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    present_.push_back(true);
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    ++edge_count_;
    return id;
  }

  void set_bipartition(VertexSet first, VertexSet second) {
    if (first.size() != n_ || second.size() != n_)
      throw InputError("bipartition sides must be sized to the vertex count");
    if (first.intersects(second)) throw InputError("bipartition sides overlap");
    if ((first | second) != active_)
      throw InputError("bipartition must cover exactly the active vertices");
    for (EdgeId id : edge_ids()) {
      const auto& e = edges_[id];
      if (first.test(e.u) == first.test(e.v))
        throw InputError("edge does not cross the bipartition");
    }
    sides_ = Bipartition{std::move(first), std::move(second)};
  }

  std::size_t vertex_count() const { return n_; }
  const VertexSet& active() const { return active_; }
  std::size_t order() const { return active_.count(); }
  bool is_active(Vertex v) const { return v < n_ && active_.test(v); }

  std::size_t edge_slots() const { return edges_.size(); }
  std::size_t size() const { return edge_count_; }
  bool has_edge(EdgeId id) const { return id < edges_.size() && present_[id]; }
  const Edge& edge(EdgeId id) const {
    if (!has_edge(id)) throw InputError("edge id " + std::to_string(id) + " is not present");
    return edges_[id];
  }
  Vertex other_end(EdgeId id, Vertex v) const {
    const auto& e = edge(id);
    return e.u == v ? e.v : e.u;
  }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edge_count_);
    for (EdgeId id = 0; id < edges_.size(); ++id)
      if (present_[id]) out.push_back(id);
    return out;
  }

  /// Present edges at v, ascending by id.
  std::vector<EdgeId> incident(Vertex v) const {
    std::vector<EdgeId> out;
    if (!is_active(v)) return out;
    for (EdgeId id : incident_[v])
      if (present_[id]) out.push_back(id);
    return out;
  }

  /// Degree counting parallel edges.
  std::size_t degree(Vertex v) const {
    if (!is_active(v)) return 0;
    std::size_t d = 0;
    for (EdgeId id : incident_[v]) d += present_[id] ? 1 : 0;
    return d;
  }

  VertexSet neighbors(Vertex v) const {
    VertexSet out(n_);
    if (!is_active(v)) return out;
    for (EdgeId id : incident_[v])
      if (present_[id]) out.set(edges_[id].u == v ? edges_[id].v : edges_[id].u);
    return out;
  }

  std::size_t multiplicity(Vertex u, Vertex v) const {
    if (!is_active(u) || !is_active(v)) return 0;
    std::size_t m = 0;
    for (EdgeId id : incident_[u])
      if (present_[id] && (edges_[id].u == v || edges_[id].v == v)) ++m;
    return m;
  }
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
    if (!is_active(u) || !is_active(v)) return std::nullopt;
    for (EdgeId id : incident_[u])
      if (present_[id] && (edges_[id].u == v || edges_[id].v == v)) return id;
    return std::nullopt;
  }

  bool is_simple() const {
    for (Vertex v = 0; v < n_; ++v) {
      VertexSet seen(n_);
      for (EdgeId id : incident_[v]) {
        if (!present_[id]) continue;
        const Vertex w = edges_[id].u == v ? edges_[id].v : edges_[id].u;
        if (seen.test(w)) return false;
        seen.set(w);
      }
    }
    return true;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (auto v : members(active_)) d = std::max(d, degree(v));
    return d;
  }

  bool is_independent(const VertexSet& s) const {
    for (EdgeId id : edge_ids())
      if (s.test(edges_[id].u) && s.test(edges_[id].v)) return false;
    return true;
  }

  const std::optional<Bipartition>& bipartition() const { return sides_; }

  void remove_edge(EdgeId id) {
    if (!has_edge(id)) throw InputError("edge id " + std::to_string(id) + " is not present");
    present_[id] = false;
    --edge_count_;
  }

  /// Deactivates v and drops its incident edges.
  void remove_vertex(Vertex v) {
    if (!is_active(v)) throw InputError("vertex " + std::to_string(v) + " is not active");
    for (EdgeId id : incident_[v])
      if (present_[id]) {
        present_[id] = false;
        --edge_count_;
      }
    active_.reset(v);
    if (sides_) {
      sides_->first.reset(v);
      sides_->second.reset(v);
    }
  }

  void remove_vertices(const VertexSet& s) {
    for (auto v : members(s & active_)) remove_vertex(v);
  }

 private:
  std::size_t n_ = 0;
  VertexSet active_;
  std::vector<Edge> edges_;
  std::vector<bool> present_;
  std::vector<std::vector<EdgeId>> incident_;
  std::size_t edge_count_ = 0;
  std::optional<Bipartition> sides_;
};

// ---------------------------------------------------------------------------
// Constructions

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// K_{a,b}: side one is 0..a-1, side two is a..a+b-1. Edge (i, j) has id
/// i*b + j, so the cell (row i, column j) of an a-by-b array maps to it.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  VertexSet first(a + b), second(a + b);
  for (std::size_t i = 0; i < a; ++i) first.set(i);
  for (std::size_t j = 0; j < b; ++j) second.set(a + j);
  g.set_bipartition(first, second);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, static_cast<Vertex>(a + j));
  return g;
}

/// Vertex-disjoint copies of k K_2's.
inline Graph matching_graph(std::size_t k) {
  Graph g(2 * k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

/// Proper 2-colouring of the active vertices, if one exists. Colour classes
/// are chosen by BFS from the lowest-labelled vertex of each component.
inline std::optional<Bipartition> two_coloring(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (auto s : members(g.active())) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (EdgeId id : g.incident(u)) {
        const Vertex w = g.other_end(id, u);
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b{VertexSet(n), VertexSet(n)};
  for (auto v : members(g.active())) (color[v] == 0 ? b.first : b.second).set(v);
  return b;
}

/// One vertex per present edge id of g (line-graph vertex i is edge id i);
/// two are adjacent iff the edges share an endpoint. Parallel edges of g
/// give a single line-graph edge.
inline Graph line_graph(const Graph& g) {
  const auto slots = g.edge_slots();
  Graph lg(slots);
  for (EdgeId id = 0; id < slots; ++id)
    if (!g.has_edge(id)) lg.remove_vertex(id);
  const auto ids = g.edge_ids();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    const auto& ea = g.edge(ids[a]);
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const auto& eb = g.edge(ids[b]);
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
        lg.add_edge(ids[a], ids[b]);
    }
  }
  return lg;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.size() != g.vertex_count()) throw InputError("vertex subset has the wrong size");
  if (!s.is_subset_of(g.active())) throw InputError("vertex subset is not contained in the graph");
  Graph out = g;
  out.remove_vertices(g.active() - s);
  return out;
}

inline Graph delete_edge(const Graph& g, EdgeId e) {
  Graph out = g;
  out.remove_edge(e);
  return out;
}

/// G*e: removes both endpoints of e, all their neighbours, and every edge
/// touching a removed vertex.
inline Graph explode_edge(const Graph& g, EdgeId e) {
  const auto& ed = g.edge(e);
  VertexSet gone = g.neighbors(ed.u) | g.neighbors(ed.v);
  gone.set(ed.u);
  gone.set(ed.v);
  Graph out = g;
  out.remove_vertices(gone);
  return out;
}

/// Disjoint union; vertices of b are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (std::size_t v = 0; v < na; ++v)
    if (!a.active().test(v)) g.remove_vertex(static_cast<Vertex>(v));
  for (std::size_t v = 0; v < b.vertex_count(); ++v)
    if (!b.active().test(v)) g.remove_vertex(static_cast<Vertex>(na + v));
  for (EdgeId id : a.edge_ids()) g.add_edge(a.edge(id).u, a.edge(id).v);
  for (EdgeId id : b.edge_ids())
    g.add_edge(static_cast<Vertex>(na + b.edge(id).u), static_cast<Vertex>(na + b.edge(id).v));
  return g;
}

inline void require_simple(const Graph& g, const char* what) {
  if (!g.is_simple()) throw InputError(std::string(what) + " requires a simple graph");
}

// ---------------------------------------------------------------------------
// Keys

namespace detail {
inline void put_u32(std::string& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xFF));
}
}  // namespace detail

enum class KeyMode { Labeled, Canonical };

/// Byte key of the (vertex set, edge multiset) state. Labeled keys identify
/// states of one root graph; Canonical keys are isomorphism invariant and
/// are computed by exhaustive search over degree-respecting relabelings
/// (throws SizeError when that search exceeds permutation_budget).
inline std::string canonical_key(const Graph& g, KeyMode mode = KeyMode::Labeled,
                                 std::size_t permutation_budget = 5'000'000) {
  std::string key;
  if (mode == KeyMode::Labeled) {
    key.push_back('L');
    detail::put_u32(key, static_cast<std::uint32_t>(g.vertex_count()));
    for (auto v : members(g.active())) detail::put_u32(key, v);
    key.push_back('|');
    std::vector<std::array<Vertex, 2>> es;
    for (EdgeId id : g.edge_ids()) es.push_back({g.edge(id).u, g.edge(id).v});
    std::sort(es.begin(), es.end());
    for (const auto& e : es) {
      detail::put_u32(key, e[0]);
      detail::put_u32(key, e[1]);
    }
    return key;
  }

  const auto verts = members(g.active());
  const std::size_t k = verts.size();
  std::vector<std::vector<std::uint32_t>> mult(k, std::vector<std::uint32_t>(k, 0));
  std::vector<std::size_t> index(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) index[verts[i]] = i;
  for (EdgeId id : g.edge_ids()) {
    const auto a = index[g.edge(id).u], b = index[g.edge(id).v];
    ++mult[a][b];
    ++mult[b][a];
  }
  // Invariant signature: (degree, sorted neighbour degrees).
  std::vector<std::vector<std::size_t>> sig(k);
  std::vector<std::size_t> deg(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) deg[i] += mult[i][j];
  for (std::size_t i = 0; i < k; ++i) {
    sig[i].push_back(deg[i]);
    std::vector<std::size_t> nd;
    for (std::size_t j = 0; j < k; ++j)
      for (std::uint32_t c = 0; c < mult[i][j]; ++c) nd.push_back(deg[j]);
    std::sort(nd.begin(), nd.end());
    sig[i].insert(sig[i].end(), nd.begin(), nd.end());
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
  // Cells of equal signature may be permuted freely.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j < k && sig[order[j]] == sig[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  double perms = 1;
  for (auto [a, b] : cells)
    for (std::size_t f = 2; f <= b - a; ++f) perms *= static_cast<double>(f);
  if (perms > static_cast<double>(permutation_budget))
    throw SizeError("canonical labeling search exceeds the permutation budget");

  std::vector<std::uint32_t> best;
  bool have_best = false;
  std::vector<std::size_t> cur = order;
  std::vector<std::uint32_t> word;
  word.reserve(k * (k - 1) / 2);
  // Odometer over per-cell permutations.
  for (auto [a, b] : cells) std::sort(cur.begin() + a, cur.begin() + b);
  while (true) {
    word.clear();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) word.push_back(mult[cur[i]][cur[j]]);
    if (!have_best || word < best) {
      best = word;
      have_best = true;
    }
    std::size_t c = cells.size();
    bool advanced = false;
    while (c > 0) {
      --c;
      auto [a, b] = cells[c];
      if (std::next_permutation(cur.begin() + a, cur.begin() + b)) {
        advanced = true;
        break;
      }
      // next_permutation wrapped the cell back to sorted order
    }
    if (!advanced) break;
  }
  key.push_back('C');
  detail::put_u32(key, static_cast<std::uint32_t>(k));
  for (std::size_t i = 0; i < k; ++i) detail::put_u32(key, static_cast<std::uint32_t>(sig[order[i]][0]));
  key.push_back('|');
  for (auto w : best) detail::put_u32(key, w);
  return key;
}

// ---------------------------------------------------------------------------
// Parameters

/// Maximum matching size (Edmonds' blossom algorithm).
inline std::size_t max_matching(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.vertex_count());
  for (EdgeId id : g.edge_ids()) boost::add_edge(g.edge(id).u, g.edge(id).v, bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(g.vertex_count());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

inline constexpr std::size_t kIgammaVertexCap = 14;

/// Independence domination number: the maximum over independent sets I of
/// the least |D| with I contained in the open neighbourhood N(D).
/// Exhaustive; throws UndominatableError when G has an isolated vertex.
inline std::size_t igamma(const Graph& g, std::size_t cap = kIgammaVertexCap) {
  const auto verts = members(g.active());
  const std::size_t k = verts.size();
  if (k > cap) throw SizeError("igamma: " + std::to_string(k) + " vertices exceeds cap " + std::to_string(cap));
  if (k == 0) return 0;
  std::vector<std::size_t> index(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) index[verts[i]] = i;
  std::vector<std::uint32_t> nbr(k, 0);
  for (EdgeId id : g.edge_ids()) {
    const auto a = index[g.edge(id).u], b = index[g.edge(id).v];
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (nbr[i] == 0)
      throw UndominatableError("vertex " + std::to_string(verts[i]) + " is isolated; it cannot be dominated");

  const std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint32_t> cover(std::size_t{1} << k, 0);
  std::vector<std::uint8_t> least(std::size_t{1} << k, kInf);
  for (std::uint32_t d = 1; d <= full; ++d) {
    const int low = std::countr_zero(d);
    cover[d] = cover[d & (d - 1)] | nbr[low];
  }
  for (std::uint32_t d = 0; d <= full; ++d)
    least[cover[d]] = std::min<std::uint8_t>(least[cover[d]], static_cast<std::uint8_t>(std::popcount(d)));
  // least[S] := min over supersets T of S.
  for (std::size_t b = 0; b < k; ++b)
    for (std::uint32_t s = 0; s <= full; ++s)
      if (!(s & (1u << b))) least[s] = std::min(least[s], least[s | (1u << b)]);

  std::size_t best = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool independent = true;
    for (std::uint32_t r = s; r && independent; r &= r - 1)
      independent = (nbr[std::countr_zero(r)] & s) == 0;
    if (independent) best = std::max<std::size_t>(best, least[s]);
  }
  return best;
}

/// Number of derangements of an n-set.
inline BigInt derangements(std::size_t n) {
  BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
  if (n == 0) return prev2;
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt next = BigInt(m - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t m = 2; m <= n; ++m) f *= m;
  return f;
}

/// k(G) = |V|/2 - 2|E|/|V|, and 0 on the empty vertex set.
inline Rational density_defect(const Graph& g) {
  const auto v = g.order();
  if (v == 0) return Rational(0);
  return Rational(static_cast<long long>(v), 2) - Rational(2 * static_cast<long long>(g.size()), static_cast<long long>(v));
}

}  // namespace topmatch
