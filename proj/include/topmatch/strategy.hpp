#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "topmatch/game.hpp"
#include "topmatch/graph.hpp"

namespace topmatch {

// CON's strategy for the game on L(G), G bipartite with balanced sides.
//
// Play is split into sequences. Sequence i starts from an induced subgraph
// G_i of the root and fixes a vertex v, an edge e = xy at v (x in the side
// currently named X, y in Y), and offers NON the pairs (e, f) of adjacent
// edges. The sequence ends with an explosion, which removes two or three
// vertices of G_i, or with an isolated vertex of L(G), which ends the game
// at value infinity. Separations (deleted L(G) edges) all involve e, so they
// disappear with e and never outlive their sequence.

enum class Position { Pos1, Pos2 };
enum class SequenceCase { CaseI, CaseILagging, CaseII };

inline const char* to_string(Position p) { return p == Position::Pos1 ? "POS1" : "POS2"; }
inline const char* to_string(SequenceCase c) {
  switch (c) {
    case SequenceCase::CaseI: return "I";
    case SequenceCase::CaseILagging: return "I-lagging";
    case SequenceCase::CaseII: return "II";
  }
  return "?";
}

struct OfferRecord {
  EdgeId e = 0;
  EdgeId f = 0;
  Response response = Response::Delete;
};

struct SequenceRecord {
  std::size_t index = 0;
  // G_i at the start of the sequence.
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t edges = 0;
  bool x_is_first = true;  // X_i is the first bipartition side (P) or the second (Q)
  Vertex v = 0;
  std::size_t delta = 0;
  Position position = Position::Pos2;
  SequenceCase kase = SequenceCase::CaseI;
  Vertex x = 0;
  Vertex y = 0;
  EdgeId e = 0;
  std::vector<OfferRecord> offers;
  std::vector<Vertex> removed;  // empty when the sequence ended the game at infinity
  std::optional<Vertex> returned;
};

struct GameTranscript {
  Graph root;
  std::vector<SequenceRecord> sequences;
  bool infinite = false;
  /// Edge of G that became an isolated vertex of L(G), for infinite games.
  std::optional<EdgeId> isolated_edge;
  /// V_t, the vertex set of the final (edgeless) graph of a finite game.
  VertexSet terminal;

  std::size_t explosions() const {
    std::size_t t = 0;
    for (const auto& s : sequences) t += s.removed.empty() ? 0 : 1;
    return t;
  }
  GameValue value() const {
    return infinite ? GameValue::infinite() : GameValue::finite(static_cast<std::uint32_t>(explosions()));
  }
};

/// What NON sees when asked about the pair (e, f).
struct OfferContext {
  const Graph& current;  // G_i
  std::size_t sequence;
  EdgeId e;
  EdgeId f;
  const std::vector<EdgeId>& separated;  // edges already separated from e in this sequence
  bool deletion_isolates;                // separating (e, f) would leave an isolated L(G) vertex
};

using Adversary = std::function<Response(const OfferContext&)>;

namespace detail {

/// Degree of edge h as a vertex of L(G_i) after the given separations.
inline std::size_t line_degree(const Graph& g, EdgeId h, std::size_t separations) {
  const auto& ed = g.edge(h);
  return g.degree(ed.u) - 1 + g.degree(ed.v) - 1 - separations;
}

inline std::optional<EdgeId> isolated_edge(const Graph& g) {
  for (EdgeId id : g.edge_ids())
    if (line_degree(g, id, 0) == 0) return id;
  return std::nullopt;
}

inline std::optional<Vertex> lowest_isolated(const Graph& g, const VertexSet& side) {
  for (auto v : members(side))
    if (g.degree(v) == 0) return v;
  return std::nullopt;
}

inline std::optional<Vertex> lowest_min_positive_degree(const Graph& g, const VertexSet& candidates) {
  std::optional<Vertex> best;
  std::size_t best_degree = 0;
  for (auto v : members(candidates)) {
    const auto d = g.degree(v);
    if (d > 0 && (!best || d < best_degree)) {
      best = v;
      best_degree = d;
    }
  }
  return best;
}

inline Vertex lowest_neighbor(const Graph& g, Vertex v) { return static_cast<Vertex>(g.neighbors(v).find_first()); }

}  // namespace detail

/// Side naming: X_0 = P_0; otherwise X is the larger side, and Q on ties.
inline bool names_first_side_x(std::size_t index, std::size_t p, std::size_t q) {
  if (index == 0) return true;
  if (p != q) return p > q;
  return false;
}

/// Validates the root (simple, bipartite, sides of equal size) and returns
/// it with an explicit bipartition attached.
inline Graph prepare_strategy_root(const Graph& g) {
  require_simple(g, "con_strategy_play");
  Graph root = g;
  if (!root.bipartition()) {
    auto sides = two_coloring(root);
    if (!sides) throw InputError("con_strategy_play: graph is not bipartite");
    root.set_bipartition(sides->first, sides->second);
  }
  const auto& b = *root.bipartition();
  if (b.first.count() != b.second.count())
    throw InputError("con_strategy_play: bipartition sides must have equal size (got " +
                     std::to_string(b.first.count()) + " and " + std::to_string(b.second.count()) + ")");
  return root;
}

/// Plays CON's strategy against the given adversary. Tie-breaks: v is the
/// lowest-labelled vertex of minimal positive degree; the partner of v on
/// e is its lowest-labelled neighbour; offers go in ascending edge id.
inline GameTranscript con_strategy_play(const Graph& g, const Adversary& non) {
  GameTranscript tr;
  tr.root = prepare_strategy_root(g);
  Graph cur = tr.root;
  const VertexSet& first = tr.root.bipartition()->first;
  const VertexSet& second = tr.root.bipartition()->second;

  for (std::size_t i = 0;; ++i) {
    if (cur.size() == 0) {
      tr.terminal = cur.active();
      return tr;
    }
    if (auto iso = detail::isolated_edge(cur)) {
      tr.infinite = true;
      tr.isolated_edge = iso;
      return tr;
    }
    SequenceRecord rec;
    rec.index = i;
    rec.n = cur.order();
    rec.edges = cur.size();
    const VertexSet p_side = first & cur.active();
    const VertexSet q_side = second & cur.active();
    rec.p = p_side.count();
    rec.q = q_side.count();
    rec.x_is_first = names_first_side_x(i, rec.p, rec.q);
    const VertexSet& xs = rec.x_is_first ? p_side : q_side;

    const auto isolated_x = detail::lowest_isolated(cur, xs);
    rec.position = isolated_x ? Position::Pos1 : Position::Pos2;
    const auto v = detail::lowest_min_positive_degree(cur, isolated_x ? cur.active() : xs);
    if (!v) throw std::logic_error("con_strategy_play: no vertex of positive degree");
    rec.v = *v;
    rec.delta = cur.degree(*v);
    if (xs.test(*v)) {
      rec.x = *v;
      rec.y = detail::lowest_neighbor(cur, *v);
    } else {
      rec.y = *v;
      rec.x = detail::lowest_neighbor(cur, *v);
    }
    rec.e = *cur.find_edge(rec.x, rec.y);

    std::vector<EdgeId> separated;
    bool ended_infinite = false;
    // Offers (e, f) for every f != e at pivot; returns the exploded f.
    auto run_phase = [&](Vertex pivot) -> std::optional<EdgeId> {
      for (EdgeId f : cur.incident(pivot)) {
        if (f == rec.e) continue;
        const bool isolates = detail::line_degree(cur, rec.e, separated.size() + 1) == 0 ||
                              detail::line_degree(cur, f, 1) == 0;
        const OfferContext ctx{cur, i, rec.e, f, separated, isolates};
        const Response r = non(ctx);
        if (r != Response::Delete && r != Response::Explode)
          throw ProtocolError("adversary returned an invalid response");
        rec.offers.push_back({rec.e, f, r});
        if (r == Response::Explode) return f;
        separated.push_back(f);
        if (detail::line_degree(cur, rec.e, separated.size()) == 0) {
          ended_infinite = true;
          tr.isolated_edge = rec.e;
          return std::nullopt;
        }
        if (detail::line_degree(cur, f, 1) == 0) {
          ended_infinite = true;
          tr.isolated_edge = f;
          return std::nullopt;
        }
      }
      return std::nullopt;
    };

    if (cur.degree(rec.y) > 1) {
      rec.kase = SequenceCase::CaseI;
      if (auto f = run_phase(rec.y)) {
        rec.removed = {rec.x, rec.y, cur.other_end(*f, rec.y)};
      } else if (!ended_infinite) {
        rec.kase = SequenceCase::CaseILagging;
        auto f2 = run_phase(rec.x);
        if (f2) {
          rec.removed = {rec.x, cur.other_end(*f2, rec.x)};
          if (isolated_x) rec.removed.push_back(*isolated_x);
        } else if (!ended_infinite) {
          throw std::logic_error("con_strategy_play: lagging phase ended without explosion or isolation");
        }
      }
    } else {
      rec.kase = SequenceCase::CaseII;
      if (auto f = run_phase(rec.x)) {
        rec.removed = {rec.x, cur.other_end(*f, rec.x)};
        rec.returned = rec.y;
        if (isolated_x) rec.removed.push_back(*isolated_x);
      } else if (!ended_infinite) {
        throw std::logic_error("con_strategy_play: case II phase ended without explosion or isolation");
      }
    }

    tr.sequences.push_back(rec);
    if (ended_infinite) {
      tr.infinite = true;
      return tr;
    }
    for (Vertex w : rec.removed) cur.remove_vertex(w);
  }
}

// ---------------------------------------------------------------------------
// Adversaries

/// Optimal NON on the current L(G) minus this sequence's separations
/// (solved exactly, so limited to small line graphs).
inline Adversary optimal_adversary(std::size_t cap = kPsiVertexCap) {
  return [cap](const OfferContext& ctx) {
    Graph lg = line_graph(ctx.current);
    for (EdgeId s : ctx.separated) lg.remove_edge(*lg.find_edge(ctx.e, s));
    return non_best_response(lg, *lg.find_edge(ctx.e, ctx.f), cap);
  };
}

/// Explodes with the given probability, independently per offer.
inline Adversary random_adversary(std::uint64_t seed, double explode_probability = 0.5) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng, explode_probability](const OfferContext&) {
    std::bernoulli_distribution coin(explode_probability);
    return coin(*rng) ? Response::Explode : Response::Delete;
  };
}

/// Separates every pair unless that would isolate an L(G) vertex.
inline Adversary delete_until_forced() {
  return [](const OfferContext& ctx) { return ctx.deletion_isolates ? Response::Explode : Response::Delete; };
}

/// Replays a fixed list of answers; running out is a protocol error.
inline Adversary scripted_adversary(std::vector<Response> script) {
  auto pos = std::make_shared<std::size_t>(0);
  auto answers = std::make_shared<std::vector<Response>>(std::move(script));
  return [pos, answers](const OfferContext&) {
    if (*pos >= answers->size()) throw ProtocolError("scripted adversary ran out of answers");
    return (*answers)[(*pos)++];
  };
}

/// Visits the transcript of every adversary behaviour, i.e. every leaf of
/// the binary tree of delete/explode answers. Returns the number of leaves.
inline std::size_t for_each_playout(const Graph& g, const std::function<void(const GameTranscript&)>& visit,
                                    std::size_t leaf_budget = 10'000'000) {
  std::vector<Response> script;
  std::size_t leaves = 0;
  while (true) {
    std::size_t pos = 0;
    Adversary walker = [&](const OfferContext&) {
      if (pos == script.size()) script.push_back(Response::Delete);
      return script[pos++];
    };
    const GameTranscript tr = con_strategy_play(g, walker);
    if (++leaves > leaf_budget) throw SizeError("for_each_playout: leaf budget exceeded");
    visit(tr);
    script.resize(pos);
    while (!script.empty() && script.back() == Response::Explode) script.pop_back();
    if (script.empty()) return leaves;
    script.back() = Response::Explode;
  }
}

}  // namespace topmatch
