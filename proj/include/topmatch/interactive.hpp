#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "topmatch/game.hpp"
#include "topmatch/graph.hpp"

namespace topmatch {

enum class Side { Con, Non };

struct PlayMove {
  EdgeId edge = 0;
  Response response = Response::Delete;
};

/// Record of one plain game on g. Edge ids are those of the root graph.
struct PlayRecord {
  Graph root;
  Side human = Side::Con;
  std::vector<PlayMove> moves;
  bool finished = false;
  GameValue value;      // final value when finished
  GameValue root_psi;   // Ψ(root), for comparison
};

namespace detail {

inline bool has_isolated_vertex(const Graph& g) {
  for (auto v : members(g.active()))
    if (g.degree(v) == 0) return true;
  return false;
}

inline void show_position(std::ostream& out, const Graph& g, std::size_t explosions) {
  out << "explosions so far: " << explosions << "\n";
  for (EdgeId id : g.edge_ids()) out << "  [" << id << "] " << g.edge(id).u << "-" << g.edge(id).v << "\n";
}

}  // namespace detail

/// Terminal REPL for the game on g. The human plays `human`; the engine
/// answers with con_best_offer or non_best_response.
///
/// Human CON types `offer <k>`; human NON answers an engine offer with
/// `delete` or `explode` (optionally followed by the offered id). Both sides
/// accept `hint` and `quit`. Invalid input re-prompts.
inline PlayRecord interactive_game(const Graph& g, Side human, std::istream& in, std::ostream& out,
                                   std::size_t cap = kPsiVertexCap) {
  PlayRecord rec;
  rec.root = g;
  rec.human = human;
  rec.root_psi = psi(g, cap);
  Graph cur = g;
  std::uint32_t explosions = 0;

  auto apply = [&](EdgeId e, Response r) {
    rec.moves.push_back({e, r});
    out << (r == Response::Delete ? "delete " : "explode ") << e << "\n";
    if (r == Response::Delete) {
      cur = delete_edge(cur, e);
    } else {
      cur = explode_edge(cur, e);
      ++explosions;
    }
  };

  std::string line;
  while (true) {
    if (cur.order() == 0) {
      rec.finished = true;
      rec.value = GameValue::finite(explosions);
      break;
    }
    if (detail::has_isolated_vertex(cur)) {
      rec.finished = true;
      rec.value = GameValue::infinite();
      break;
    }
    detail::show_position(out, cur, explosions);
    std::optional<EdgeId> offered;
    if (human == Side::Non) {
      offered = con_best_offer(cur, cap);
      out << "CON offers [" << *offered << "]\n";
    }
    bool moved = false;
    while (!moved) {
      out << (human == Side::Con ? "con> " : "non> ") << std::flush;
      if (!std::getline(in, line)) line = "quit";
      std::istringstream words(line);
      std::string cmd;
      words >> cmd;
      if (cmd == "quit") {
        out << "game left unfinished\n";
        return rec;
      }
      if (cmd == "hint") {
        if (human == Side::Con)
          out << "best offer: [" << *con_best_offer(cur, cap) << "]\n";
        else
          out << "best answer: " << to_string(non_best_response(cur, *offered, cap)) << "\n";
        continue;
      }
      long long k = -1;
      const bool has_id = static_cast<bool>(words >> k);
      if (human == Side::Con && cmd == "offer" && has_id && k >= 0 && cur.has_edge(static_cast<EdgeId>(k))) {
        const auto e = static_cast<EdgeId>(k);
        apply(e, non_best_response(cur, e, cap));
        moved = true;
      } else if (human == Side::Non && (cmd == "delete" || cmd == "explode") &&
                 (!has_id || k == static_cast<long long>(*offered))) {
        apply(*offered, cmd == "delete" ? Response::Delete : Response::Explode);
        moved = true;
      } else {
        out << (human == Side::Con ? "expected: offer <k> | hint | quit\n"
                                   : "expected: delete | explode | hint | quit\n");
      }
    }
  }
  out << "game over: value " << rec.value.to_string() << " (psi = " << rec.root_psi.to_string() << ")\n";
  return rec;
}

}  // namespace topmatch
