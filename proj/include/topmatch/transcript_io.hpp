#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include "json.hpp"
#include "topmatch/graph_io.hpp"
#include "topmatch/strategy.hpp"

namespace topmatch {

inline constexpr const char* kEngineVersion = "topmatch-0.3.0";
inline constexpr const char* kTieBreakPolicy = "v:lowest-min-positive-degree;partner:lowest-neighbor;offers:ascending-edge-id;non-ties:delete";

/// Lowercase hex SHA-256 of a byte string.
inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

inline std::string graph_hash(const Graph& g) { return sha256_hex(canonical_key(g)); }

// JSON lines, in order:
//   {"type":"header", "root_hash", "engine_version", "tie_break", "root"}
//   per sequence: {"type":"sequence", ...state and choices...}
//                 {"type":"move", "sequence", "e", "f", "response"}  one per offer
//                 {"type":"removal", "sequence", "removed", "returned"?}  unless it ended the game
//   {"type":"result", "value", "explosions", "infinite", "isolated_edge"?, "terminal"?}
inline void write_transcript(std::ostream& os, const GameTranscript& tr) {
  json header{{"type", "header"},
              {"root_hash", graph_hash(tr.root)},
              {"engine_version", kEngineVersion},
              {"tie_break", kTieBreakPolicy},
              {"root", graph_to_json(tr.root)}};
  os << header.dump() << '\n';
  for (const auto& s : tr.sequences) {
    json seq{{"type", "sequence"}, {"index", s.index}, {"n", s.n},          {"p", s.p},
             {"q", s.q},           {"edges", s.edges}, {"x_side", s.x_is_first ? "P" : "Q"},
             {"v", s.v},           {"delta", s.delta}, {"position", to_string(s.position)},
             {"case", to_string(s.kase)}, {"x", s.x},  {"y", s.y},          {"e", s.e}};
    os << seq.dump() << '\n';
    for (const auto& o : s.offers)
      os << json{{"type", "move"}, {"sequence", s.index}, {"e", o.e}, {"f", o.f}, {"response", to_string(o.response)}}
                .dump()
         << '\n';
    if (!s.removed.empty()) {
      json rm{{"type", "removal"}, {"sequence", s.index}, {"removed", s.removed}};
      if (s.returned) rm["returned"] = *s.returned;
      os << rm.dump() << '\n';
    }
  }
  json result{{"type", "result"},
              {"value", tr.value().to_string()},
              {"explosions", tr.explosions()},
              {"infinite", tr.infinite}};
  if (tr.isolated_edge) result["isolated_edge"] = *tr.isolated_edge;
  if (!tr.infinite) result["terminal"] = members(tr.terminal);
  os << result.dump() << '\n';
}

inline GameTranscript read_transcript(std::istream& is) {
  GameTranscript tr;
  std::string line;
  bool have_header = false, have_result = false;
  auto parse_position = [](const std::string& s) {
    if (s == "POS1") return Position::Pos1;
    if (s == "POS2") return Position::Pos2;
    throw CorruptionError("transcript: unknown position tag " + s);
  };
  auto parse_case = [](const std::string& s) {
    if (s == "I") return SequenceCase::CaseI;
    if (s == "I-lagging") return SequenceCase::CaseILagging;
    if (s == "II") return SequenceCase::CaseII;
    throw CorruptionError("transcript: unknown case tag " + s);
  };
  try {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      const std::string type = j.at("type");
      if (type == "header") {
        tr.root = graph_from_json(j.at("root"));
        if (j.at("root_hash").get<std::string>() != graph_hash(tr.root))
          throw CorruptionError("transcript: root hash does not match the embedded root graph");
        have_header = true;
      } else if (!have_header) {
        throw CorruptionError("transcript: header must come first");
      } else if (type == "sequence") {
        SequenceRecord s;
        s.index = j.at("index");
        s.n = j.at("n");
        s.p = j.at("p");
        s.q = j.at("q");
        s.edges = j.at("edges");
        s.x_is_first = j.at("x_side").get<std::string>() == "P";
        s.v = j.at("v");
        s.delta = j.at("delta");
        s.position = parse_position(j.at("position"));
        s.kase = parse_case(j.at("case"));
        s.x = j.at("x");
        s.y = j.at("y");
        s.e = j.at("e");
        if (s.index != tr.sequences.size()) throw CorruptionError("transcript: sequences out of order");
        tr.sequences.push_back(std::move(s));
      } else if (type == "move" || type == "removal") {
        if (tr.sequences.empty() || j.at("sequence").get<std::size_t>() != tr.sequences.back().index)
          throw CorruptionError("transcript: " + type + " line outside its sequence");
        auto& s = tr.sequences.back();
        if (type == "move") {
          const std::string r = j.at("response");
          if (r != "delete" && r != "explode") throw CorruptionError("transcript: unknown response " + r);
          s.offers.push_back({j.at("e"), j.at("f"), r == "delete" ? Response::Delete : Response::Explode});
        } else {
          s.removed = j.at("removed").get<std::vector<Vertex>>();
          if (j.contains("returned")) s.returned = j.at("returned").get<Vertex>();
        }
      } else if (type == "result") {
        tr.infinite = j.at("infinite");
        if (j.contains("isolated_edge")) tr.isolated_edge = j.at("isolated_edge").get<EdgeId>();
        tr.terminal = VertexSet(tr.root.vertex_count());
        if (j.contains("terminal"))
          for (auto v : j.at("terminal").get<std::vector<Vertex>>()) {
            if (v >= tr.root.vertex_count()) throw CorruptionError("transcript: terminal vertex out of range");
            tr.terminal.set(v);
          }
        have_result = true;
      } else {
        throw CorruptionError("transcript: unknown line type " + type);
      }
    }
  } catch (const json::exception& e) {
    throw CorruptionError(std::string("transcript: ") + e.what());
  } catch (const InputError& e) {
    throw CorruptionError(std::string("transcript: ") + e.what());
  }
  if (!have_header || !have_result) throw CorruptionError("transcript: missing header or result line");
  return tr;
}

}  // namespace topmatch
