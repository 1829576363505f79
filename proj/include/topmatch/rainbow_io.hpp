#pragma once

#include <string>
#include <vector>

#include "topmatch/graph_io.hpp"
#include "topmatch/rainbow.hpp"
#include "topmatch/symbol_array.hpp"

namespace topmatch {

// Instance JSON, two shapes:
//   {"n": int, "colors": [[i, j, c], ...]}   colouring of E(K_{n,n})
//   graph JSON + {"mode": "edge"|"vertex", "classes": [[id, ...], ...]}
// In the second shape edge ids are positions in "edges", which lists every
// edge (parallel copies repeated) and carries no "multiplicity".

inline json partition_to_json(const ColorPartition& cp) {
  json j = graph_to_json(cp.host);
  j.erase("multiplicity");
  std::vector<long long> position(cp.host.edge_slots(), -1);
  json edges = json::array();
  for (EdgeId id : cp.host.edge_ids()) {
    position[id] = static_cast<long long>(edges.size());
    edges.push_back({cp.host.edge(id).u, cp.host.edge(id).v});
  }
  j["edges"] = edges;
  j["mode"] = cp.mode == PartitionMode::Edge ? "edge" : "vertex";
  json classes = json::array();
  for (const auto& cls : cp.classes) {
    json c = json::array();
    for (auto id : cls) c.push_back(cp.mode == PartitionMode::Edge ? position.at(id) : static_cast<long long>(id));
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j;
}

inline ColorPartition partition_from_json(const json& j) {
  try {
    if (j.contains("colors")) {
      const auto n = j.at("n").get<long long>();
      if (n < 1) throw InputError("instance JSON: n must be positive");
      const auto un = static_cast<std::size_t>(n);
      SymbolArray colors(un, -1);
      std::size_t seen = 0;
      for (const auto& t : j.at("colors")) {
        if (!t.is_array() || t.size() != 3) throw InputError("instance JSON: colors are [i, j, c] triples");
        const auto r = t[0].get<long long>(), c = t[1].get<long long>();
        if (r < 0 || c < 0 || r >= n || c >= n) throw InputError("instance JSON: cell out of range");
        auto& cell = colors(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        if (cell != -1) throw InputError("instance JSON: cell coloured twice");
        cell = t[2].get<int>();
        if (cell < 0) throw InputError("instance JSON: colours must be non-negative");
        ++seen;
      }
      if (seen != un * un) throw InputError("instance JSON: every edge of K_{n,n} needs a colour");
      return partition_from_colors(colors);
    }
    ColorPartition cp{graph_from_json(j), PartitionMode::Edge, {}};
    if (j.contains("multiplicity")) throw InputError("instance JSON: list parallel edges individually");
    const std::string mode = j.value("mode", "edge");
    if (mode == "vertex") cp.mode = PartitionMode::Vertex;
    else if (mode != "edge") throw InputError("instance JSON: mode must be \"edge\" or \"vertex\"");
    for (const auto& cls : j.at("classes")) cp.classes.push_back(cls.get<std::vector<std::uint32_t>>());
    cp.validate();
    return cp;
  } catch (const json::exception& e) {
    throw InputError(std::string("instance JSON: ") + e.what());
  }
}

/// {"n": int, "rows": [[...], ...]}, mirroring the text format.
inline json array_to_json(const SymbolArray& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.order(); ++i) rows.push_back(a.row(i));
  return {{"n", a.order()}, {"rows", rows}};
}

inline SymbolArray array_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.at("n").get<std::size_t>() != rows.size()) throw InputError("array JSON: n does not match the rows");
    return SymbolArray::from_rows(rows);
  } catch (const json::exception& e) {
    throw InputError(std::string("array JSON: ") + e.what());
  }
}

}  // namespace topmatch
