#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "topmatch/graph.hpp"

namespace topmatch {

using json = nlohmann::json;

/// {"n": int, "edges": [[u,v],...], "bipartition": [[...],[...]],
///  "multiplicity": [int,...]}. Parallel edges are written once with their
/// multiplicity. An "active" list is written only for graphs with removed
/// vertices.
inline json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  std::map<std::pair<Vertex, Vertex>, int> mult;
  std::vector<std::pair<Vertex, Vertex>> order;
  for (EdgeId id : g.edge_ids()) {
    const auto key = std::make_pair(g.edge(id).u, g.edge(id).v);
    if (mult[key]++ == 0) order.push_back(key);
  }
  json edges = json::array();
  json multiplicity = json::array();
  bool simple = true;
  for (const auto& key : order) {
    edges.push_back({key.first, key.second});
    multiplicity.push_back(mult[key]);
    simple = simple && mult[key] == 1;
  }
  j["edges"] = edges;
  if (!simple) j["multiplicity"] = multiplicity;
  if (g.bipartition())
    j["bipartition"] = {members(g.bipartition()->first), members(g.bipartition()->second)};
  if (g.order() != g.vertex_count()) j["active"] = members(g.active());
  return j;
}

inline Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n")) throw InputError("graph JSON needs an object with \"n\"");
    const auto n = j.at("n").get<long long>();
    if (n < 0) throw InputError("graph JSON: n must be non-negative");
    Graph g(static_cast<std::size_t>(n));
    if (j.contains("active")) {
      VertexSet keep(g.vertex_count());
      for (const auto& v : j.at("active")) {
        const auto x = v.get<long long>();
        if (x < 0 || x >= n) throw InputError("graph JSON: active vertex out of range");
        keep.set(static_cast<std::size_t>(x));
      }
      g.remove_vertices(g.active() - keep);
    }
    if (j.contains("bipartition")) {
      const auto& b = j.at("bipartition");
      if (!b.is_array() || b.size() != 2) throw InputError("graph JSON: bipartition must be two lists");
      VertexSet first(g.vertex_count()), second(g.vertex_count());
      for (int side = 0; side < 2; ++side)
        for (const auto& v : b[side]) {
          const auto x = v.get<long long>();
          if (x < 0 || x >= n) throw InputError("graph JSON: bipartition vertex out of range");
          (side == 0 ? first : second).set(static_cast<std::size_t>(x));
        }
      g.set_bipartition(first, second);
    }
    const json edges = j.value("edges", json::array());
    std::vector<long long> mult(edges.size(), 1);
    if (j.contains("multiplicity")) {
      const auto& m = j.at("multiplicity");
      if (m.size() != edges.size()) throw InputError("graph JSON: multiplicity must parallel edges");
      for (std::size_t i = 0; i < m.size(); ++i) mult[i] = m[i].get<long long>();
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: edges are [u, v] pairs");
      const auto u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph JSON: edge endpoint out of range");
      if (mult[i] < 1) throw InputError("graph JSON: multiplicities must be positive");
      for (long long c = 0; c < mult[i]; ++c) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
}

}  // namespace topmatch
