#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "topmatch/graph.hpp"

namespace topmatch {

/// Sorted vertex list.
using Face = std::vector<Vertex>;

inline constexpr std::size_t kDefaultFaceBudget = 5'000'000;

/// Finite simplicial complex stored as explicit faces, grouped by dimension
/// and sorted lexicographically within each dimension. A complex built with
/// a dimension cap is "truncated": faces above the cap may exist but were
/// not materialized.
class SimplicialComplex {
 public:
  /// The void complex: no faces at all, not even the empty one.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(std::size_t label_space = 0) {
    SimplicialComplex c;
    c.label_space_ = label_space;
    return c;
  }

  /// {∅}.
  static SimplicialComplex empty_face_only(std::size_t label_space = 0) {
    SimplicialComplex c;
    c.label_space_ = label_space;
    c.has_empty_ = true;
    return c;
  }

  /// Downward closure of the given faces (each must be nonempty).
  static SimplicialComplex from_maximal_faces(std::size_t label_space, const std::vector<Face>& generators) {
    std::vector<std::set<Face>> by_dim;
    for (Face f : generators) {
      std::sort(f.begin(), f.end());
      if (f.empty()) continue;
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("face repeats a vertex");
      if (f.back() >= label_space) throw InputError("face vertex outside the label space");
      const std::size_t k = f.size();
      if (k > 30) throw SizeError("generator face too large to close downward");
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) sub.push_back(f[i]);
        if (by_dim.size() < sub.size()) by_dim.resize(sub.size());
        by_dim[sub.size() - 1].insert(std::move(sub));
      }
    }
    SimplicialComplex c;
    c.label_space_ = label_space;
    c.has_empty_ = true;
    for (auto& s : by_dim) c.faces_.emplace_back(s.begin(), s.end());
    c.rebuild_ground();
    return c;
  }

  std::size_t label_space() const { return label_space_; }
  const std::vector<Vertex>& ground() const { return ground_; }
  bool has_empty_face() const { return has_empty_; }
  bool is_void() const { return !has_empty_ && faces_.empty(); }
  bool truncated() const { return truncated_; }

  /// Highest materialized dimension; -1 for {∅} and for the void complex.
  int top_dimension() const { return static_cast<int>(faces_.size()) - 1; }

  /// Faces of dimension d; d = -1 yields the empty face when present.
  const std::vector<Face>& faces(int d) const {
    static const std::vector<Face> none;
    static const std::vector<Face> empty_face{Face{}};
    if (d == -1) return has_empty_ ? empty_face : none;
    if (d < -1 || d > top_dimension()) return none;
    return faces_[static_cast<std::size_t>(d)];
  }
  std::size_t face_count(int d) const { return faces(d).size(); }

  /// f-vector from dimension -1 upward.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f{has_empty_ ? std::size_t{1} : std::size_t{0}};
    for (const auto& level : faces_) f.push_back(level.size());
    return f;
  }

  std::size_t total_faces() const {
    std::size_t total = has_empty_ ? 1 : 0;
    for (const auto& level : faces_) total += level.size();
    return total;
  }

  std::optional<std::size_t> index_of(const Face& f) const {
    const int d = static_cast<int>(f.size()) - 1;
    const auto& level = faces(d);
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
  }
  bool contains(const Face& f) const { return index_of(f).has_value(); }

  /// Faces not contained in a larger materialized face, in (dim, lex) order.
  std::vector<Face> maximal_faces() const {
    std::vector<Face> out;
    for (int d = 0; d <= top_dimension(); ++d) {
      std::vector<bool> covered(face_count(d), false);
      if (d < top_dimension())
        for (const auto& big : faces(d + 1))
          for (std::size_t skip = 0; skip < big.size(); ++skip) {
            Face sub;
            for (std::size_t i = 0; i < big.size(); ++i)
              if (i != skip) sub.push_back(big[i]);
            covered[*index_of(sub)] = true;
          }
      for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i]) out.push_back(faces(d)[i]);
    }
    return out;
  }

 private:
  friend SimplicialComplex independence_complex(const Graph&, std::optional<int>, std::size_t);

  void rebuild_ground() {
    ground_.clear();
    if (!faces_.empty())
      for (const auto& f : faces_[0]) ground_.push_back(f[0]);
  }

  std::size_t label_space_ = 0;
  std::vector<Vertex> ground_;
  bool has_empty_ = false;
  bool truncated_ = false;
  std::vector<std::vector<Face>> faces_;
};

/// Complex of independent sets of g, with faces up to dimension max_dim
/// when given. Throws SizeError once more than face_budget faces are needed.
inline SimplicialComplex independence_complex(const Graph& g, std::optional<int> max_dim = std::nullopt,
                                              std::size_t face_budget = kDefaultFaceBudget) {
  require_simple(g, "independence_complex");
  if (max_dim && *max_dim < -1) throw InputError("max_dim must be at least -1");
  SimplicialComplex c;
  c.label_space_ = g.vertex_count();
  c.has_empty_ = true;
  const auto n = g.vertex_count();
  std::vector<VertexSet> non_later(n, VertexSet(n));
  for (auto v : members(g.active())) {
    VertexSet later(n);
    for (auto u = g.active().find_next(v); u != VertexSet::npos; u = g.active().find_next(u)) later.set(u);
    non_later[v] = later - g.neighbors(v);
  }
  const std::size_t cap_size = max_dim ? static_cast<std::size_t>(*max_dim + 1) : n;
  std::size_t total = 1;
  Face current;
  // Depth-first over increasing vertex labels emits each dimension in lex order.
  auto extend = [&](auto&& self, const VertexSet& candidates) -> void {
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      current.push_back(static_cast<Vertex>(v));
      const std::size_t d = current.size() - 1;
      if (++total > face_budget)
        throw SizeError("independence complex exceeds the face budget in dimension " + std::to_string(d));
      if (c.faces_.size() <= d) c.faces_.resize(d + 1);
      c.faces_[d].push_back(current);
      const VertexSet next = candidates & non_later[v];
      if (next.any()) {
        if (current.size() < cap_size)
          self(self, next);
        else
          c.truncated_ = true;
      }
      current.pop_back();
    }
  };
  if (cap_size > 0)
    extend(extend, g.active());
  else if (g.order() > 0)
    c.truncated_ = true;
  for (auto& level : c.faces_) std::sort(level.begin(), level.end());
  c.rebuild_ground();
  return c;
}

/// Complex of matchings of h: the independence complex of its line graph,
/// over the edge ids of h.
inline SimplicialComplex matching_complex(const Graph& h, std::optional<int> max_dim = std::nullopt,
                                          std::size_t face_budget = kDefaultFaceBudget) {
  require_simple(h, "matching_complex");
  return independence_complex(line_graph(h), max_dim, face_budget);
}

/// {"ground": label-space size, "faces": maximal faces}.
inline nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json j;
  j["ground"] = c.label_space();
  j["faces"] = c.maximal_faces();
  if (c.truncated()) j["truncated"] = true;
  return j;
}

}  // namespace topmatch
