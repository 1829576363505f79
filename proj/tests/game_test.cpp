#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "topmatch/game.hpp"
#include "topmatch/homology.hpp"
#include "topmatch/interactive.hpp"

using namespace topmatch;

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Plain recursion over the live vertex mask and edge list: no memo, no cutoffs.
std::uint32_t brute_psi(std::uint32_t alive, const std::vector<std::pair<int, int>>& edges) {
  if (alive == 0) return 0;
  std::uint32_t covered = 0;
  for (auto [a, b] : edges) covered |= (1U << a) | (1U << b);
  if ((alive & ~covered) != 0) return kInf;
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const std::uint32_t deleted = brute_psi(alive, rest);
    const auto [a, b] = edges[i];
    std::uint32_t gone = (1U << a) | (1U << b);
    for (auto [x, y] : edges) {
      if (x == a || x == b) gone |= 1U << y;
      if (y == a || y == b) gone |= 1U << x;
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [x, y] : edges)
      if (!(gone >> x & 1U) && !(gone >> y & 1U)) kept.push_back({x, y});
    std::uint32_t exploded = brute_psi(alive & ~gone, kept);
    if (exploded != kInf) ++exploded;
    best = std::max(best, std::min(deleted, exploded));
  }
  return best;
}

std::uint32_t brute_psi(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (EdgeId id : g.edge_ids()) edges.push_back({static_cast<int>(g.edge(id).u), static_cast<int>(g.edge(id).v)});
  std::uint32_t alive = 0;
  for (auto v : members(g.active())) alive |= 1U << v;
  return brute_psi(alive, edges);
}

Graph from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

std::string as_string(std::uint32_t v) { return v == kInf ? "inf" : std::to_string(v); }

}  // namespace

TEST(GameValue, OrderingAndArithmetic) {
  EXPECT_LT(GameValue::finite(3), GameValue::infinite());
  EXPECT_LT(GameValue::finite(1), GameValue::finite(2));
  EXPECT_TRUE(GameValue::infinite().plus_one().is_infinite());
  EXPECT_EQ(GameValue::finite(1).plus_one(), GameValue::finite(2));
  EXPECT_EQ(GameValue::infinite().to_string(), "inf");
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(complete_graph(2)).to_string(), "1");
  EXPECT_EQ(psi(cycle_graph(4)).to_string(), "1");
  EXPECT_EQ(psi(matching_graph(2)).to_string(), "2");
  EXPECT_TRUE(psi(path_graph(4)).is_infinite());
  EXPECT_EQ(psi(Graph(0)).to_string(), "0");
  EXPECT_TRUE(psi(empty_graph(1)).is_infinite());
}

TEST(Psi, MatchesUnmemoizedRecursionUpToFourVertices) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
      const Graph g = from_mask(n, mask);
      ASSERT_EQ(psi(g).to_string(), as_string(brute_psi(g))) << n << ":" << mask;
    }
}

TEST(Psi, MatchesUnmemoizedRecursionOnFiveVertexSample) {
  for (std::uint64_t mask = 0; mask < 1024; mask += 13) {
    const Graph g = from_mask(5, mask);
    ASSERT_EQ(psi(g).to_string(), as_string(brute_psi(g))) << mask;
  }
}

TEST(Psi, RecursionIdentityAtEveryEdge) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const Graph g = from_mask(6, rng() & ((1ULL << 15) - 1));
    const GameValue v = psi(g);
    const auto outcomes = edge_outcomes(g);
    if (outcomes.empty()) continue;
    GameValue best = GameValue::finite(0);
    for (const auto& o : outcomes) {
      EXPECT_EQ(o.after_delete, psi(delete_edge(g, o.edge)));
      EXPECT_EQ(o.after_explode, psi(explode_edge(g, o.edge)).plus_one());
      EXPECT_GE(v, o.worst());
      best = std::max(best, o.worst());
    }
    bool isolated = false;
    for (auto x : members(g.active())) isolated = isolated || g.degree(x) == 0;
    if (!isolated) EXPECT_EQ(v, best);
  }
}

TEST(Psi, BoundedByHomologicalConnectivity) {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph g = from_mask(5, mask);
    const GameValue p = psi(g);
    const EtaValue e = eta_independence(g);
    if (p.is_infinite()) ASSERT_TRUE(e.is_infinite()) << mask;
    else ASSERT_TRUE(e.reaches(p.value())) << mask;
  }
}

TEST(Psi, SizeLimits) {
  EXPECT_THROW(psi(cycle_graph(13)), SizeError);
  EXPECT_NO_THROW(psi(cycle_graph(13), 13));
  Graph multi(2);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  EXPECT_THROW(psi(multi), InputError);
}

TEST(NonResponse, Examples) {
  for (EdgeId e : matching_graph(2).edge_ids()) EXPECT_EQ(non_best_response(matching_graph(2), e), Response::Explode);
  for (EdgeId e : cycle_graph(4).edge_ids()) EXPECT_EQ(non_best_response(cycle_graph(4), e), Response::Explode);
  // P_4 end edge: both options give infinity, ties go to Delete
  EXPECT_EQ(non_best_response(path_graph(4), 0), Response::Delete);
  EXPECT_THROW(non_best_response(path_graph(4), 9), InputError);
}

TEST(ConOffer, AttainsPsi) {
  const Graph g = matching_graph(2);
  const auto e = con_best_offer(g);
  ASSERT_TRUE(e);
  const auto outs = edge_outcomes(g);
  EXPECT_EQ(outs[*e].worst(), psi(g));
  EXPECT_FALSE(con_best_offer(empty_graph(2)).has_value());
}

TEST(Interactive, HumanConScoresOptimally) {
  std::istringstream in("offer 0\noffer 1\n");
  std::ostringstream out;
  const PlayRecord rec = interactive_game(matching_graph(2), Side::Con, in, out);
  EXPECT_TRUE(rec.finished);
  EXPECT_EQ(rec.value.to_string(), "2");
  EXPECT_EQ(rec.root_psi.to_string(), "2");
  ASSERT_EQ(rec.moves.size(), 2u);
  EXPECT_EQ(rec.moves[0].response, Response::Explode);
  EXPECT_NE(out.str().find("game over: value 2"), std::string::npos);
}

TEST(Interactive, HumanNonChoosesOutcome) {
  {
    std::istringstream in("explode\n");
    std::ostringstream out;
    const PlayRecord rec = interactive_game(complete_graph(2), Side::Non, in, out);
    EXPECT_TRUE(rec.finished);
    EXPECT_EQ(rec.value.to_string(), "1");
  }
  {
    std::istringstream in("bogus\ndelete 0\n");
    std::ostringstream out;
    const PlayRecord rec = interactive_game(complete_graph(2), Side::Non, in, out);
    EXPECT_TRUE(rec.finished);
    EXPECT_TRUE(rec.value.is_infinite());
  }
}

TEST(Interactive, QuitLeavesGameUnfinished) {
  std::istringstream in("hint\nquit\n");
  std::ostringstream out;
  const PlayRecord rec = interactive_game(cycle_graph(4), Side::Con, in, out);
  EXPECT_FALSE(rec.finished);
  EXPECT_NE(out.str().find("game left unfinished"), std::string::npos);
  std::istringstream eof("");
  EXPECT_FALSE(interactive_game(cycle_graph(4), Side::Con, eof, out).finished);
}
