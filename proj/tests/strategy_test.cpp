#include <gtest/gtest.h>

#include <sstream>

#include "topmatch/audit.hpp"
#include "topmatch/strategy.hpp"
#include "topmatch/transcript_io.hpp"

using namespace topmatch;

namespace {

std::string dump(const GameTranscript& tr) {
  std::ostringstream os;
  write_transcript(os, tr);
  return os.str();
}

GameTranscript first_finite_playout(const Graph& g) {
  std::optional<GameTranscript> found;
  for_each_playout(g, [&](const GameTranscript& tr) {
    if (!found && !tr.infinite) found = tr;
  });
  if (!found) throw std::runtime_error("no finite playout");
  return *found;
}

}  // namespace

TEST(Strategy, ExhaustivePlayoutsPassCoreAudits) {
  const std::vector<std::pair<std::size_t, std::size_t>> expected_leaves{{2, 3}, {3, 11}};
  for (auto [n, leaves] : expected_leaves) {
    const Graph g = complete_bipartite(n, n);
    const Rational bound = strategy_bound(g);
    std::size_t finite = 0;
    const std::size_t count = for_each_playout(g, [&](const GameTranscript& tr) {
      const AuditReport rep = audit_transcript(tr, g);
      EXPECT_TRUE(rep.core_passed()) << "K" << n << "," << n;
      EXPECT_TRUE(rep.passed(checks::kHeadline));
      if (!tr.infinite) {
        ++finite;
        EXPECT_GE(Rational(static_cast<long long>(tr.explosions())), bound);
      }
    });
    EXPECT_EQ(count, leaves);
    EXPECT_GT(finite, 0u);
  }
}

TEST(Strategy, OptimalAdversaryStaysWithinGameValue) {
  const std::vector<std::pair<std::size_t, std::string>> cases{{2, "1"}, {3, "2"}};
  for (const auto& [n, value] : cases) {
    const Graph g = complete_bipartite(n, n);
    const GameTranscript tr = con_strategy_play(g, optimal_adversary());
    EXPECT_EQ(tr.value().to_string(), value);
    EXPECT_LE(tr.value(), psi(line_graph(g)));
    EXPECT_TRUE(audit_transcript(tr, g).core_passed());
  }
}

TEST(Strategy, AdversariesAreDeterministic) {
  const Graph g = complete_bipartite(3, 3);
  EXPECT_EQ(dump(con_strategy_play(g, random_adversary(11, 0.4))), dump(con_strategy_play(g, random_adversary(11, 0.4))));
  const GameTranscript d = con_strategy_play(g, delete_until_forced());
  EXPECT_TRUE(audit_transcript(d, g).core_passed());
}

TEST(Strategy, SingleEdgeEndsAtInfinity) {
  const Graph g = complete_bipartite(1, 1);
  const GameTranscript tr = con_strategy_play(g, delete_until_forced());
  EXPECT_TRUE(tr.infinite);
  EXPECT_TRUE(tr.value().is_infinite());
  const AuditReport rep = audit_transcript(tr, g);
  EXPECT_EQ(rep.count(checks::kHeadline, CheckOutcome::Vacuous), 1u);
  EXPECT_TRUE(rep.passed());
}

TEST(Strategy, RejectsInvalidRoots) {
  EXPECT_THROW(con_strategy_play(complete_bipartite(2, 3), delete_until_forced()), InputError);
  EXPECT_THROW(con_strategy_play(cycle_graph(5), delete_until_forced()), InputError);
  EXPECT_THROW(con_strategy_play(complete_bipartite(2, 2), scripted_adversary({})), ProtocolError);
}

TEST(Transcript, RoundTripPreservesAudit) {
  const Graph g = complete_bipartite(3, 3);
  for_each_playout(g, [&](const GameTranscript& tr) {
    std::istringstream in(dump(tr));
    const GameTranscript back = read_transcript(in);
    EXPECT_EQ(dump(back), dump(tr));
    EXPECT_EQ(back.value(), tr.value());
    EXPECT_EQ(audit_transcript(back, back.root).passed(), audit_transcript(tr, g).passed());
  });
}

TEST(Transcript, TamperedHashIsCorruption) {
  const std::string text = dump(con_strategy_play(complete_bipartite(2, 2), delete_until_forced()));
  const auto cut = text.find('\n');
  json header = json::parse(text.substr(0, cut));
  std::string hash = header.at("root_hash");
  hash[0] = hash[0] == '0' ? '1' : '0';
  header["root_hash"] = hash;
  std::istringstream in(header.dump() + text.substr(cut));
  EXPECT_THROW(read_transcript(in), CorruptionError);
  std::istringstream garbage("{\"type\":\"sequence\"}\n");
  EXPECT_THROW(read_transcript(garbage), CorruptionError);
}

TEST(Audit, ForgedRemovalIsFlagged) {
  const Graph g = complete_bipartite(2, 2);
  GameTranscript tr = first_finite_playout(g);
  tr.sequences.resize(1);
  auto& s = tr.sequences[0];
  const VertexSet& first = tr.root.bipartition()->first;
  const VertexSet& second = tr.root.bipartition()->second;
  const VertexSet& xs = s.x_is_first ? first : second;
  s.removed = members(xs);
  s.returned.reset();
  tr.infinite = false;
  tr.terminal = s.x_is_first ? second : first;
  const AuditReport rep = audit_transcript(tr, g);
  EXPECT_FALSE(rep.passed(checks::kRemovalSides));
  EXPECT_FALSE(rep.core_passed());
}

TEST(Audit, ReplayMismatchIsCorruption) {
  const Graph g = complete_bipartite(2, 2);
  GameTranscript tr = first_finite_playout(g);
  tr.sequences[0].edges += 1;
  EXPECT_THROW(audit_transcript(tr, g), CorruptionError);
}

TEST(Audit, StrategyBound) {
  // K_{n,n} is dense enough that k(G) vanishes
  EXPECT_EQ(strategy_bound(complete_bipartite(3, 3)), Rational(3, 2));
  EXPECT_EQ(strategy_bound(complete_bipartite(2, 2)), Rational(5, 6));
}
