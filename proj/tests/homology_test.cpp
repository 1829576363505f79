#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "topmatch/complex.hpp"
#include "topmatch/homology.hpp"

using namespace topmatch;

namespace {

constexpr std::int64_t kPrime = 1'000'000'007;

std::int64_t power_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % kPrime);
    b = static_cast<std::int64_t>((__int128)b * b % kPrime);
    e >>= 1;
  }
  return r;
}

// Dense Gaussian elimination mod a large prime.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] % kPrime == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const std::int64_t inv = power_mod((a[r][c] % kPrime + kPrime) % kPrime, kPrime - 2);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)((a[i][c] % kPrime + kPrime) % kPrime) * inv % kPrime);
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k)
        a[i][k] = static_cast<std::int64_t>(((a[i][k] - (__int128)f * a[r][k]) % kPrime + kPrime) % kPrime);
    }
    ++r;
  }
  return r;
}

// Faces of I(G) by subset enumeration, grouped by dimension.
std::vector<std::vector<std::vector<Vertex>>> brute_faces(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::vector<Vertex>>> by_dim;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::vector<Vertex> f;
    for (Vertex v = 0; v < n; ++v)
      if (s >> v & 1U) f.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i)
      for (std::size_t j = i + 1; j < f.size() && ok; ++j) ok = !g.adjacent(f[i], f[j]);
    if (!ok) continue;
    if (by_dim.size() < f.size()) by_dim.resize(f.size());
    by_dim[f.size() - 1].push_back(f);
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  return by_dim;
}

// Reduced Betti numbers of I(G) from dense boundary matrices mod p.
std::vector<std::size_t> brute_betti(const Graph& g) {
  auto faces = brute_faces(g);
  std::vector<std::size_t> f{1};
  for (auto& level : faces) f.push_back(level.size());
  // rank of ∂_j : C_j -> C_{j-1}, j = 0 is the augmentation
  std::vector<std::size_t> rk(f.size() + 1, 0);
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const auto& top = faces[j];
    std::vector<std::vector<Vertex>> bottom = j == 0 ? std::vector<std::vector<Vertex>>{{}} : faces[j - 1];
    std::vector<std::vector<std::int64_t>> m(bottom.size(), std::vector<std::int64_t>(top.size(), 0));
    for (std::size_t c = 0; c < top.size(); ++c)
      for (std::size_t skip = 0; skip < top[c].size(); ++skip) {
        std::vector<Vertex> sub = top[c];
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
        const auto r = std::lower_bound(bottom.begin(), bottom.end(), sub) - bottom.begin();
        m[static_cast<std::size_t>(r)][c] = skip % 2 ? -1 : 1;
      }
    rk[j + 1] = rank_mod_p(m);  // index shifted: rk[d+1] is the rank out of dim d
  }
  std::vector<std::size_t> betti;
  for (std::size_t d = 0; d < f.size(); ++d) betti.push_back(f[d] - rk[d] - (d + 1 < rk.size() ? rk[d + 1] : 0));
  return betti;  // betti[0] is dimension -1
}

Graph from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

}  // namespace

TEST(Complex, MatchingComplexOfK33) {
  const SimplicialComplex c = matching_complex(complete_bipartite(3, 3));
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{1, 9, 18, 6}));
  EXPECT_EQ(c.maximal_faces().size(), 6u);
}

TEST(Complex, SpecialComplexes) {
  const auto v = SimplicialComplex::void_complex(3);
  EXPECT_TRUE(v.is_void());
  EXPECT_EQ(v.total_faces(), 0u);
  const auto e = SimplicialComplex::empty_face_only(3);
  EXPECT_FALSE(e.is_void());
  EXPECT_EQ(e.f_vector(), std::vector<std::size_t>{1});
  EXPECT_EQ(independence_complex(Graph(0)).f_vector(), std::vector<std::size_t>{1});
}

TEST(Complex, FromMaximalFacesClosesDownward) {
  const auto c = SimplicialComplex::from_maximal_faces(4, {{0, 1, 2}, {2, 3}});
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{1, 4, 4, 1}));
  EXPECT_TRUE(c.contains({1, 2}));
  EXPECT_FALSE(c.contains({1, 3}));
  EXPECT_THROW(SimplicialComplex::from_maximal_faces(2, {{0, 5}}), InputError);
}

TEST(Complex, IndependenceComplexAgreesWithSubsetEnumeration) {
  for (std::uint64_t mask = 0; mask < 1024; mask += 7) {
    const Graph g = from_mask(5, mask);
    const auto c = independence_complex(g);
    const auto faces = brute_faces(g);
    ASSERT_EQ(c.top_dimension() + 1, static_cast<int>(faces.size()));
    for (std::size_t d = 0; d < faces.size(); ++d) ASSERT_EQ(c.faces(static_cast<int>(d)), faces[d]);
  }
}

TEST(Complex, DimensionCapTruncates) {
  const auto c = independence_complex(empty_graph(5), 1);
  EXPECT_TRUE(c.truncated());
  EXPECT_EQ(c.top_dimension(), 1);
  EXPECT_FALSE(independence_complex(complete_graph(3), 1).truncated());
}

TEST(Complex, FaceBudget) {
  EXPECT_THROW(independence_complex(empty_graph(12), std::nullopt, 100), SizeError);
}

TEST(Boundary, SquaresToZero) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto c = independence_complex(from_mask(7, rng() & ((1ULL << 21) - 1)));
    for (int j = 1; j <= c.top_dimension(); ++j) {
      const auto hi = boundary_matrix(c, j), lo = boundary_matrix(c, j - 1);
      for (std::size_t col = 0; col < hi.cols; ++col)
        for (std::size_t row = 0; row < lo.rows; ++row) {
          std::int64_t s = 0;
          for (auto [mid, v] : hi.columns[col]) s += lo.at(row, mid) * v;
          ASSERT_EQ(s, 0);
        }
    }
  }
}

TEST(Boundary, TripletFormat) {
  const auto c = SimplicialComplex::from_maximal_faces(2, {{0, 1}});
  std::ostringstream os;
  boundary_matrix(c, 1).write_triplets(os);
  EXPECT_EQ(os.str(), "0 0 -1\n1 0 1\n");
  EXPECT_THROW(boundary_matrix(c, 5), InputError);
}

TEST(Rank, ExactSmallMatrices) {
  BoundaryMatrix m;
  m.rows = 2;
  m.cols = 2;
  m.columns = {{{0, 2}, {1, 1}}, {{0, 4}, {1, 2}}};
  EXPECT_EQ(rank(m), 1u);
  m.columns = {{{0, 2}, {1, 1}}, {{0, 4}, {1, 3}}};
  EXPECT_EQ(rank(m), 2u);
  m.columns = {{}, {}};
  EXPECT_EQ(rank(m), 0u);
}

TEST(Rank, OverflowFallsBackToBigIntegers) {
  const std::int64_t big = 3'037'000'499;  // big*big is close to 2^63
  BoundaryMatrix m;
  m.rows = 3;
  m.cols = 3;
  m.columns = {{{0, 7}, {1, big - 1}, {2, big}},
               {{0, 11}, {1, big}, {2, big - 2}},
               {{0, 18}, {1, 2 * big - 1}, {2, 2 * big - 2}}};
  EXPECT_EQ(rank(m), 2u);  // third column is the sum of the first two
  m.columns[2][0].second = 19;
  EXPECT_EQ(rank(m), 3u);
}

TEST(Homology, BettiAgreesWithModPOracle) {
  for (std::uint64_t mask = 0; mask < (1ULL << 15); mask += 97) {
    const Graph g = from_mask(6, mask);
    const auto c = independence_complex(g);
    const auto expected = brute_betti(g);
    ChainRanks ranks(c);
    for (int d = -1; d <= c.top_dimension(); ++d)
      ASSERT_EQ(ranks.betti(d), expected[static_cast<std::size_t>(d + 1)]) << mask << " dim " << d;
  }
}

TEST(Homology, EulerCharacteristic) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const auto c = independence_complex(from_mask(7, rng() & ((1ULL << 21) - 1)));
    long long chi_f = 0, chi_b = 0;
    ChainRanks ranks(c);
    for (int d = -1; d <= c.top_dimension(); ++d) {
      const long long sign = (d + 1) % 2 == 0 ? 1 : -1;
      chi_f += sign * static_cast<long long>(c.face_count(d));
      chi_b += sign * static_cast<long long>(ranks.betti(d));
    }
    ASSERT_EQ(chi_f, chi_b);
  }
}

TEST(Eta, Conventions) {
  EXPECT_EQ(eta(SimplicialComplex::void_complex()).to_string(), "0");
  // {∅} has reduced H_{-1} = Q
  EXPECT_EQ(eta(SimplicialComplex::empty_face_only()).to_string(), "0");
  // full simplex (cone) is acyclic
  EXPECT_TRUE(eta_independence(empty_graph(4)).is_infinite());
}

TEST(Eta, SmallGraphs) {
  EXPECT_EQ(eta_independence(cycle_graph(4)).to_string(), "1");      // two disjoint edges
  EXPECT_EQ(eta_independence(matching_graph(2)).to_string(), "2");   // a 4-cycle
  EXPECT_TRUE(eta_independence(path_graph(4)).is_infinite());        // a path
  EXPECT_EQ(eta_independence(complete_graph(3)).to_string(), "1");   // three points
}

TEST(Eta, MatchingComplexesOfCompleteBipartite) {
  EXPECT_EQ(eta_matching(complete_bipartite(2, 2)).to_string(), "1");
  EXPECT_EQ(eta_matching(complete_bipartite(3, 3)).to_string(), "2");
  const auto c = matching_complex(complete_bipartite(3, 3));
  EXPECT_EQ(reduced_betti(c, 1), 4u);
}

TEST(Eta, CapModeGivesLowerBounds) {
  const auto e = eta_independence(empty_graph(6), 2);
  EXPECT_TRUE(e.is_lower_bound());
  EXPECT_EQ(e.to_string(), ">=2");
  EXPECT_TRUE(e.reaches(2));
  EXPECT_FALSE(e.reaches(3));
  // below the cap the exact value comes back
  EXPECT_EQ(eta_independence(cycle_graph(4), 3).to_string(), "1");
  EXPECT_TRUE(EtaValue::finite(2).reaches(Rational(3, 2)));
  EXPECT_FALSE(EtaValue::finite(1).reaches(Rational(3, 2)));
}

TEST(Eta, MatchingRejectsMultigraphs) {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  EXPECT_THROW(eta_matching(g), InputError);
}
