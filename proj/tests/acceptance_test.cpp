// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values are recomputed here by brute force
// rather than taken from the library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "topmatch/audit.hpp"
#include "topmatch/game.hpp"
#include "topmatch/homology.hpp"
#include "topmatch/latin.hpp"
#include "topmatch/rainbow.hpp"
#include "topmatch/strategy.hpp"

using namespace topmatch;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Wall-clock limits in seconds, per criterion.
constexpr double kLimit1 = 120, kLimit2 = 300, kLimit3 = 600, kLimit4 = 600, kLimit5 = 600;
constexpr double kLimit6 = 300, kLimit7 = 180, kLimit8 = 120, kLimit9 = 120, kLimit10 = 300;

int failures = 0;

void report(int id, bool ok, double seconds, double limit, const std::string& detail) {
  const bool in_time = seconds < limit;
  const bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", id, detail.c_str(), seconds,
              limit, in_time ? "" : ", TIME EXCEEDED");
  std::fflush(stdout);
}

template <class F>
void criterion(int id, double limit, F&& body) {
  const auto start = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, ok, std::chrono::duration<double>(Clock::now() - start).count(), limit, detail);
}

// ---------------------------------------------------------------------------
// Oracles

// Reduced Betti numbers over GF(p) of the matching complex of K_{n,n}, from
// matchings listed directly as sets of cells.
std::vector<std::size_t> matching_betti_mod_p(std::size_t n) {
  constexpr std::uint64_t p = 1'000'000'007ULL;
  std::vector<std::vector<std::vector<std::size_t>>> faces(n + 1);  // faces[k]: matchings with k edges
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::uint32_t)> grow = [&](std::size_t row, std::uint32_t cols) {
    faces[cur.size()].push_back(cur);
    for (std::size_t r = row; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!(cols >> c & 1U)) {
          cur.push_back(r * n + c);
          grow(r + 1, cols | (1U << c));
          cur.pop_back();
        }
  };
  grow(0, 0);
  auto rank = [&](std::size_t k) -> std::size_t {  // boundary from k-edge faces to (k-1)-edge faces
    if (k == 0 || k > n || faces[k].empty()) return 0;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < faces[k - 1].size(); ++i) index[faces[k - 1][i]] = i;
    std::vector<std::vector<std::uint64_t>> m(faces[k].size(), std::vector<std::uint64_t>(faces[k - 1].size(), 0));
    for (std::size_t a = 0; a < faces[k].size(); ++a)
      for (std::size_t s = 0; s < k; ++s) {
        auto sub = faces[k][a];
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(s));
        m[a][index.at(sub)] = s % 2 ? p - 1 : 1;
      }
    auto power = [&](std::uint64_t b, std::uint64_t e) {
      std::uint64_t r = 1;
      for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
      return r;
    };
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t piv = r;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[r]);
      const std::uint64_t inv = power(m[r][c], p - 2);
      for (std::size_t i = r + 1; i < m.size(); ++i)
        if (m[i][c]) {
          const std::uint64_t f = m[i][c] * inv % p;
          for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
      ++r;
    }
    return r;
  };
  std::vector<std::size_t> ranks(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k) ranks[k] = rank(k);
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k <= n; ++k) betti.push_back(faces[k].size() - ranks[k] - ranks[k + 1]);
  return betti;  // betti[k] is the reduced Betti number in dimension k - 1
}

std::size_t count_derangements(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool fixed = false;
    for (std::size_t i = 0; i < n; ++i) fixed = fixed || perm[i] == i;
    count += fixed ? 0 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::size_t factorial_small(std::size_t n) { return n <= 1 ? 1 : n * factorial_small(n - 1); }

// Least integer >= a/b for a, b > 0 small.
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Graph bipartite_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g = complete_bipartite(n, n);
  for (std::size_t id = 0; id < n * n; ++id)
    if (!(mask >> id & 1U)) g.remove_edge(static_cast<EdgeId>(id));
  return g;
}

bool has_isolated_vertex(const Graph& g) {
  for (auto v : members(g.active()))
    if (g.degree(v) == 0) return true;
  return false;
}

// Exhaustive ISR test: one vertex per class, 3^4 = 81 branches for the
// Jin-Yuster instance.
std::pair<bool, std::size_t> brute_full_isr(const ColorPartition& cp) {
  std::size_t branches = 0;
  std::vector<Vertex> pick;
  std::function<bool(std::size_t)> go = [&](std::size_t c) {
    if (c == cp.classes.size()) {
      ++branches;
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t b = a + 1; b < pick.size(); ++b)
          if (cp.host.find_edge(pick[a], pick[b])) return false;
      return true;
    }
    bool any = false;
    for (auto v : cp.classes[c]) {
      pick.push_back(v);
      any = go(c + 1) || any;
      pick.pop_back();
    }
    return any;
  };
  const bool found = go(0);
  return {found, branches};
}

// Largest rainbow matching by trying every choice of one edge (or none) per class.
std::size_t brute_rainbow(const ColorPartition& cp) {
  std::vector<bool> used(cp.host.vertex_count(), false);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t c) -> std::size_t {
    if (c == cp.classes.size()) return 0;
    std::size_t best = go(c + 1);
    for (auto id : cp.classes[c]) {
      const auto& e = cp.host.edge(id);
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      best = std::max(best, 1 + go(c + 1));
      used[e.u] = used[e.v] = false;
    }
    return best;
  };
  return go(0);
}

std::string fmt(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

int main() {
  std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(kSeed));

  criterion(1, kLimit1, [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    os << "eta(M(K_n,n)) vs floor(2n/3):";
    for (std::size_t n = 2; n <= 5; ++n) {
      const EtaValue e = eta_matching(complete_bipartite(n, n));
      const std::size_t expected = 2 * n / 3;
      const auto betti = matching_betti_mod_p(n);
      std::size_t oracle = 0;
      while (oracle < betti.size() && betti[oracle] == 0) ++oracle;  // first nonzero index k gives eta = k
      const bool match = !e.is_infinite() && e.value() == expected;
      ok = ok && match;
      os << " n=" << n << ": " << e.to_string() << (match ? "" : " != " + std::to_string(expected))
         << " [GF(p) oracle " << oracle << "]";
    }
    detail = os.str();
    return ok;
  });

  criterion(2, kLimit2, [](std::string& detail) {
    std::size_t checked = 0, violations = 0;
    auto check = [&](std::size_t n, std::uint64_t mask) {
      const Graph f = bipartite_from_mask(n, mask);
      const EtaValue e = eta_matching(f);
      const Rational bound = Rational(static_cast<long long>(f.size()), static_cast<long long>(n)) -
                             Rational(static_cast<long long>(n), 3) - Rational(1, 2);
      ++checked;
      if (!e.reaches(bound)) ++violations;
    };
    for (std::uint64_t mask = 0; mask < 16; ++mask) check(2, mask);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 2000; ++i) check(3, rng() & 0x1FF);
    detail = "eta(M(F)) >= |F|/n - n/3 - 1/2 on " + std::to_string(checked) + " subsets, " +
             std::to_string(violations) + " violations";
    return checked == 2016 && violations == 0;
  });

  criterion(3, kLimit3, [](std::string& detail) {
    std::size_t checked = 0, violations = 0;
    auto check = [&](const Graph& g) {
      const GameValue p = psi(g);
      const EtaValue e = eta_independence(g);
      ++checked;
      const bool ok = p.is_infinite() ? e.is_infinite() : e.reaches(p.value());
      if (!ok) ++violations;
    };
    for (std::uint64_t mask = 0; mask < 1024; ++mask) check(graph_from_mask(5, mask));
    std::mt19937_64 rng(kSeed + 3);
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = 6 + static_cast<std::size_t>(i % 2);
      check(graph_from_mask(n, rng() & ((1ULL << (n * (n - 1) / 2)) - 1)));
    }
    detail = "psi <= eta on " + std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations";
    return checked == 1524 && violations == 0;
  });

  criterion(4, kLimit4, [](std::string& detail) {
    std::size_t checked = 0, ig_violations = 0, nu_violations = 0, vacuous = 0;
    std::string first_nu;
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
        const Graph g = graph_from_mask(n, mask);
        const EtaValue e = eta_independence(g);
        const std::size_t nu = max_matching(g);
        ++checked;
        // nu/2 <= eta, i.e. nu <= 2 eta
        if (!e.is_infinite() && nu > 2 * e.value()) {
          if (nu_violations++ == 0)
            first_nu = "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + " nu=" + std::to_string(nu) +
                       " eta=" + e.to_string();
        }
        if (has_isolated_vertex(g)) {
          ++vacuous;  // an isolated vertex cannot be dominated
          continue;
        }
        if (!e.reaches(igamma(g))) ++ig_violations;
      }
    // Informational: the same bound read on line graphs, eta(M(H)) >= nu(H)/2.
    std::size_t line_checked = 0, line_violations = 0;
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
        const Graph h = graph_from_mask(n, mask);
        const EtaValue e = eta_matching(h);
        ++line_checked;
        if (!e.is_infinite() && max_matching(h) > 2 * e.value()) ++line_violations;
      }
    detail = "on " + std::to_string(checked) + " graphs: igamma violations " + std::to_string(ig_violations) +
             " (" + std::to_string(vacuous) + " vacuous), nu(G)/2 violations " + std::to_string(nu_violations) +
             (first_nu.empty() ? "" : " (first: " + first_nu + ")") + "; info: eta(M(H)) >= nu(H)/2 on " +
             std::to_string(line_checked) + " graphs H, " + std::to_string(line_violations) + " violations";
    return ig_violations == 0 && nu_violations == 0;
  });

  criterion(5, kLimit5, [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (std::size_t n = 2; n <= 4; ++n) {
      const Graph g = complete_bipartite(n, n);
      // k(K_n,n) = n - 2n^2/2n = 0, so the bound is 2n/3 - 1/2
      const Rational bound = Rational(2 * static_cast<long long>(n), 3) - Rational(1, 2);
      std::size_t playouts = 0, finite = 0, failed = 0;
      for_each_playout(g, [&](const GameTranscript& tr) {
        ++playouts;
        const AuditReport rep = audit_transcript(tr, g);
        bool good = rep.core_passed();
        if (!tr.infinite) {
          ++finite;
          good = good && Rational(static_cast<long long>(tr.explosions())) >= bound;
        }
        if (!good) ++failed;
      });
      ok = ok && failed == 0 && finite > 0;
      os << " K" << n << "," << n << ": " << playouts << " playouts (" << finite << " finite), " << failed
         << " failing;";
    }
    detail = "exhaustive adversary trees:" + os.str();
    return ok;
  });

  criterion(6, kLimit6, [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    std::size_t below_total = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
      // ceil(2n/3 - 1/2) = ceil((4n - 3)/6)
      const auto need = static_cast<std::size_t>(ceil_div(4 * static_cast<long long>(n) - 3, 6));
      std::size_t min_seen = n, below = 0;
      for (std::uint64_t i = 0; i < 500; ++i) {
        const auto inst = random_stein_instance(n, derive_seed(kSeed, i));
        const std::size_t size = max_rainbow_matching(inst.partition).size;
        min_seen = std::min(min_seen, size);
        if (size + 1 < n) ++below;
      }
      ok = ok && min_seen >= need;
      below_total += below;
      os << " n=" << n << " min " << min_seen << " (need " << need << ", below n-1: " << below << ");";
    }
    detail = "max rainbow matching over 500 instances each:" + os.str() + " steinknn count " +
             std::to_string(below_total);
    return ok;
  });

  criterion(7, kLimit7, [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    const std::size_t expected_d[] = {2, 9, 44};
    for (std::size_t n = 3; n <= 5; ++n) {
      const std::size_t d = count_derangements(n);
      ok = ok && d == expected_d[n - 3] && BigInt(d) == derangements(n);
      const Rational bound = Rational(static_cast<long long>(n)) *
                             (Rational(1) - Rational(static_cast<long long>(d), static_cast<long long>(factorial_small(n))));
      ok = ok && bound == stein_average_bound(n);
      Rational lowest = Rational(static_cast<long long>(n));
      for (std::uint64_t i = 0; i < 50; ++i) {
        const Rational avg = average_distinct_symbols(random_equi_array(n, derive_seed(kSeed + 7, i)));
        lowest = std::min(lowest, avg);
        ok = ok && avg >= bound;
      }
      os << " n=" << n << " D=" << d << " bound " << fmt(bound) << " min avg " << fmt(lowest) << ";";
    }
    detail = "average distinct symbols vs n(1 - D_n/n!):" + os.str();
    return ok;
  });

  criterion(8, kLimit8, [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    const auto jy = jin_yuster();
    const auto [brute_found, branches] = brute_full_isr(jy);
    const bool jy_ok = !brute_found && branches == 81 && !isr_exists(jy).first;
    ok = ok && jy_ok;
    os << "jin-yuster no ISR (" << branches << " branches)" << (jy_ok ? "" : " MISMATCH") << ";";
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto cp = multigraph_example(k);
      const std::size_t got = max_rainbow_matching(cp).size;
      const bool good = got < cp.class_count() && got == brute_rainbow(cp);
      ok = ok && good;
      os << " multigraph k=" << k << " max " << got << "/" << cp.class_count() << ";";
    }
    for (std::size_t n : {2, 4, 6}) {
      const auto r = max_partial_transversal(cyclic_latin(n));
      const bool good = r.size == n - 1 && !r.lower_bound_only;
      ok = ok && good;
      os << " cyclic n=" << n << " max " << r.size << ";";
    }
    os << " stein n=2..6 max";
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto r = max_partial_transversal(stein_array(n));
      ok = ok && r.size == n - 1 && !r.lower_bound_only;
      os << " " << r.size;
    }
    detail = os.str();
    return ok;
  });

  criterion(9, kLimit9, [](std::string& detail) {
    std::size_t checked = 0, mismatches = 0;
    auto compare = [&](const SymbolArray& a) {
      ++checked;
      if (max_partial_transversal(a).size != max_rainbow_matching(array_to_color_partition(a)).size) ++mismatches;
    };
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::size_t n = 2 + i % 4;
      compare(i % 2 ? random_latin(n, derive_seed(kSeed + 9, i)) : random_equi_array(n, derive_seed(kSeed + 9, i)));
    }
    for (std::size_t n : {2, 4, 6}) compare(cyclic_latin(n));
    for (std::size_t n = 1; n <= 6; ++n) compare(stein_array(n));
    detail = "transversal vs rainbow solver on " + std::to_string(checked) + " arrays, " +
             std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
  });

  criterion(10, kLimit10, [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (std::size_t n = 4; n <= 7; ++n) {
      const auto need = static_cast<std::size_t>(ceil_div(2 * static_cast<long long>(n), 3));
      std::size_t min_seen = n;
      for (std::uint64_t i = 0; i < 100; ++i) {
        const auto r = max_partial_transversal(random_latin(n, derive_seed(kSeed + 10, i)));
        min_seen = std::min(min_seen, r.size);
        ok = ok && !r.lower_bound_only;
      }
      ok = ok && min_seen >= need;
      os << " n=" << n << " min " << min_seen << " (need " << need << ");";
    }
    detail = "max partial transversal of 100 Latin squares each:" + os.str();
    return ok;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
