#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "topmatch/errors.hpp"

namespace topmatch {

/// n-by-n array of integer symbols, row-major.
class SymbolArray {
 public:
  SymbolArray() = default;
  explicit SymbolArray(std::size_t n, int fill = 0) : n_(n), cells_(n * n, fill) {}
  SymbolArray(std::size_t n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) throw InputError("symbol array must have n*n cells");
  }
  static SymbolArray from_rows(const std::vector<std::vector<int>>& rows) {
    SymbolArray a(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("symbol array must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
    }
    return a;
  }

  std::size_t order() const { return n_; }
  int& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  int operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  const std::vector<int>& cells() const { return cells_; }
  std::vector<int> row(std::size_t i) const {
    return {cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
            cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
  }

  /// Distinct symbols, ascending.
  std::vector<int> alphabet() const {
    std::vector<int> a = cells_;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  }

  friend bool operator==(const SymbolArray&, const SymbolArray&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> cells_;
};

/// Every row and column is a permutation of {0, ..., n-1}.
inline bool is_latin(const SymbolArray& a) {
  const auto n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n, false), in_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const int r = a(i, j), c = a(j, i);
      if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= n || static_cast<std::size_t>(c) >= n) return false;
      if (in_row[static_cast<std::size_t>(r)] || in_col[static_cast<std::size_t>(c)]) return false;
      in_row[static_cast<std::size_t>(r)] = in_col[static_cast<std::size_t>(c)] = true;
    }
  }
  return true;
}

/// Every symbol occurs in exactly n cells.
inline bool is_equi_n(const SymbolArray& a) {
  std::map<int, std::size_t> count;
  for (int s : a.cells()) ++count[s];
  return std::all_of(count.begin(), count.end(), [&](const auto& kv) { return kv.second == a.order(); });
}

/// L(i, j) = i + j mod n.
inline SymbolArray cyclic_latin(std::size_t n) {
  if (n == 0) throw InputError("order must be at least 1");
  SymbolArray a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<int>((i + j) % n);
  return a;
}

/// A(i, j) = i for j < n-1 and A(i, n-1) = i+1 mod n (0-based columns):
/// each symbol fills n cells, yet no full transversal exists for n > 1.
inline SymbolArray stein_array(std::size_t n) {
  if (n == 0) throw InputError("order must be at least 1");
  SymbolArray a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<int>(j + 1 < n ? i : (i + 1) % n);
  return a;
}

/// Seeded shuffle of the multiset {each of 0..n-1 exactly n times}.
inline SymbolArray random_equi_array(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("order must be at least 1");
  std::vector<int> cells;
  for (std::size_t s = 0; s < n; ++s) cells.insert(cells.end(), n, static_cast<int>(s));
  std::mt19937_64 rng(seed);
  std::shuffle(cells.begin(), cells.end(), rng);
  return SymbolArray(n, std::move(cells));
}

/// Seeded row, column and symbol permutation of cyclic_latin(n). Only the
/// isotopy class of the cyclic square is reachable, so this is not a
/// uniform sampler of Latin squares.
inline SymbolArray random_latin(std::size_t n, std::uint64_t seed) {
  const SymbolArray base = cyclic_latin(n);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> rows(n), cols(n);
  std::vector<int> syms(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i, syms[i] = static_cast<int>(i);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(syms.begin(), syms.end(), rng);
  SymbolArray a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = syms[static_cast<std::size_t>(base(rows[i], cols[j]))];
  return a;
}

/// Text format: first line n, then n lines of n space-separated integers.
inline SymbolArray read_array_text(std::istream& is) {
  long long n = -1;
  if (!(is >> n) || n < 0) throw InputError("array text: expected the order n on the first line");
  SymbolArray a(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (!(is >> a(i, j))) throw InputError("array text: expected n*n integers");
  return a;
}

inline void write_array_text(std::ostream& os, const SymbolArray& a) {
  os << a.order() << '\n';
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
}

}  // namespace topmatch
