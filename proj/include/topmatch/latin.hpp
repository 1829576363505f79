#pragma once

#include <utility>
#include <vector>

#include "topmatch/rainbow.hpp"
#include "topmatch/symbol_array.hpp"

namespace topmatch {

/// (row, column) cells with distinct rows, columns and symbols.
using Transversal = std::vector<std::pair<std::size_t, std::size_t>>;

inline bool is_partial_transversal(const SymbolArray& a, const Transversal& t) {
  std::vector<bool> rows(a.order()), cols(a.order());
  std::vector<int> seen;
  for (auto [r, c] : t) {
    if (r >= a.order() || c >= a.order() || rows[r] || cols[c]) return false;
    rows[r] = cols[c] = true;
    for (int s : seen)
      if (s == a(r, c)) return false;
    seen.push_back(a(r, c));
  }
  return true;
}

struct TransversalResult {
  std::size_t size = 0;
  Transversal witness;
  /// The node budget ran out; size is then only a lower bound.
  bool lower_bound_only = false;
};

inline constexpr std::size_t kTransversalNodeBudget = 200'000'000;

namespace detail {

class TransversalSearch {
 public:
  TransversalSearch(const SymbolArray& a, std::size_t budget) : a_(a), n_(a.order()), budget_(budget) {
    const auto alphabet = a.alphabet();
    code_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_ * n_; ++i)
      code_[i] = static_cast<std::size_t>(
          std::lower_bound(alphabet.begin(), alphabet.end(), a.cells()[i]) - alphabet.begin());
    sym_used_.assign(alphabet.size(), false);
    col_used_.assign(n_, false);
    symbols_ = alphabet.size();
  }

  TransversalResult run() {
    try {
      dfs(0);
    } catch (const Exhausted&) {
      best_.lower_bound_only = true;
    }
    return best_;
  }

 private:
  struct Exhausted {};

  // Rows ascending; in each row try columns ascending, then skip the row.
  void dfs(std::size_t row) {
    if (++nodes_ > budget_) throw Exhausted{};
    if (chosen_.size() > best_.size || (!found_)) {
      best_.size = chosen_.size();
      best_.witness = chosen_;
      found_ = true;
    }
    if (best_.size == std::min(n_, symbols_)) return;
    const std::size_t cap = std::min(n_ - row, symbols_ - chosen_.size());
    if (chosen_.size() + cap <= best_.size) return;
    if (row == n_) return;
    for (std::size_t c = 0; c < n_; ++c) {
      const auto s = code_[row * n_ + c];
      if (col_used_[c] || sym_used_[s]) continue;
      col_used_[c] = sym_used_[s] = true;
      chosen_.emplace_back(row, c);
      dfs(row + 1);
      chosen_.pop_back();
      col_used_[c] = sym_used_[s] = false;
      if (best_.size == std::min(n_, symbols_)) return;
    }
    dfs(row + 1);
  }

  const SymbolArray& a_;
  std::size_t n_;
  std::size_t budget_;
  std::size_t symbols_ = 0;
  std::vector<std::size_t> code_;
  std::vector<bool> sym_used_, col_used_;
  Transversal chosen_;
  std::size_t nodes_ = 0;
  bool found_ = false;
  TransversalResult best_;
};

}  // namespace detail

/// Maximum partial transversal by backtracking over rows; the witness is
/// the lexicographically least maximum one.
inline TransversalResult max_partial_transversal(const SymbolArray& a,
                                                 std::size_t node_budget = kTransversalNodeBudget) {
  return detail::TransversalSearch(a, node_budget).run();
}

/// Cell (i, j) with symbol s becomes edge (i, j) of K_{n,n} in the colour
/// class of s.
inline ColorPartition array_to_color_partition(const SymbolArray& a) {
  return SteinInstance::from_colors(a).partition;
}

}  // namespace topmatch
