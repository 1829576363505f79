#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topmatch/complex.hpp"

namespace topmatch {

using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Signed incidence matrix of the augmented chain complex, mapping
/// dim-faces to (dim-1)-faces. Rows for dim = 0 are the single empty face.
struct BoundaryMatrix {
  int dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseColumn> columns;  // entries sorted by row

  std::int64_t at(std::size_t r, std::size_t c) const {
    for (auto [row, value] : columns.at(c))
      if (row == r) return value;
    return 0;
  }

  /// Sparse triplets "row col value", one per line, 0-based.
  void write_triplets(std::ostream& os) const {
    for (std::size_t c = 0; c < cols; ++c)
      for (auto [row, value] : columns[c]) os << row << ' ' << c << ' ' << value << '\n';
  }
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int j) {
  if (j < 0 || j > c.top_dimension() + 1)
    throw InputError("boundary_matrix: dimension " + std::to_string(j) + " out of range");
  if (c.truncated() && j > c.top_dimension())
    throw InputError("boundary_matrix: dimension " + std::to_string(j) + " was not materialized");
  BoundaryMatrix m;
  m.dim = j;
  m.rows = c.face_count(j - 1);
  m.cols = c.face_count(j);
  m.columns.resize(m.cols);
  const auto& level = c.faces(j);
  for (std::size_t col = 0; col < level.size(); ++col) {
    const Face& f = level[col];
    auto& out = m.columns[col];
    Face sub(f.size() - 1);
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      std::copy(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(skip), sub.begin());
      std::copy(f.begin() + static_cast<std::ptrdiff_t>(skip) + 1, f.end(),
                sub.begin() + static_cast<std::ptrdiff_t>(skip));
      const auto row = c.index_of(sub);
      if (!row) throw CorruptionError("complex is not closed downward");
      out.emplace_back(*row, skip % 2 == 0 ? 1 : -1);
    }
    std::sort(out.begin(), out.end());
  }
  return m;
}

namespace detail {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

using boost::multiprecision::cpp_int;
inline cpp_int mul(const cpp_int& a, const cpp_int& b) { return a * b; }
inline cpp_int sub(const cpp_int& a, const cpp_int& b) { return a - b; }
inline cpp_int abs_gcd(const cpp_int& a, const cpp_int& b) { return boost::multiprecision::gcd(a, b); }

/// Rank over the rationals by fraction-free column reduction. A column's
/// pivot is its largest row index; a clash with an earlier pivot is cleared
/// by col := a*col - b*pivot_col, then the column is divided by its content.
/// Columns are processed sparsest first, ties by index.
template <class Int>
std::size_t reduce_rank(const std::vector<SparseColumn>& input, std::size_t rows) {
  using Col = std::vector<std::pair<std::size_t, Int>>;
  std::vector<std::size_t> order(input.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return input[a].size() < input[b].size(); });
  std::vector<Col> reduced;
  reduced.reserve(input.size());
  std::vector<std::ptrdiff_t> owner(rows, -1);
  Col scratch;
  for (std::size_t idx : order) {
    Col col;
    col.reserve(input[idx].size());
    for (auto [r, v] : input[idx]) col.emplace_back(r, Int(v));
    while (!col.empty()) {
      const std::size_t low = col.back().first;
      const auto p = owner[low];
      if (p < 0) break;
      const Col& piv = reduced[static_cast<std::size_t>(p)];
      const Int a = piv.back().second;
      const Int b = col.back().second;
      scratch.clear();
      std::size_t i = 0, k = 0;
      while (i < col.size() || k < piv.size()) {
        if (k == piv.size() || (i < col.size() && col[i].first < piv[k].first)) {
          scratch.emplace_back(col[i].first, mul(a, col[i].second));
          ++i;
        } else if (i == col.size() || piv[k].first < col[i].first) {
          scratch.emplace_back(piv[k].first, sub(Int(0), mul(b, piv[k].second)));
          ++k;
        } else {
          Int v = sub(mul(a, col[i].second), mul(b, piv[k].second));
          if (v != 0) scratch.emplace_back(col[i].first, std::move(v));
          ++i;
          ++k;
        }
      }
      Int g = 0;
      for (const auto& e : scratch) g = abs_gcd(g, e.second);
      if (g > 1)
        for (auto& e : scratch) e.second /= g;
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[col.back().first] = static_cast<std::ptrdiff_t>(reduced.size());
      reduced.push_back(std::move(col));
    }
  }
  return reduced.size();
}

}  // namespace detail

/// Exact rank over Q. Runs in 64-bit integers and falls back to arbitrary
/// precision if an intermediate product overflows.
inline std::size_t rank(const BoundaryMatrix& m) {
  try {
    return detail::reduce_rank<std::int64_t>(m.columns, m.rows);
  } catch (const detail::Overflow&) {
    return detail::reduce_rank<boost::multiprecision::cpp_int>(m.columns, m.rows);
  }
}

/// Rank cache for one complex; rank of the boundary map out of dimension j.
class ChainRanks {
 public:
  explicit ChainRanks(const SimplicialComplex& c) : c_(c) {}

  std::size_t rank_of(int j) {
    if (j < 0 || j > c_.top_dimension()) return 0;  // ∂_{-1} = 0; no faces above top
    const auto k = static_cast<std::size_t>(j);
    if (ranks_.size() <= k) ranks_.resize(k + 1);
    if (!ranks_[k]) ranks_[k] = rank(boundary_matrix(c_, j));
    return *ranks_[k];
  }

  std::size_t betti(int j) {
    if (j < -1) throw InputError("reduced_betti: dimension must be at least -1");
    if (c_.truncated() && j + 1 > c_.top_dimension())
      throw InputError("reduced_betti: faces of dimension " + std::to_string(j + 1) + " were not materialized");
    const std::size_t f = c_.face_count(j);
    return f - rank_of(j) - rank_of(j + 1);
  }

 private:
  const SimplicialComplex& c_;
  std::vector<std::optional<std::size_t>> ranks_;
};

/// dim H̃_j(C; Q) of the augmented chain complex.
inline std::size_t reduced_betti(const SimplicialComplex& c, int j) { return ChainRanks(c).betti(j); }

/// Homological connectivity value: a natural number, infinity, or (under a
/// cap) the lower bound "at least cap".
class EtaValue {
 public:
  enum class Kind { Finite, Infinite, AtLeast };

  static EtaValue finite(std::size_t v) { return EtaValue(Kind::Finite, v); }
  static EtaValue infinite() { return EtaValue(Kind::Infinite, 0); }
  static EtaValue at_least(std::size_t v) { return EtaValue(Kind::AtLeast, v); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_lower_bound() const { return kind_ == Kind::AtLeast; }
  /// Exact value (Finite) or the proven lower bound (AtLeast).
  std::size_t value() const { return value_; }

  /// Whether eta >= k is established.
  bool reaches(std::size_t k) const { return kind_ == Kind::Infinite || value_ >= k; }
  /// Whether eta >= q is established for a rational threshold.
  bool reaches(const Rational& q) const {
    return kind_ == Kind::Infinite || Rational(static_cast<long long>(value_)) >= q;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Finite: return std::to_string(value_);
      case Kind::Infinite: return "inf";
      case Kind::AtLeast: return ">=" + std::to_string(value_);
    }
    return {};
  }

  friend bool operator==(const EtaValue&, const EtaValue&) = default;

 private:
  EtaValue(Kind k, std::size_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::size_t value_;
};

/// min{ j >= -1 : H̃_j != 0 } + 1, infinity if every H̃_j vanishes, 0 for
/// the void complex. With a cap, stops as soon as H̃_j = 0 is verified for
/// all j < cap - 1 and returns "at least cap".
inline EtaValue eta(const SimplicialComplex& c, std::optional<std::size_t> cap = std::nullopt) {
  if (c.is_void()) return EtaValue::finite(0);
  ChainRanks ranks(c);
  for (int j = -1;; ++j) {
    if (cap && j >= static_cast<int>(*cap) - 1) return EtaValue::at_least(*cap);
    if (j > c.top_dimension()) {
      if (c.truncated()) throw InputError("eta: complex truncated below the dimension needed");
      return EtaValue::infinite();
    }
    if (ranks.betti(j) != 0) return EtaValue::finite(static_cast<std::size_t>(j + 1));
  }
}

/// eta of the independence complex of g, materializing only the faces the
/// cap requires.
inline EtaValue eta_independence(const Graph& g, std::optional<std::size_t> cap = std::nullopt,
                                 std::size_t face_budget = kDefaultFaceBudget) {
  std::optional<int> max_dim;
  if (cap) max_dim = static_cast<int>(*cap) - 1;
  return eta(independence_complex(g, max_dim, face_budget), cap);
}

inline EtaValue eta_matching(const Graph& h, std::optional<std::size_t> cap = std::nullopt,
                             std::size_t face_budget = kDefaultFaceBudget) {
  require_simple(h, "eta_matching");
  return eta_independence(line_graph(h), cap, face_budget);
}

}  // namespace topmatch
