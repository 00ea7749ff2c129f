#ifndef HKDET_STAIRCASE_HPP
#define HKDET_STAIRCASE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hkdet/integer.hpp"
#include "hkdet/work_budget.hpp"

namespace hkdet {

// A row or column sum cap: a natural number or infinity. Infinity is the
// maximum of the order, so min with a natural number is always defined.
class Bound {
 public:
  constexpr Bound() noexcept : finite_(false), value_(0) {}  // infinity
  Bound(long long v) : finite_(true), value_(v) {
    if (v < 0) throw std::domain_error("Bound: finite bound must be non-negative");
  }

  static constexpr Bound infinity() noexcept { return Bound(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr long long value() const noexcept { return value_; }  // finite only

  // min{*this, x} for a natural number x.
  constexpr long long clamp(long long x) const noexcept {
    return finite_ ? std::min(value_, x) : x;
  }

  // True iff x violates the bound, i.e. x > *this. Never true for infinity.
  constexpr bool exceeded_by(long long x) const noexcept {
    return finite_ && x > value_;
  }

  friend constexpr bool operator==(const Bound& a, const Bound& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const Bound& a, const Bound& b) noexcept {
    if (!a.finite_) return false;       // infinity is maximal
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }

 private:
  bool finite_;
  long long value_;
};

// m x n matrix of non-negative exponents, row-major.
class ExponentMatrix {
 public:
  ExponentMatrix(long long rows, long long cols)
      : rows_(rows), cols_(cols), entries_(check_dims(rows, cols), 0) {}

  ExponentMatrix(std::initializer_list<std::initializer_list<long long>> init)
      : rows_(static_cast<long long>(init.size())), cols_(0) {
    for (const auto& row : init) cols_ = std::max<long long>(cols_, row.size());
    check_dims(rows_, cols_);
    entries_.assign(static_cast<std::size_t>(rows_ * cols_), 0);
    long long i = 0;
    for (const auto& row : init) {
      if (static_cast<long long>(row.size()) != cols_)
        throw std::domain_error("ExponentMatrix: ragged initializer");
      long long j = 0;
      for (long long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  long long row_count() const noexcept { return rows_; }
  long long col_count() const noexcept { return cols_; }

  long long& operator()(long long i, long long j) {
    return entries_[static_cast<std::size_t>(i * cols_ + j)];
  }
  long long operator()(long long i, long long j) const {
    return entries_[static_cast<std::size_t>(i * cols_ + j)];
  }

  void fill(long long v) { std::fill(entries_.begin(), entries_.end(), v); }

  friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  static std::size_t check_dims(long long rows, long long cols) {
    if (rows < 1 || cols < 1)
      throw std::domain_error("ExponentMatrix: dimensions must be positive");
    return static_cast<std::size_t>(rows * cols);
  }

  long long rows_;
  long long cols_;
  std::vector<long long> entries_;
};

// Row-sum and column-sum vectors of an exponent matrix.
struct Margins {
  std::vector<long long> rows;
  std::vector<long long> cols;

  friend bool operator==(const Margins& a, const Margins& b) {
    return a.rows == b.rows && a.cols == b.cols;
  }
};

// True iff no nonzero entry has a nonzero entry strictly northwest of it
// (strictly smaller row index AND strictly smaller column index); the
// nonzero positions then form a southwest-northeast chain.
inline bool is_staircase(const ExponentMatrix& mat) {
  const long long m = mat.row_count();
  const long long n = mat.col_count();
  long long min_top = std::numeric_limits<long long>::max();
  for (long long j = 0; j < n; ++j) {
    long long top = -1;
    long long bottom = -1;
    for (long long i = 0; i < m; ++i) {
      if (mat(i, j) > 0) {
        if (top < 0) top = i;
        bottom = i;
      }
    }
    if (bottom < 0) continue;  // empty column
    if (min_top < bottom) return false;
    min_top = std::min(min_top, top);
  }
  return true;
}

// Mirror-image convention: no nonzero strictly northeast of a nonzero.
// Used only to validate that counts do not depend on the orientation.
inline bool is_staircase_mirror(const ExponentMatrix& mat) {
  const long long m = mat.row_count();
  const long long n = mat.col_count();
  long long min_top = std::numeric_limits<long long>::max();
  for (long long j = n - 1; j >= 0; --j) {
    long long top = -1;
    long long bottom = -1;
    for (long long i = 0; i < m; ++i) {
      if (mat(i, j) > 0) {
        if (top < 0) top = i;
        bottom = i;
      }
    }
    if (bottom < 0) continue;
    if (min_top < bottom) return false;
    min_top = std::min(min_top, top);
  }
  return true;
}

namespace detail {

// Southwest corner rule: repeatedly set the bottom-left entry of the live
// submatrix to min{remaining column total, remaining row total} and drop
// whichever is exhausted (the column when both are). Writes into `out`,
// which must already have the right shape. Requires equal totals.
inline void corner_rule_fill(const std::vector<long long>& rows,
                             const std::vector<long long>& cols,
                             ExponentMatrix& out) {
  out.fill(0);
  std::vector<long long> row_rem(rows);
  std::vector<long long> col_rem(cols);
  long long i = out.row_count() - 1;
  long long j = 0;
  while (i >= 0 && j < out.col_count()) {
    const long long p = std::min(col_rem[j], row_rem[i]);
    out(i, j) = p;
    col_rem[j] -= p;
    row_rem[i] -= p;
    if (col_rem[j] == 0) {
      ++j;  // column exhausted (ties fall here; the row carries remainder 0)
    } else {
      --i;  // row exhausted
    }
  }
}

}  // namespace detail

// The unique staircase matrix with the given margins. Margins with unequal
// totals have no matrix at all and are rejected.
inline ExponentMatrix margins_to_matrix(const Margins& margins) {
  const long long m = static_cast<long long>(margins.rows.size());
  const long long n = static_cast<long long>(margins.cols.size());
  if (m < 1 || n < 1)
    throw std::domain_error("margins_to_matrix: dimensions must be positive");
  for (long long r : margins.rows)
    if (r < 0) throw std::domain_error("margins_to_matrix: negative row total");
  for (long long c : margins.cols)
    if (c < 0) throw std::domain_error("margins_to_matrix: negative column total");
  const long long row_total = std::accumulate(margins.rows.begin(), margins.rows.end(), 0LL);
  const long long col_total = std::accumulate(margins.cols.begin(), margins.cols.end(), 0LL);
  if (row_total != col_total)
    throw std::domain_error("margins_to_matrix: row and column totals differ");
  ExponentMatrix mat(m, n);
  detail::corner_rule_fill(margins.rows, margins.cols, mat);
  return mat;
}

inline Margins matrix_to_margins(const ExponentMatrix& mat) {
  Margins margins;
  margins.rows.assign(static_cast<std::size_t>(mat.row_count()), 0);
  margins.cols.assign(static_cast<std::size_t>(mat.col_count()), 0);
  for (long long i = 0; i < mat.row_count(); ++i) {
    for (long long j = 0; j < mat.col_count(); ++j) {
      margins.rows[static_cast<std::size_t>(i)] += mat(i, j);
      margins.cols[static_cast<std::size_t>(j)] += mat(i, j);
    }
  }
  return margins;
}

enum class CountKind { kNType, kMType };

// Full parameterization of one staircase-monomial count.
//
// N-type: row sums <= row_bounds[i], column sums <= col_bounds[j], and
//         (all row sums < q  OR  all column sums < q).
// M-type: row sums <= min(row_bounds[i], q-1) and some column sum
//         exceeds its col_bounds[j].
struct CountSpec {
  long long m = 1;
  long long n = 1;
  long long q = 0;
  std::vector<Bound> row_bounds;
  std::vector<Bound> col_bounds;
  CountKind kind = CountKind::kNType;
};

inline void validate(const CountSpec& spec) {
  if (spec.m < 0) throw std::domain_error("CountSpec: m must be non-negative");
  if (spec.n < 1) throw std::domain_error("CountSpec: n must be positive");
  if (spec.q < 0) throw std::domain_error("CountSpec: q must be non-negative");
  if (spec.m == 0 && spec.kind != CountKind::kNType)
    throw std::domain_error("CountSpec: m = 0 is only defined for the N-type count");
  if (static_cast<long long>(spec.row_bounds.size()) != spec.m)
    throw std::domain_error("CountSpec: row bound vector length must equal m");
  if (static_cast<long long>(spec.col_bounds.size()) != spec.n)
    throw std::domain_error("CountSpec: column bound vector length must equal n");
}

namespace detail {

// Counts pairs (u, v) with 0 <= u_i <= ucap_i, 0 <= v_j <= vcap_j,
// sum(v) == sum(u), and pred(u, v). One budget step per visited node.
// Because equal-total margins determine a unique staircase matrix, counting
// margin pairs counts staircase monomials.
template <typename Pred>
Int count_margin_pairs(const std::vector<long long>& ucap,
                       const std::vector<long long>& vcap, WorkBudget& budget,
                       Pred&& pred) {
  for (long long c : ucap)
    if (c < 0) return 0;
  for (long long c : vcap)
    if (c < 0) return 0;

  std::vector<long long> u(ucap.size(), 0);
  std::vector<long long> v(vcap.size(), 0);
  std::uint64_t count = 0;

  auto fill_v = [&](auto&& self, std::size_t idx, long long remaining) -> void {
    budget.charge();
    if (idx + 1 == v.size()) {
      if (remaining <= vcap[idx]) {
        v[idx] = remaining;
        if (pred(u, v)) ++count;
      }
      return;
    }
    const long long hi = std::min(vcap[idx], remaining);
    for (long long x = 0; x <= hi; ++x) {
      v[idx] = x;
      self(self, idx + 1, remaining - x);
    }
  };

  auto fill_u = [&](auto&& self, std::size_t idx, long long total) -> void {
    budget.charge();
    if (idx == u.size()) {
      fill_v(fill_v, 0, total);
      return;
    }
    for (long long x = 0; x <= ucap[idx]; ++x) {
      u[idx] = x;
      self(self, idx + 1, total + x);
    }
  };

  fill_u(fill_u, 0, 0);
  return Int(count);
}

inline long long sum_caps(const std::vector<long long>& caps) {
  return std::accumulate(caps.begin(), caps.end(), 0LL);
}

inline std::vector<long long> clamp_all(const std::vector<Bound>& bounds,
                                        long long cap) {
  std::vector<long long> out(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i) out[i] = bounds[i].clamp(cap);
  return out;
}

}  // namespace detail

// Primary enumeration oracle, margin-based. Enumerates margin vectors within
// the finite caps implied by the q-conditions and counts one staircase
// monomial per equal-total pair (the corner-rule bijection). Cost is roughly
// the product of the margin ranges.
inline Int count_oracle(const CountSpec& spec, WorkBudget& budget) {
  validate(spec);

  if (spec.kind == CountKind::kNType) {
    if (spec.m == 0) return 1;  // the empty monomial; conventional value
    if (spec.q == 0) return 0;  // no sum can be < 0

    const auto accept = [](const std::vector<long long>&,
                           const std::vector<long long>&) { return true; };

    // Split the disjunction: |rows<q| + |cols<q| - |both|. Each branch has
    // finite margin caps, even when the requested bounds are infinite.
    const auto row_small = detail::clamp_all(spec.row_bounds, spec.q - 1);
    const auto col_small = detail::clamp_all(spec.col_bounds, spec.q - 1);
    const auto col_free =
        detail::clamp_all(spec.col_bounds, detail::sum_caps(row_small));
    const auto row_free =
        detail::clamp_all(spec.row_bounds, detail::sum_caps(col_small));

    const Int rows_lt_q = detail::count_margin_pairs(row_small, col_free, budget, accept);
    const Int cols_lt_q = detail::count_margin_pairs(col_small, row_free, budget, accept);
    const Int both = detail::count_margin_pairs(row_small, col_small, budget, accept);
    return rows_lt_q + cols_lt_q - both;
  }

  // M-type. Row caps min(bound, q-1) are always finite for q >= 1, and the
  // column sums are bounded by the total, so enumeration is finite.
  if (spec.q == 0) return 0;  // row cap -1 is infeasible
  const auto row_caps = detail::clamp_all(spec.row_bounds, spec.q - 1);
  const long long total_cap = detail::sum_caps(row_caps);
  const std::vector<long long> col_caps(static_cast<std::size_t>(spec.n), total_cap);
  const auto overflow_somewhere = [&](const std::vector<long long>&,
                                      const std::vector<long long>& cols) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (spec.col_bounds[j].exceeded_by(cols[j])) return true;
    return false;
  };
  return detail::count_margin_pairs(row_caps, col_caps, budget, overflow_somewhere);
}

inline Int count_oracle(const CountSpec& spec) {
  WorkBudget budget;
  return count_oracle(spec, budget);
}

namespace detail {

// Enumerates every matrix with entries in per-cell boxes, filters with the
// supplied staircase predicate and the kind condition against the given
// column bounds. Shared by the matrix oracle and its mirror variant.
template <typename StairPred>
Int count_matrices(const CountSpec& spec, const std::vector<Bound>& col_bounds,
                   StairPred&& stair, WorkBudget& budget) {
  if (spec.kind == CountKind::kNType && spec.m == 0) return 1;
  if (spec.q == 0) return 0;

  const long long m = spec.m;
  const long long n = spec.n;
  std::vector<long long> row_caps(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i)
    row_caps[static_cast<std::size_t>(i)] = spec.row_bounds[static_cast<std::size_t>(i)].clamp(spec.q - 1);

  // Per-cell caps: every counted matrix has all entries <= q-1 (each entry
  // is dominated by a row or column sum that the conditions force below q).
  std::vector<long long> cell_cap(static_cast<std::size_t>(m * n));
  for (long long i = 0; i < m; ++i) {
    for (long long j = 0; j < n; ++j) {
      long long cap = spec.q - 1;
      cap = spec.row_bounds[static_cast<std::size_t>(i)].clamp(cap);
      if (spec.kind == CountKind::kNType)
        cap = col_bounds[static_cast<std::size_t>(j)].clamp(cap);
      cell_cap[static_cast<std::size_t>(i * n + j)] = cap;
    }
  }

  ExponentMatrix mat(m, n);
  std::vector<long long> row_sum(static_cast<std::size_t>(m), 0);
  std::vector<long long> col_sum(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;

  const auto passes = [&]() {
    for (long long i = 0; i < m; ++i) row_sum[static_cast<std::size_t>(i)] = 0;
    for (long long j = 0; j < n; ++j) col_sum[static_cast<std::size_t>(j)] = 0;
    for (long long i = 0; i < m; ++i) {
      for (long long j = 0; j < n; ++j) {
        row_sum[static_cast<std::size_t>(i)] += mat(i, j);
        col_sum[static_cast<std::size_t>(j)] += mat(i, j);
      }
    }
    if (spec.kind == CountKind::kNType) {
      for (long long i = 0; i < m; ++i)
        if (spec.row_bounds[static_cast<std::size_t>(i)].exceeded_by(row_sum[static_cast<std::size_t>(i)]))
          return false;
      for (long long j = 0; j < n; ++j)
        if (col_bounds[static_cast<std::size_t>(j)].exceeded_by(col_sum[static_cast<std::size_t>(j)]))
          return false;
      const bool rows_small = std::all_of(row_sum.begin(), row_sum.end(),
                                          [&](long long s) { return s < spec.q; });
      const bool cols_small = std::all_of(col_sum.begin(), col_sum.end(),
                                          [&](long long s) { return s < spec.q; });
      if (!rows_small && !cols_small) return false;
    } else {
      for (long long i = 0; i < m; ++i)
        if (row_sum[static_cast<std::size_t>(i)] > row_caps[static_cast<std::size_t>(i)])
          return false;
      bool overflow = false;
      for (long long j = 0; j < n && !overflow; ++j)
        overflow = col_bounds[static_cast<std::size_t>(j)].exceeded_by(col_sum[static_cast<std::size_t>(j)]);
      if (!overflow) return false;
    }
    return stair(mat);
  };

  // Odometer over all cells.
  while (true) {
    budget.charge();
    if (passes()) ++count;
    long long cell = 0;
    const long long cells = m * n;
    for (; cell < cells; ++cell) {
      const long long i = cell / n;
      const long long j = cell % n;
      if (mat(i, j) < cell_cap[static_cast<std::size_t>(cell)]) {
        ++mat(i, j);
        break;
      }
      mat(i, j) = 0;
    }
    if (cell == cells) break;
  }
  return Int(count);
}

}  // namespace detail

// Secondary oracle: direct enumeration of exponent matrices filtered by
// is_staircase. Cost grows like q^(m n); used to cross-check the margin
// oracle and the corner-rule bijection.
inline Int count_oracle_matrix(const CountSpec& spec, WorkBudget& budget) {
  validate(spec);
  return detail::count_matrices(spec, spec.col_bounds, is_staircase, budget);
}

inline Int count_oracle_matrix(const CountSpec& spec) {
  WorkBudget budget;
  return count_oracle_matrix(spec, budget);
}

// Same contract evaluated under the mirrored staircase convention with the
// column bounds reversed. Equal to count_oracle on every spec whose column
// bounds are constant; validates that the adopted orientation is
// count-neutral. Matrix-based on purpose: a margin-based count would be
// orientation-blind and check nothing.
inline Int mirror_count_oracle(const CountSpec& spec, WorkBudget& budget) {
  validate(spec);
  std::vector<Bound> reversed(spec.col_bounds.rbegin(), spec.col_bounds.rend());
  return detail::count_matrices(spec, reversed, is_staircase_mirror, budget);
}

inline Int mirror_count_oracle(const CountSpec& spec) {
  WorkBudget budget;
  return mirror_count_oracle(spec, budget);
}

}  // namespace hkdet

#endif  // HKDET_STAIRCASE_HPP
