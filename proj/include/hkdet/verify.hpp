#ifndef HKDET_VERIFY_HPP
#define HKDET_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hkdet/closed_forms.hpp"
#include "hkdet/compositions.hpp"
#include "hkdet/integer.hpp"
#include "hkdet/polynomial.hpp"
#include "hkdet/staircase.hpp"
#include "hkdet/work_budget.hpp"

namespace hkdet {

// Outcome of one verification suite. `failure` holds the first
// counterexample, with every parameter and both values, and is empty iff
// the suite passed. `checks` counts individual identities tested.
struct CheckReport {
  std::string suite;
  std::uint64_t checks = 0;
  bool passed = true;
  std::string failure;
};

namespace detail {

inline void record_failure(CheckReport& report, const std::string& message) {
  if (report.passed) {
    report.passed = false;
    report.failure = message;
  }
}

inline void merge(CheckReport& into, const CheckReport& part) {
  into.checks += part.checks;
  if (!part.passed) record_failure(into, part.failure);
}

inline std::string s(const Int& v) { return v.str(); }

// Rethrows a budget error with the grid point that hit it named, so the
// caller can report which enumeration was too large.
[[noreturn]] inline void rethrow_budget(const WorkBudgetError& e,
                                        const std::string& point) {
  throw WorkBudgetError(e.limit(), point);
}

inline std::vector<Bound> constant_bounds(std::size_t len, Bound b) {
  return std::vector<Bound>(len, b);
}

}  // namespace detail

// One grid point of the closed-form vs enumeration comparison: the
// column-bounded count, the overflow count, their disjoint-union total,
// and the oracle-level identity N + M = total.
inline CheckReport check_oracle_point(long long m, long long n, long long q,
                                      std::uint64_t budget_limit) {
  CheckReport report{"oracle"};
  const std::string point = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " q=" + std::to_string(q);
  CountSpec nq_spec{m, n, q,
                    detail::constant_bounds(static_cast<std::size_t>(m), Bound::infinity()),
                    detail::constant_bounds(static_cast<std::size_t>(n), Bound(q - 1 >= 0 ? q - 1 : 0)),
                    CountKind::kNType};
  CountSpec mq_spec{m, n, q,
                    detail::constant_bounds(static_cast<std::size_t>(m), Bound(q - 1 >= 0 ? q - 1 : 0)),
                    detail::constant_bounds(static_cast<std::size_t>(n), Bound(q - 1 >= 0 ? q - 1 : 0)),
                    CountKind::kMType};
  CountSpec hk_spec{m, n, q,
                    detail::constant_bounds(static_cast<std::size_t>(m), Bound::infinity()),
                    detail::constant_bounds(static_cast<std::size_t>(n), Bound::infinity()),
                    CountKind::kNType};
  Int oracle_nq, oracle_mq, oracle_hk;
  try {
    WorkBudget b1(budget_limit);
    oracle_nq = count_oracle(nq_spec, b1);
    WorkBudget b2(budget_limit);
    oracle_mq = count_oracle(mq_spec, b2);
    WorkBudget b3(budget_limit);
    oracle_hk = count_oracle(hk_spec, b3);
  } catch (const WorkBudgetError& e) {
    detail::rethrow_budget(e, "oracle suite at " + point);
  }

  const Int closed_nq = nq_col_bounded_closed(m, n, q);
  const Int closed_mq = mq_closed(m, n, q);
  const Int closed_hk = hk_closed(m, n, q);

  ++report.checks;
  if (closed_nq != oracle_nq)
    detail::record_failure(report, point + ": column-bounded closed form = " +
                                       detail::s(closed_nq) + " but enumeration = " +
                                       detail::s(oracle_nq));
  ++report.checks;
  if (closed_mq != oracle_mq)
    detail::record_failure(report, point + ": overflow closed form = " +
                                       detail::s(closed_mq) + " but enumeration = " +
                                       detail::s(oracle_mq));
  ++report.checks;
  if (closed_hk != oracle_hk)
    detail::record_failure(report, point + ": total closed form = " +
                                       detail::s(closed_hk) + " but enumeration = " +
                                       detail::s(oracle_hk));
  ++report.checks;
  if (oracle_nq + oracle_mq != oracle_hk)
    detail::record_failure(report, point + ": enumerated split " + detail::s(oracle_nq) +
                                       " + " + detail::s(oracle_mq) +
                                       " != enumerated total " + detail::s(oracle_hk));
  ++report.checks;
  if (mq_closed_from_zero(m, n, q) != closed_mq)
    detail::record_failure(report, point + ": extending the overflow sum to j=0 changed it: " +
                                       detail::s(mq_closed_from_zero(m, n, q)) + " vs " +
                                       detail::s(closed_mq));
  return report;
}

inline CheckReport check_oracle(long long max_m, long long max_n, long long max_q,
                                std::uint64_t budget_limit = WorkBudget::kDefaultLimit) {
  CheckReport report{"oracle"};
  for (long long m = 1; m <= max_m; ++m)
    for (long long n = 1; n <= max_n; ++n)
      for (long long q = 1; q <= max_q; ++q)
        detail::merge(report, check_oracle_point(m, n, q, budget_limit));
  return report;
}

// Identity between the alternating-sum and polynomial sides of the two-row
// column-bounded count, plus the tuple interpretation on a small subgrid.
inline CheckReport check_corollary(long long max_n, long long max_q) {
  CheckReport report{"corollary"};
  for (long long n = 1; n <= max_n; ++n) {
    for (long long q = 0; q <= max_q; ++q) {
      const Int lhs = corollary_lhs(n, q);
      const Int rhs = corollary_rhs(n, q);
      ++report.checks;
      if (lhs != rhs)
        detail::record_failure(report, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                           ": alternating sum = " + detail::s(lhs) +
                                           " but polynomial = " + detail::s(rhs));
    }
  }
  for (long long n = 1; n <= std::min<long long>(max_n, 4); ++n) {
    for (long long q = 1; q <= std::min<long long>(max_q, 5); ++q) {
      const Int lhs = corollary_lhs(n, q);
      const Int tuples = count_bounded_compositions({n, n + 1, n * (q - 1), q});
      ++report.checks;
      if (lhs != tuples)
        detail::record_failure(report, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                           ": alternating sum = " + detail::s(lhs) +
                                           " but tuple count = " + detail::s(tuples));
    }
  }
  return report;
}

// Agreement of the general two-summand formula at m = 2 with the
// independently published reference form.
inline CheckReport check_m2(long long max_n, long long max_q) {
  CheckReport report{"m2"};
  for (long long n = 1; n <= max_n; ++n) {
    for (long long q = 0; q <= max_q; ++q) {
      const Int general = hk_closed(2, n, q);
      const Int reference = hk_m2_reference(n, q);
      ++report.checks;
      if (general != reference)
        detail::record_failure(report, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                           ": hk_closed(2,n,q) = " + detail::s(general) +
                                           " but reference form = " + detail::s(reference));
    }
  }
  return report;
}

// Transpose symmetry of the total count (not visible in the formula) and
// the degenerate closed-form identities.
inline CheckReport check_symmetry(long long max_m, long long max_n, long long max_q) {
  CheckReport report{"symmetry"};
  for (long long m = 1; m <= max_m; ++m) {
    for (long long n = m; n <= max_n; ++n) {
      for (long long q = 1; q <= max_q; ++q) {
        const Int a = hk_closed(m, n, q);
        const Int b = hk_closed(n, m, q);
        ++report.checks;
        if (a != b)
          detail::record_failure(report, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                             " q=" + std::to_string(q) + ": hk(m,n,q) = " +
                                             detail::s(a) + " but hk(n,m,q) = " + detail::s(b));
      }
    }
  }
  for (long long m = 1; m <= max_m; ++m) {
    for (long long n = 1; n <= max_n; ++n) {
      ++report.checks;
      if (hk_closed(m, n, 1) != 1)
        detail::record_failure(report, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                           " q=1: hk = " + detail::s(hk_closed(m, n, 1)) +
                                           " but quotient by all variables has length 1");
    }
  }
  for (long long n = 1; n <= max_n; ++n) {
    for (long long q = 1; q <= max_q; ++q) {
      Int power = 1;
      for (long long k = 0; k < n; ++k) power *= q;
      ++report.checks;
      if (hk_closed(1, n, q) != power)
        detail::record_failure(report, "m=1 n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                           ": hk = " + detail::s(hk_closed(1, n, q)) +
                                           " but q^n = " + detail::s(power));
      ++report.checks;
      if (hk_closed(n, 1, q) != power)
        detail::record_failure(report, "m=" + std::to_string(n) + " n=1 q=" + std::to_string(q) +
                                           ": hk = " + detail::s(hk_closed(n, 1, q)) +
                                           " but q^m = " + detail::s(power));
    }
  }
  return report;
}

// Bounded-composition closed form vs exhaustive enumeration, monotonicity,
// and the tuple interpretation of the column-bounded count.
inline CheckReport check_compositions(long long max_m, long long max_n, long long max_q,
                                      std::uint64_t budget_limit = WorkBudget::kDefaultLimit) {
  CheckReport report{"compositions"};
  for (long long a = 0; a <= 5; ++a) {
    for (long long b = a > 0 ? a : 1; b <= 5; ++b) {
      for (long long w = -1; w <= 12; ++w) {
        for (long long z = 1; z <= 6; ++z) {
          const CompositionSpec spec{a, b, w, z};
          const Int closed = count_bounded_compositions(spec);
          Int brute;
          try {
            WorkBudget budget(budget_limit);
            brute = count_bounded_compositions_oracle(spec, budget);
          } catch (const WorkBudgetError& e) {
            detail::rethrow_budget(e, "composition lemma at a=" + std::to_string(a) +
                                          " b=" + std::to_string(b) + " w=" + std::to_string(w) +
                                          " z=" + std::to_string(z));
          }
          ++report.checks;
          if (closed != brute)
            detail::record_failure(report, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                               " w=" + std::to_string(w) + " z=" + std::to_string(z) +
                                               ": closed form = " + detail::s(closed) +
                                               " but enumeration = " + detail::s(brute));
          ++report.checks;
          if (w > -1 &&
              closed < count_bounded_compositions({a, b, w - 1, z}))
            detail::record_failure(report, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                               " w=" + std::to_string(w) + " z=" + std::to_string(z) +
                                               ": count decreased when w grew");
          ++report.checks;
          if (z > 1 && closed < count_bounded_compositions({a, b, w, z - 1}))
            detail::record_failure(report, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                               " w=" + std::to_string(w) + " z=" + std::to_string(z) +
                                               ": count decreased when z grew");
        }
      }
    }
  }
  for (long long m = 1; m <= max_m; ++m) {
    for (long long n = 1; n <= max_n; ++n) {
      for (long long q = 1; q <= max_q; ++q) {
        const Int closed = nq_col_bounded_closed(m, n, q);
        const Int tuples = count_bounded_compositions({n, m + n - 1, n * (q - 1), q});
        ++report.checks;
        if (closed != tuples)
          detail::record_failure(report, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                             " q=" + std::to_string(q) +
                                             ": column-bounded closed form = " + detail::s(closed) +
                                             " but tuple count = " + detail::s(tuples));
      }
    }
  }
  return report;
}

// Interpolation: right degree, agreement with the closed form far past the
// nodes, and transpose symmetry of the leading coefficient.
inline CheckReport check_polyfit(long long max_m, long long max_n, long long check_upto) {
  CheckReport report{"polyfit"};
  for (long long m = 1; m <= max_m; ++m) {
    for (long long n = 1; n <= max_n; ++n) {
      ExactPolynomial poly;
      try {
        poly = interpolate_hk(m, n);
      } catch (const PolynomialFitError& e) {
        ++report.checks;
        detail::record_failure(report, e.what());
        continue;
      }
      ++report.checks;
      if (poly.degree() != m + n - 1)
        detail::record_failure(report, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                           ": degree = " + std::to_string(poly.degree()) +
                                           " but m+n-1 = " + std::to_string(m + n - 1));
      for (long long q = 1; q <= check_upto; ++q) {
        ++report.checks;
        const Rational fitted = poly(q);
        const Rational exact(hk_closed(m, n, q));
        if (fitted != exact) {
          detail::record_failure(report, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                             " q=" + std::to_string(q) + ": polynomial = " +
                                             fitted.str() + " but count = " + exact.str());
          break;
        }
      }
      if (n >= m) {
        ++report.checks;
        const Rational lc = leading_coefficient(poly);
        const Rational lc_t = leading_coefficient(interpolate_hk(n, m));
        if (lc != lc_t)
          detail::record_failure(report, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                             ": leading coefficient " + lc.str() +
                                             " differs from transpose's " + lc_t.str());
      }
    }
  }
  return report;
}

// Round trip of the corner rule over every margin pair in the grid.
inline CheckReport check_margins_roundtrip(long long max_mn = 4, long long max_total = 30) {
  CheckReport report{"margins-roundtrip"};
  // comps[k] holds, per total, every composition of that total into k parts.
  std::vector<std::vector<std::vector<std::vector<long long>>>> comps(
      static_cast<std::size_t>(max_mn) + 1);
  for (long long k = 1; k <= max_mn; ++k) {
    auto& by_total = comps[static_cast<std::size_t>(k)];
    by_total.assign(static_cast<std::size_t>(max_total) + 1, {});
    std::vector<long long> cur(static_cast<std::size_t>(k), 0);
    for (long long t = 0; t <= max_total; ++t) {
      auto rec = [&](auto&& self, long long idx, long long left) -> void {
        if (idx + 1 == k) {
          cur[static_cast<std::size_t>(idx)] = left;
          by_total[static_cast<std::size_t>(t)].push_back(cur);
          return;
        }
        for (long long x = 0; x <= left; ++x) {
          cur[static_cast<std::size_t>(idx)] = x;
          self(self, idx + 1, left - x);
        }
      };
      rec(rec, 0, t);
    }
  }

  for (long long m = 1; m <= max_mn; ++m) {
    for (long long n = 1; n <= max_mn; ++n) {
      ExponentMatrix mat(m, n);
      for (long long t = 0; t <= max_total; ++t) {
        for (const auto& rows : comps[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)]) {
          for (const auto& cols : comps[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)]) {
            detail::corner_rule_fill(rows, cols, mat);
            const Margins back = matrix_to_margins(mat);
            ++report.checks;
            if (back.rows != rows || back.cols != cols || !is_staircase(mat)) {
              std::string desc = "rows=(";
              for (std::size_t i = 0; i < rows.size(); ++i)
                desc += (i ? "," : "") + std::to_string(rows[i]);
              desc += ") cols=(";
              for (std::size_t j = 0; j < cols.size(); ++j)
                desc += (j ? "," : "") + std::to_string(cols[j]);
              desc += ")";
              detail::record_failure(report,
                                     desc + ": corner rule did not round-trip to a staircase matrix");
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

// Uniqueness of the staircase representative: exhaustive search over all
// matrices with the given margins must find exactly one staircase matrix,
// the corner-rule one.
inline CheckReport check_margins_uniqueness(long long max_mn = 3, long long max_total = 8) {
  CheckReport report{"margins-uniqueness"};
  for (long long m = 1; m <= max_mn; ++m) {
    for (long long n = 1; n <= max_mn; ++n) {
      ExponentMatrix mat(m, n);
      std::vector<long long> rows(static_cast<std::size_t>(m));
      std::vector<long long> cols(static_cast<std::size_t>(n));
      std::vector<long long> col_used(static_cast<std::size_t>(n));

      // Enumerates every matrix with the current margins; counts staircases.
      long long staircase_hits = 0;
      ExponentMatrix witness(m, n);
      auto fill_cells = [&](auto&& self, long long i, long long j, long long row_left) -> void {
        if (i == m) {
          for (long long jj = 0; jj < n; ++jj)
            if (col_used[static_cast<std::size_t>(jj)] != cols[static_cast<std::size_t>(jj)]) return;
          if (is_staircase(mat)) {
            ++staircase_hits;
            if (staircase_hits == 1) witness = mat;
          }
          return;
        }
        if (j + 1 == n) {
          const long long need = row_left;
          if (col_used[static_cast<std::size_t>(j)] + need > cols[static_cast<std::size_t>(j)]) return;
          mat(i, j) = need;
          col_used[static_cast<std::size_t>(j)] += need;
          self(self, i + 1, 0, i + 1 < m ? rows[static_cast<std::size_t>(i + 1)] : 0);
          col_used[static_cast<std::size_t>(j)] -= need;
          return;
        }
        const long long slack = cols[static_cast<std::size_t>(j)] - col_used[static_cast<std::size_t>(j)];
        for (long long x = 0; x <= std::min(row_left, slack); ++x) {
          mat(i, j) = x;
          col_used[static_cast<std::size_t>(j)] += x;
          self(self, i, j + 1, row_left - x);
          col_used[static_cast<std::size_t>(j)] -= x;
        }
      };

      auto margins_desc = [&]() {
        std::string desc = "rows=(";
        for (std::size_t i = 0; i < rows.size(); ++i)
          desc += (i ? "," : "") + std::to_string(rows[i]);
        desc += ") cols=(";
        for (std::size_t j = 0; j < cols.size(); ++j)
          desc += (j ? "," : "") + std::to_string(cols[j]);
        return desc + ")";
      };

      auto walk_cols = [&](auto&& self, long long idx, long long left) -> bool {
        if (idx + 1 == n) {
          cols[static_cast<std::size_t>(idx)] = left;
          staircase_hits = 0;
          std::fill(col_used.begin(), col_used.end(), 0);
          fill_cells(fill_cells, 0, 0, rows[0]);
          ++report.checks;
          if (staircase_hits != 1) {
            detail::record_failure(report, margins_desc() + ": found " +
                                               std::to_string(staircase_hits) +
                                               " staircase matrices, expected exactly 1");
            return false;
          }
          Margins g{rows, cols};
          if (!(witness == margins_to_matrix(g))) {
            detail::record_failure(report,
                                   margins_desc() + ": unique staircase matrix differs from corner rule");
            return false;
          }
          return true;
        }
        for (long long x = 0; x <= left; ++x) {
          cols[static_cast<std::size_t>(idx)] = x;
          if (!self(self, idx + 1, left - x)) return false;
        }
        return true;
      };

      auto walk_rows = [&](auto&& self, long long idx, long long left) -> bool {
        if (idx + 1 == m) {
          for (long long last = 0; last <= left; ++last) {
            rows[static_cast<std::size_t>(idx)] = last;
            const long long total =
                std::accumulate(rows.begin(), rows.end(), 0LL);
            if (!walk_cols(walk_cols, 0, total)) return false;
          }
          return true;
        }
        for (long long x = 0; x <= left; ++x) {
          rows[static_cast<std::size_t>(idx)] = x;
          if (!self(self, idx + 1, left - x)) return false;
        }
        return true;
      };

      if (!walk_rows(walk_rows, 0, max_total)) return report;
    }
  }
  return report;
}

}  // namespace hkdet

#endif  // HKDET_VERIFY_HPP
