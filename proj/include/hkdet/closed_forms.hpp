#ifndef HKDET_CLOSED_FORMS_HPP
#define HKDET_CLOSED_FORMS_HPP

#include <stdexcept>
#include <string>

#include "hkdet/binomial.hpp"
#include "hkdet/integer.hpp"

namespace hkdet {

namespace detail {

inline void check_nq(long long n, long long q, const char* where) {
  if (n < 1) throw std::domain_error(std::string(where) + ": n must be positive");
  if (q < 0) throw std::domain_error(std::string(where) + ": q must be non-negative");
}

inline void check_mnq(long long m, long long n, long long q, const char* where) {
  if (m < 1) throw std::domain_error(std::string(where) + ": m must be positive");
  check_nq(n, q, where);
}

}  // namespace detail

// Number of staircase monomials in an m x n grid whose column sums are all
// at most q - 1 (rows unconstrained):
//
//   sum_{i=1}^{n} (-1)^{n-i} C(n, i) C(i q + m - 1, m + n - 1)
//
// Vanishes for q = 0 because every binomial has top < bottom.
inline Int nq_col_bounded_closed(long long m, long long n, long long q) {
  detail::check_mnq(m, n, q, "nq_col_bounded_closed");
  Int total = 0;
  for (long long i = 1; i <= n; ++i) {
    const Int term = binom(n, i) * binom(i * q + m - 1, m + n - 1);
    if ((n - i) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

namespace detail {

inline Int mq_closed_impl(long long m, long long n, long long q, long long j_lo) {
  Int total = 0;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = j_lo; j <= m; ++j) {
      const Int term =
          binom(n, i) * binom(m, j) * binom((j - i) * q + n - 1, m + n - 1);
      if ((m - j + i - 1) % 2 == 0)
        total += term;
      else
        total -= term;
    }
  }
  return total;
}

}  // namespace detail

// Number of staircase monomials in an m x n grid with all row sums at most
// q - 1 and at least one column sum at least q:
//
//   sum_{i=1}^{n} sum_{j=1}^{m} (-1)^{m-j+i-1} C(n, i) C(m, j)
//                               C((j-i) q + n - 1, m + n - 1)
inline Int mq_closed(long long m, long long n, long long q) {
  detail::check_mnq(m, n, q, "mq_closed");
  return detail::mq_closed_impl(m, n, q, 1);
}

// Same sum extended to j = 0. The j = 0 column contributes
// C(-i q + n - 1, m + n - 1), which is zero for q >= 1 (the top argument is
// below m + n - 1) and also for q = 0; the extension never changes the value.
inline Int mq_closed_from_zero(long long m, long long n, long long q) {
  detail::check_mnq(m, n, q, "mq_closed_from_zero");
  return detail::mq_closed_impl(m, n, q, 0);
}

// Total count of staircase monomials in which all row sums are below q or
// all column sums are below q. Splitting on whether some column sum reaches
// q gives the two closed summands.
inline Int hk_closed(long long m, long long n, long long q) {
  detail::check_mnq(m, n, q, "hk_closed");
  return nq_col_bounded_closed(m, n, q) + mq_closed(m, n, q);
}

// Two sides of the identity specializing the column-bounded count to two
// rows. The alternating binomial sum
//
//   sum_{i=1}^{n} (-1)^{n-i} C(n, i) C(i q + 1, n + 1)
//
// collapses to the polynomial (n q^{n+1} - (n-2) q^n) / 2. Both sides are
// evaluated independently so the identity can be tested rather than assumed.
inline Int corollary_lhs(long long n, long long q) {
  detail::check_nq(n, q, "corollary_lhs");
  Int total = 0;
  for (long long i = 1; i <= n; ++i) {
    const Int term = binom(n, i) * binom(i * q + 1, n + 1);
    if ((n - i) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// The numerator n q^{n+1} - (n-2) q^n is always even; a nonzero remainder
// would mean a transcription error, so it is checked.
inline Int corollary_rhs(long long n, long long q) {
  detail::check_nq(n, q, "corollary_rhs");
  Int qn = 1;
  for (long long k = 0; k < n; ++k) qn *= q;
  const Int numerator = n * qn * q - (n - 2) * qn;
  if (numerator % 2 != 0)
    throw std::logic_error("corollary_rhs: numerator is not even");
  return numerator / 2;
}

// Previously published closed form for the two-row case, quoted from
// earlier work on monomial ideals. Kept as an independent cross-check
// target for hk_closed(2, n, q):
//
//   (n q^{n+1} - (n - 2) q^n) / 2 + n C(q + n - 1, n + 1)
inline Int hk_m2_reference(long long n, long long q) {
  detail::check_nq(n, q, "hk_m2_reference");
  return corollary_rhs(n, q) + n * binom(q + n - 1, n + 1);
}

}  // namespace hkdet

#endif  // HKDET_CLOSED_FORMS_HPP
