#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "hkdet/binomial.hpp"
#include "hkdet/closed_forms.hpp"

using namespace hkdet;

TEST_CASE("nq_col_bounded_closed: known values") {
  REQUIRE(nq_col_bounded_closed(2, 2, 2) == 8);
  REQUIRE(nq_col_bounded_closed(1, 2, 3) == 9);
  // Single column: compositions of at most q-1 into m parts.
  for (long long m = 1; m <= 5; ++m)
    for (long long q = 0; q <= 6; ++q)
      REQUIRE(nq_col_bounded_closed(m, 1, q) == binom(q + m - 1, m));
  REQUIRE(nq_col_bounded_closed(3, 1, 2) == 4);
  for (long long m = 1; m <= 4; ++m)
    for (long long n = 1; n <= 4; ++n) REQUIRE(nq_col_bounded_closed(m, n, 0) == 0);
}

TEST_CASE("mq_closed: known values") {
  // A single cell cannot be both below q and at least q.
  for (long long q = 0; q <= 8; ++q) REQUIRE(mq_closed(1, 1, q) == 0);
  REQUIRE(mq_closed(2, 1, 3) == 3);
  REQUIRE(mq_closed(2, 2, 2) == 2);
  REQUIRE(mq_closed(2, 3, 2) == 3);
  REQUIRE(mq_closed(2, 2, 3) == 8);
}

TEST_CASE("mq_closed: extending the sum to j = 0 changes nothing") {
  for (long long m = 1; m <= 5; ++m)
    for (long long n = 1; n <= 5; ++n)
      for (long long q = 0; q <= 10; ++q)
        REQUIRE(mq_closed(m, n, q) == mq_closed_from_zero(m, n, q));
}

TEST_CASE("hk_closed: known values") {
  REQUIRE(hk_closed(2, 2, 2) == 10);
  REQUIRE(hk_closed(2, 2, 2) == binom(5, 3));
  REQUIRE(hk_closed(2, 2, 3) == 35);
  REQUIRE(hk_closed(2, 3, 2) == 23);
  for (long long q = 0; q <= 10; ++q) REQUIRE(hk_closed(1, 1, q) == q);
  for (long long m = 1; m <= 5; ++m)
    for (long long n = 1; n <= 5; ++n) REQUIRE(hk_closed(m, n, 1) == 1);
  // No 2x2 minors exist in one row; the colength is that of the monomial ideal.
  for (long long n = 1; n <= 4; ++n)
    for (long long q = 1; q <= 5; ++q) {
      Int power = 1;
      for (long long k = 0; k < n; ++k) power *= q;
      REQUIRE(hk_closed(1, n, q) == power);
      REQUIRE(hk_closed(n, 1, q) == power);
    }
}

TEST_CASE("corollary: both sides agree and match the bounded count at m = 2") {
  REQUIRE(corollary_lhs(2, 3) == 27);
  REQUIRE(corollary_rhs(2, 3) == 27);
  for (long long q = 0; q <= 10; ++q) REQUIRE(corollary_lhs(1, q) == binom(q + 1, 2));
  for (long long n = 1; n <= 6; ++n) {
    REQUIRE(corollary_lhs(n, 0) == 0);
    REQUIRE(corollary_rhs(n, 1) == 1);
  }
  for (long long n = 1; n <= 8; ++n)
    for (long long q = 0; q <= 20; ++q) {
      REQUIRE(corollary_lhs(n, q) == corollary_rhs(n, q));
      REQUIRE(corollary_lhs(n, q) == nq_col_bounded_closed(2, n, q));
    }
}

TEST_CASE("hk_m2_reference: agrees with the general formula at m = 2") {
  for (long long q = 0; q <= 12; ++q) REQUIRE(hk_m2_reference(1, q) == q * q);
  REQUIRE(hk_m2_reference(2, 3) == 35);
  for (long long n = 1; n <= 6; ++n) REQUIRE(hk_m2_reference(n, 0) == 0);
  for (long long n = 1; n <= 6; ++n)
    for (long long q = 0; q <= 15; ++q)
      REQUIRE(hk_m2_reference(n, q) == hk_closed(2, n, q));
}

TEST_CASE("closed forms: domain validation") {
  REQUIRE_THROWS_AS(nq_col_bounded_closed(0, 2, 3), std::domain_error);
  REQUIRE_THROWS_AS(mq_closed(2, 0, 3), std::domain_error);
  REQUIRE_THROWS_AS(hk_closed(2, 2, -1), std::domain_error);
  REQUIRE_THROWS_AS(corollary_lhs(0, 3), std::domain_error);
  REQUIRE_THROWS_AS(corollary_rhs(3, -2), std::domain_error);
  REQUIRE_THROWS_AS(hk_m2_reference(0, 5), std::domain_error);
}

TEST_CASE("hk_closed: transpose symmetry despite the asymmetric formula") {
  for (long long m = 1; m <= 5; ++m)
    for (long long n = 1; n <= 5; ++n)
      for (long long q = 1; q <= 12; ++q)
        REQUIRE(hk_closed(m, n, q) == hk_closed(n, m, q));
}
