#ifndef HKDET_BINOMIAL_HPP
#define HKDET_BINOMIAL_HPP

#include <stdexcept>

#include "hkdet/integer.hpp"

namespace hkdet {

// Binomial coefficient with the counting convention: binom(t, b) is the
// number of b-element subsets of a t-element set, so it vanishes whenever
// t < b — in particular for every negative t. This is NOT the polynomial
// extension (which would give binom(-2, 3) = -4). The alternating sums in
// closed_forms.hpp rely on out-of-range terms vanishing.
inline Int binom(const Int& t, long long b) {
  if (b < 0) throw std::domain_error("binom: lower index must be non-negative");
  if (t < b) return 0;
  Int result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= t - (b - i);
    result /= i;  // exact: the partial product is binom(t - b + i, i)
  }
  return result;
}

inline Int binom(long long t, long long b) { return binom(Int(t), b); }

}  // namespace hkdet

#endif  // HKDET_BINOMIAL_HPP
