#ifndef HKDET_COMPOSITIONS_HPP
#define HKDET_COMPOSITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hkdet/binomial.hpp"
#include "hkdet/integer.hpp"
#include "hkdet/work_budget.hpp"

namespace hkdet {

// One bounded-composition counting problem: b-tuples of non-negative
// integers that sum to at most w and whose first a entries are strictly
// smaller than z. w may be negative, in which case the count is empty.
struct CompositionSpec {
  long long a = 0;  // number of capped leading entries
  long long b = 1;  // tuple length
  long long w = 0;  // cap on the total
  long long z = 1;  // strict cap on each of the first a entries
};

inline void validate(const CompositionSpec& spec) {
  if (spec.a < 0) throw std::domain_error("CompositionSpec: a must be non-negative");
  if (spec.b < 1) throw std::domain_error("CompositionSpec: b must be positive");
  if (spec.a > spec.b) throw std::domain_error("CompositionSpec: requires a <= b");
  if (spec.z < 1) throw std::domain_error("CompositionSpec: z must be positive");
}

// Closed form by inclusion-exclusion over which capped entries overflow:
//
//   sum_{i=0}^{a} (-1)^i binom(a, i) binom(w - i z + b, b).
//
// Out-of-range binomials vanish, so w < 0 yields 0 without special casing.
inline Int count_bounded_compositions(const CompositionSpec& spec) {
  validate(spec);
  if (spec.w < 0) return 0;
  Int total = 0;
  for (long long i = 0; i <= spec.a; ++i) {
    const Int term = binom(spec.a, i) * binom(spec.w - i * spec.z + spec.b, spec.b);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Exhaustive enumeration of the same tuples. Visits one node per partial
// prefix, so the cost is bounded by the number of tuples with sum <= w
// (roughly binom(w + b, b)); the budget is the practical cutoff.
inline Int count_bounded_compositions_oracle(const CompositionSpec& spec,
                                             WorkBudget& budget) {
  validate(spec);
  if (spec.w < 0) return 0;

  std::uint64_t count = 0;
  auto walk = [&](auto&& self, long long idx, long long remaining) -> void {
    budget.charge();
    if (idx == spec.b) {
      ++count;
      return;
    }
    long long hi = remaining;
    if (idx < spec.a) hi = std::min(hi, spec.z - 1);
    for (long long v = 0; v <= hi; ++v) {
      self(self, idx + 1, remaining - v);
    }
  };
  walk(walk, 0, spec.w);
  return Int(count);
}

inline Int count_bounded_compositions_oracle(const CompositionSpec& spec) {
  WorkBudget budget;
  return count_bounded_compositions_oracle(spec, budget);
}

}  // namespace hkdet

#endif  // HKDET_COMPOSITIONS_HPP
