// Counts staircase monomials under mixed entry bounds, where no closed form
// applies, and cross-checks the margin oracle against direct matrix
// enumeration.

#include <iostream>

#include "hkdet/staircase.hpp"

int main() {
  using hkdet::Bound;

  hkdet::CountSpec spec;
  spec.m = 2;
  spec.n = 3;
  spec.q = 4;
  spec.row_bounds = {Bound(2), Bound::infinity()};
  spec.col_bounds = {Bound(1), Bound(3), Bound::infinity()};
  spec.kind = hkdet::CountKind::kNType;

  hkdet::WorkBudget budget(1'000'000);
  const hkdet::Int via_margins = hkdet::count_oracle(spec, budget);
  const hkdet::Int via_matrices = hkdet::count_oracle_matrix(spec, budget);

  std::cout << "margin oracle:  " << via_margins << '\n';
  std::cout << "matrix oracle:  " << via_matrices << '\n';
  std::cout << "work performed: " << budget.used() << " steps\n";
  return via_margins == via_matrices ? 0 : 1;
}
