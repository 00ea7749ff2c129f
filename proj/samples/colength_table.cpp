// Tabulates the colength for a 2x3 matrix of indeterminates and recovers
// it as a polynomial in q.

#include <iostream>

#include "hkdet/closed_forms.hpp"
#include "hkdet/polynomial.hpp"

int main() {
  const long long m = 2;
  const long long n = 3;

  std::cout << "q\tcolength\n";
  for (long long q = 1; q <= 8; ++q)
    std::cout << q << '\t' << hkdet::hk_closed(m, n, q) << '\n';

  const hkdet::ExactPolynomial poly = hkdet::interpolate_hk(m, n);
  std::cout << "\ndegree " << poly.degree() << " polynomial, coefficients low to high:\n";
  for (const hkdet::Rational& c : poly.coefficients()) std::cout << c << ' ';
  std::cout << "\nleading coefficient (the multiplicity): "
            << hkdet::leading_coefficient(poly) << '\n';
  return 0;
}
