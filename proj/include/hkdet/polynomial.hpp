#ifndef HKDET_POLYNOMIAL_HPP
#define HKDET_POLYNOMIAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hkdet/closed_forms.hpp"
#include "hkdet/integer.hpp"

namespace hkdet {

// Polynomial in one variable with exact rational coefficients, constant
// term first. The coefficient vector never has a trailing zero, so the
// zero polynomial is the empty vector and degree() is otherwise the vector
// length minus one.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;

  explicit ExactPolynomial(std::vector<Rational> coefficients)
      : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0)
      coefficients_.pop_back();
  }

  bool is_zero() const noexcept { return coefficients_.empty(); }

  // Degree of the zero polynomial is not defined here; callers must check
  // is_zero() first.
  long long degree() const {
    if (is_zero()) throw std::domain_error("ExactPolynomial: zero polynomial has no degree");
    return static_cast<long long>(coefficients_.size()) - 1;
  }

  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  // Coefficient of x^k, zero beyond the degree.
  Rational at(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
      acc *= x;
      acc += coefficients_[k];
    }
    return acc;
  }

  Rational operator()(long long x) const { return (*this)(Rational(x)); }

  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::vector<Rational> coefficients_;
};

inline Rational leading_coefficient(const ExactPolynomial& p) {
  if (p.is_zero())
    throw std::domain_error("leading_coefficient: zero polynomial");
  return p.coefficients().back();
}

// Raised when interpolation output contradicts what the count values force:
// wrong degree, or a later value the fitted polynomial fails to reproduce.
// Either means a formula bug; it must never be swallowed.
class PolynomialFitError : public std::runtime_error {
 public:
  explicit PolynomialFitError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Newton divided differences through the points (xs[i], ys[i]), expanded to
// the monomial basis. Nodes must be pairwise distinct.
inline ExactPolynomial newton_interpolate(const std::vector<Rational>& xs,
                                          const std::vector<Rational>& ys) {
  const std::size_t k = xs.size();
  std::vector<Rational> diffs(ys);
  // diffs[i] becomes the divided difference [y_0, ..., y_i].
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      diffs[i] = (diffs[i] - diffs[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Horner expansion of the Newton form: p <- p * (x - x_i) + diffs[i].
  std::vector<Rational> coeffs;
  for (std::size_t i = k; i-- > 0;) {
    coeffs.insert(coeffs.begin(), Rational(0));
    for (std::size_t j = 0; j + 1 < coeffs.size(); ++j)
      coeffs[j] -= xs[i] * coeffs[j + 1];
    coeffs[0] += diffs[i];
  }
  return ExactPolynomial(std::move(coeffs));
}

}  // namespace detail

// Fits the polynomial of degree at most m + n - 1 through the count values
// at q = 1, ..., m + n, then checks it reproduces the counts at the next
// ten q before returning. The degree must come out exactly m + n - 1, the
// Krull dimension of the ring being measured.
inline ExactPolynomial interpolate_hk(long long m, long long n) {
  if (m < 1 || n < 1)
    throw std::domain_error("interpolate_hk: m and n must be positive");
  const long long node_count = m + n;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  xs.reserve(static_cast<std::size_t>(node_count));
  ys.reserve(static_cast<std::size_t>(node_count));
  for (long long q = 1; q <= node_count; ++q) {
    xs.emplace_back(q);
    ys.emplace_back(hk_closed(m, n, q));
  }
  ExactPolynomial poly = detail::newton_interpolate(xs, ys);
  if (poly.is_zero() || poly.degree() != m + n - 1)
    throw PolynomialFitError(
        "interpolate_hk: fitted degree is not m + n - 1 for m = " +
        std::to_string(m) + ", n = " + std::to_string(n));
  for (long long q = node_count + 1; q <= node_count + 10; ++q) {
    const Rational expected(hk_closed(m, n, q));
    if (poly(q) != expected)
      throw PolynomialFitError(
          "interpolate_hk: fitted polynomial disagrees with the count at q = " +
          std::to_string(q) + " for m = " + std::to_string(m) +
          ", n = " + std::to_string(n));
  }
  return poly;
}

}  // namespace hkdet

#endif  // HKDET_POLYNOMIAL_HPP
