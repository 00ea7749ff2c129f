#ifndef HKDET_INTEGER_HPP
#define HKDET_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hkdet {

// All counts in this library are exact. Int never overflows; Rational is
// always stored in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace hkdet

#endif  // HKDET_INTEGER_HPP
