#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace carnot {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Exact: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

}  // namespace carnot
