#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qjf {

// Exact arbitrary-precision arithmetic. Everything symbolic in this project
// runs on these types; no floating point is allowed anywhere in the algebra.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);

// Binomial coefficient C(m, j). For j < 0 the value is 0. For m >= 0 the
// usual convention C(m, j) = 0 when j > m applies. For m < 0 the falling
// factorial generalization m(m-1)...(m-j+1)/j! is used, so the bilinear
// extension of weight-indexed operators stays total.
Integer binomial(long long m, long long j);

// Nearest integer with ties rounded down: ||n + 1/2|| = n.
Integer nearest_int(const Rational& x);

std::string to_string(const Rational& x);

} // namespace qjf
