#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cactoidlab {

// All lengths are exact rationals. Inputs arrive as decimal or "p/q"
// strings, so every stored distance is exact and comparisons never drift.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "3", "-1.25", "1/3", "0.5e2" is NOT accepted (no exponents).
Rational parse_scalar(const std::string& text);

// Exact decimal when the reduced denominator is of the form 2^a 5^b,
// otherwise "p/q".
std::string scalar_to_string(const Rational& value);

double scalar_to_double(const Rational& value);

}  // namespace cactoidlab
