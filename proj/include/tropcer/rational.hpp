#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer / rational scalar types and small helpers.
 *
 * Everything in this library is computed over arbitrary-precision integers
 * (boost::multiprecision::cpp_int) and rationals (cpp_rational); there is no
 * floating point anywhere, so all comparisons are exact.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tropcer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;  // row-major

/// Quotient of a/b rounded toward negative infinity (b != 0).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // C++ division truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Remainder of a modulo b normalised into [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += (b < 0 ? Int(-b) : b);
  return r;
}

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }
inline bool is_integral(const Rat& x) { return rat_den(x) == 1; }

/// Largest integer <= x.
inline Int rat_floor(const Rat& x) { return floor_div(rat_num(x), rat_den(x)); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Parse a (possibly signed) decimal integer; rejects anything else.
Int parse_int_strict(const std::string& text);

/// Parse "num", "-num" or "num/den" (den > 0 after normalisation).
/// Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

/// Render as "num/den", or "num" when the denominator is 1.
std::string rat_str(const Rat& x);

std::string int_str(const Int& x);

}  // namespace tropcer
