#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromabounds {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

/// Sign as -1/0/+1.
int sign_of(const BigRational& q);
int sign_of(const BigInt& v);

/// Parses "p/q", a plain integer, or a decimal literal ("3.71"), all exactly.
/// Scientific notation is rejected. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

/// "p/q" (or just "p" when the denominator is 1).
std::string to_fraction_string(const BigRational& q);

/// Decimal expansion with the given number of fractional digits, truncated
/// toward zero. Used for human-readable report fields.
std::string to_decimal_string(const BigRational& q, int digits = 12);

/// Nearest double (via long-double division of numerator/denominator parts).
double to_double(const BigRational& q);

/// Smallest integer s with s*s >= v. Requires v >= 0.
BigInt isqrt_ceil(const BigInt& v);

/// Smallest multiple of 1/100 that is >= v.
BigRational centi_ceil(const BigRational& v);

/// Smallest multiple of 1/100 that is >= v (double input; v must be finite
/// and |v| < 2^52). Worst-case shortfall vs an exact irrational threshold is
/// the double rounding error of v itself.
BigRational centi_ceil(double v);

}  // namespace chromabounds
