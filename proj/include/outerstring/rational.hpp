#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace outerstring {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Parses "12", "-3", "0.125", "-2.5", or "7/3" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "3" for integers, "7/3" otherwise.
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering with `places` digits after the point,
/// rounded half away from zero. Used for display only.
std::string to_fixed(const Rational& q, int places);

std::string to_string(const BigInt& z);

}  // namespace outerstring
