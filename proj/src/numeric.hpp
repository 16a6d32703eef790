#pragma once

#include <gmpxx.h>

#include <string>

namespace patchcount {

using BigCount = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or a plain integer. The denominator must be nonzero; the
// result is canonicalized with a positive denominator.
Rational parse_rational(const std::string& token);

// Parses a nonnegative decimal literal ("122.94", "1397192") exactly.
Rational parse_decimal(const std::string& token);

std::string rational_to_string(const Rational& q);

// floor(q * 10^places) rendered as a fixed-point decimal string.
// q must be nonnegative.
std::string floor_decimal(const Rational& q, int places);

// log2(x) for x >= 1, rounded down to `places` decimal places. Every digit
// printed is a certified lower bound on the exact logarithm.
std::string log2_floor_decimal(const BigCount& x, int places);

// Same value as a scaled integer: floor(log2(x) * 10^places).
BigCount log2_floor_scaled(const BigCount& x, int places);

}  // namespace patchcount
