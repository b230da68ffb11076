#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace waring {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar. Values are kept canonical: positive denominator,
/// numerator and denominator coprime.
using Rational = mpq_class;

/// Parses "a" or "a/b" with an optional leading sign, b != 0.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace waring
