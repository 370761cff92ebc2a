#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mrbound {

using Integer = mpz_class;
/// Always canonical: positive denominator, coprime parts (gmpxx maintains this).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(kParseError) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Also accepts decimal notation such as "0.1", "-2.5e-3".
Rational parse_decimal(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace mrbound
