#pragma once

// Exact scalars. Integer and Rational are GMP's C++ value types; GMP keeps
// mpq_class values canonical (reduced, positive denominator) after every
// arithmetic operation, so only constructors from a raw numerator/denominator
// pair need an explicit canonicalize(), which make_rational() performs.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lclab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal, optional surrounding whitespace).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

int sign(const Rational& value);
int sign(const Integer& value);

bool is_integer(const Rational& value);

Integer factorial(std::uint64_t n);

/// C(n, k) for integer n, with C(n, k) = 0 when k < 0 or k > n >= 0.
Integer binomial(std::int64_t n, std::int64_t k);

Rational pow(const Rational& base, std::uint64_t exponent);

/// Largest integer <= value.
Integer floor(const Rational& value);

}  // namespace lclab
