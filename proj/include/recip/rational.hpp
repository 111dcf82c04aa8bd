#ifndef RECIP_RATIONAL_HPP_
#define RECIP_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace recip {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::int64_t lcm(std::int64_t a, std::int64_t b) noexcept;

/// Floor of a rational as an arbitrary-precision integer.
Integer floor(const Rational& x);

/// Fractional part {x} = x - floor(x), always in [0, 1).
Rational frac(const Rational& x);

/// Residue mod nu: x - nu * floor(x / nu). Throws std::invalid_argument for nu < 1.
Rational residue_mod(const Rational& x, std::int64_t nu);

bool is_integer(const Rational& x);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Rational pow(const Rational& base, unsigned exponent);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace recip

#endif  // RECIP_RATIONAL_HPP_
