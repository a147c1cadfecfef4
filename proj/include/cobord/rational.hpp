#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cobord {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, so every fraction is built through here.
Rational ratio(const Integer& num, const Integer& den);

/// Compact form: "3", "-9/8".
std::string to_string(const Rational& q);

/// Always "num/den", as used in JSON output.
std::string to_fraction_string(const Rational& q);

/// Accepts "a", "-a", "a/b". Throws DomainError on a zero denominator and
/// ParseError on malformed text.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Odd part of a nonzero integer's absolute value.
Integer odd_part(Integer n);

}  // namespace cobord
