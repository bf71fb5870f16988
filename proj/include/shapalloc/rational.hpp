#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace shapalloc {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses a plain decimal literal such as "1000", "-0.25" or "+3.", exactly.
/// Exponents are not accepted. Throws DomainError on malformed input.
Rational parse_decimal(std::string_view text);

/// Like parse_decimal, but also accepts a fraction "p/q" where p and q are
/// decimal literals (e.g. "1/3", "0.5/7").
Rational parse_rational(std::string_view text);

/// Half-away-from-zero rounding to `places` fractional digits, rendered
/// without exponent: to_fixed(4150/3, 4) == "1383.3333".
std::string to_fixed(const Rational& value, int places);

/// Lossless text: a terminating decimal when the denominator has only the
/// prime factors 2 and 5 ("0.6648", "-12"), otherwise "p/q".
/// parse_rational(to_exact_string(x)) == x for every x.
std::string to_exact_string(const Rational& value);

double to_double(const Rational& value);

/// Exact binary value of a finite double.
Rational from_double(double value);

Rational factorial(unsigned n);

}  // namespace shapalloc
