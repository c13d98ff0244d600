#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nildeg {

// Degrees are counted exactly: |H|^n * |G| does not fit fixed-width integers
// for large catalogs, so all counts and ratios are arbitrary precision.
// cpp_rational keeps values canonical (lowest terms, positive denominator).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" with the denominator omitted when it is 1.
std::string fraction_string(const Rational& r);

// Decimal rendering, 12 significant digits by default. Advisory only; the
// rational is the authoritative value.
std::string decimal_string(const Rational& r, int significant_digits = 12);

BigInt int_pow(const BigInt& base, int exponent);

}  // namespace nildeg
