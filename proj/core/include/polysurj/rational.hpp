#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polysurj {

/// Exact arbitrary-precision rational. Always kept canonical (reduced,
/// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

/// "a" or "a/b" in lowest terms.
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

/// The rational with the smallest denominator (then smallest numerator
/// magnitude) in the closed interval [lo, hi]. Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Best rational approximation of a double with denominator at most
/// max_den (continued-fraction convergents).
Rational approximate(double value, long max_den);

}  // namespace polysurj
