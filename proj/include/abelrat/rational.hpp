#pragma once

#include <gmpxx.h>

#include <string>

namespace abelrat {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form (mpq_class(num, den) does not reduce).
Rational frac(const Integer& num, const Integer& den);

// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(const std::string& s);

int sign(const Rational& q);
Rational abs_value(const Rational& q);
Rational pow_int(const Rational& q, long e);
Integer ceil_of(const Rational& q);
Integer floor_of(const Rational& q);
bool is_integer(const Rational& q);

// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

double approx(const Rational& q);

}  // namespace abelrat
