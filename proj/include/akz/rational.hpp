#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace akz {

/// Exact rational; always kept canonical (positive denominator, reduced).
using Rational = mpq_class;

/// "p/q" for non-integers, "p" for integers (GMP canonical form).
std::string to_string(const Rational& q);

/// Accepts "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

mpz_class factorial(unsigned n);
mpz_class binomial(long n, long k);

/// n^e for an integer n >= 1 and any integer exponent e.
Rational int_pow(long n, long e);

}  // namespace akz
