#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrspec {

/// Exact rational scalar used throughout the library (GMP-backed, always canonical).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws ValidationError on bad input.
Rational parse_rational(std::string_view text);

/// "num/den" with the denominator always printed (e.g. "1/1", "-3/2").
std::string to_fraction_string(const Rational& q);

/// Shortest form: "3" for integers, "3/2" otherwise.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational fractional_part(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace arrspec
