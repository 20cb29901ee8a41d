#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrowgraph {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double r) { return r == 0.0; }

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Accepts "12", "-3/4", "2.5", ".5", "-0.125". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// True when the denominator has only the prime factors 2 and 5.
bool has_terminating_decimal(const Rational& r);

/// Exact decimal rendering of a non-negative rational with a terminating
/// expansion ("2.5", "0.125"). Precondition: has_terminating_decimal(r).
std::string to_decimal_string(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace arrowgraph
