#pragma once

#include "arrowgraph/polynomial.hpp"

namespace arrowgraph {

/// f = P / Q with gcd(P, Q) = 1, Q != 0, integer coefficients with no common
/// integer factor across P and Q, and lc(Q) > 0.
struct RationalFunction {
  Poly1 numerator;
  Poly1 denominator;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Reduces and normalizes P / Q. Throws DomainError when Q is zero.
RationalFunction make_rational_function(const Poly1& numerator, const Poly1& denominator);

double evaluate(const RationalFunction& f, double t);

}  // namespace arrowgraph
