#include "arrowgraph/rational_function.hpp"

namespace arrowgraph {

RationalFunction make_rational_function(const Poly1& numerator, const Poly1& denominator) {
  if (denominator.is_zero()) throw DomainError("rational function with zero denominator");
  const Poly1 g = ring_gcd(numerator, denominator);
  Poly1 p = exact_quotient(numerator, g);
  Poly1 q = exact_quotient(denominator, g);

  Integer den = 1;
  for (const auto* poly : {&p, &q})
    for (const auto& c : poly->coefficients()) den = lcm(den, c.get_den());
  Integer num_gcd = 0;
  for (const auto* poly : {&p, &q})
    for (const auto& c : poly->coefficients()) num_gcd = gcd(num_gcd, Integer(c.get_num() * den / c.get_den()));
  Rational factor(den, num_gcd);
  factor.canonicalize();
  if (sgn(q.lead()) < 0) factor = -factor;
  p *= factor;
  q *= factor;
  return {std::move(p), std::move(q)};
}

double evaluate(const RationalFunction& f, double t) {
  return evaluate_double(f.numerator, t) / evaluate_double(f.denominator, t);
}

}  // namespace arrowgraph
