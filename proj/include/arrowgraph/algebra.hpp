#pragma once

// Exact algebra for focal curves of rational functions.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "arrowgraph/bivariate.hpp"
#include "arrowgraph/expr.hpp"
#include "arrowgraph/projective.hpp"
#include "arrowgraph/rational_function.hpp"
#include "json.hpp"

namespace arrowgraph {

/// Projective parametrization (A(t) : B(t) : C(t)) of the focal curve.
struct FocalTriple {
  Poly1 a, b, c;
};

/// A = Q^2, B = PQ - t(P'Q - PQ'), C = PQ' - P'Q + Q^2, with the common
/// polynomial factor and integer content removed.
FocalTriple focal_triple(const RationalFunction& rf);

/// Predicted degree of the focal curve of P/Q with deg P = p, deg Q = q.
int expected_degree(int p, int q);

struct ImplicitizationReport {
  /// Factors stripped from the raw resultant, formatted.
  std::vector<std::string> removed_factors;
  /// Multiplicity of the curve in the resultant (degree of the parametrization).
  int multiplicity = 1;
  int probes = 0;
};

/// Square-free, primitive, sign-normalized G with G(A/C, B/C) = 0.
/// Throws DegenerateParametrization.
Poly2 implicitize(const FocalTriple& triple, ImplicitizationReport* report = nullptr);

/// Closed-form conic of the focal curve of (a x^2 + b x + c)/(d x + e),
/// normalized. Throws DegenerateFamily when the function is linear.
Poly2 conic_from_family(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const Rational& e);

/// The family member as a reduced rational function. Throws DegenerateFamily.
RationalFunction family_function(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                 const Rational& e);

enum class ConicClass { ellipse, circle, parabola, hyperbola, degenerate };
const char* conic_class_name(ConicClass c);

/// Throws NotAConic unless G has total degree 2.
ConicClass classify_conic(const Poly2& g);

struct AxisPoint {
  PlanePoint point;
  std::optional<Rational> exact_y;
  bool tangent_is_vertical = false;
};

struct AxisMeet {
  std::vector<AxisPoint> points;
  /// The projective closure also meets x = 0 at (0 : 1 : 0).
  bool at_infinity = false;
};

/// Real intersections of G = 0 with the input axis x = 0.
AxisMeet vertical_axis_meet(const Poly2& g);

/// Complex roots by companion-matrix eigenvalues.
std::vector<std::complex<double>> polynomial_roots(const Poly1& p);

/// True when f takes pairwise distinct values at the complex roots of f'.
bool has_distinct_critical_values(const Poly1& f, double tol = 1e-7);

struct ImplicitEquation {
  RationalFunction function;
  Poly2 equation;
  int degree = 0;
  std::optional<ConicClass> conic;
  ImplicitizationReport report;
};

/// Implicit focal equation of a rational expression. Throws NotRational.
ImplicitEquation implicit_equation(const Expr& f);

/// "(x-1)^2 + 4*x*y = 0 [hyperbola]"
std::string describe(const ImplicitEquation& eq);

nlohmann::json poly2_to_json(const Poly2& g);
/// Throws std::invalid_argument on a malformed document.
Poly2 poly2_from_json(const nlohmann::json& j);

}  // namespace arrowgraph
