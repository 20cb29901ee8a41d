#pragma once

// Transformation laws for focal curves, the periodic shear and focus
// interpolation for compositions of linear functions.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arrowgraph/bivariate.hpp"
#include "arrowgraph/errors.hpp"
#include "arrowgraph/expr.hpp"
#include "arrowgraph/focal.hpp"
#include "arrowgraph/projective.hpp"

namespace arrowgraph {

enum class TransformKind { add_constant, scale_output, shift_input, scale_input };

const char* transform_kind_name(TransformKind k);
/// Accepts the snake_case names and AddConstant-style spellings.
std::optional<TransformKind> parse_transform_kind(std::string_view name);

/// f(x) = g(x) + c, c g(x), g(x - c) or g(c x).
template <typename Scalar>
struct Transform {
  TransformKind kind;
  Scalar c;
};

/// (x, y) -> (u/den, v/den) with polynomial u, v, den.
template <typename Scalar>
struct PlaneMap {
  BivariatePolynomial<Scalar> u;
  BivariatePolynomial<Scalar> v;
  BivariatePolynomial<Scalar> denominator;
};

template <typename Scalar>
void validate(const Transform<Scalar>& t) {
  if ((t.kind == TransformKind::scale_output || t.kind == TransformKind::scale_input) && arrowgraph::is_zero(t.c))
    throw DomainError(std::string(transform_kind_name(t.kind)) + " needs c != 0");
}

/// The substitution that turns g's focal equation G into f's: G(u/den, v/den).
template <typename Scalar>
PlaneMap<Scalar> substitution_map(const Transform<Scalar>& t) {
  validate(t);
  using P = BivariatePolynomial<Scalar>;
  const P x = P::x(), y = P::y(), one = P::constant(ring_traits<Scalar>::one());
  const Scalar& c = t.c;
  const P scaling_den = one + Scalar(c - ring_traits<Scalar>::one()) * x;
  switch (t.kind) {
    case TransformKind::add_constant: return {x, y - c * x, one};
    case TransformKind::scale_output: return {c * x, y, scaling_den};
    case TransformKind::shift_input: return {x, y + c * x - c * one, one};
    case TransformKind::scale_input: return {c * x, c * y, scaling_den};
  }
  return {x, y, one};
}

/// (x, y) -> (x, y + c(x - 1)); fixes the line x = 1.
template <typename Scalar>
PlaneMap<Scalar> shear_for_period(const Scalar& c) {
  if (arrowgraph::is_zero(c)) throw DomainError("shear period must be nonzero");
  return substitution_map(Transform<Scalar>{TransformKind::shift_input, c});
}

/// The map as a 3x3 matrix on (x : y : 1). Throws DomainError when a
/// component is not of degree <= 1.
Eigen::Matrix3d projective_matrix(const PlaneMap<double>& m);
Eigen::Matrix3d projective_matrix(const PlaneMap<Rational>& m);

PlaneMap<double> to_double(const PlaneMap<Rational>& m);

/// Evaluates the substitution at a point; nullopt where the denominator vanishes.
std::optional<PlanePoint> apply(const PlaneMap<double>& m, const PlanePoint& p);

/// Carries points of g's focal curve to the matching points of f's focal
/// curve, i.e. the preimage under the substitution.
std::vector<PlanePoint> transform_points(const PlaneMap<double>& m, const std::vector<PlanePoint>& points);

/// den^deg(G) G(u/den, v/den) with leftover factors of den removed,
/// normalized. Throws DegenerateResult.
Poly2 transform_implicit(const Poly2& g, const Transform<Rational>& t);

/// Expression for the transformed function f given g.
Expr transformed_function(const Expr& g, const Transform<Rational>& t);

/// |G(u/den, v/den)| for a focal equation given as a residual function;
/// nullopt where the map is undefined.
std::optional<double> pulled_back_residual(const std::function<double(double, double)>& g, const PlaneMap<double>& m,
                                           const PlanePoint& p);

struct Composition {
  ProjectivePointd f_focus, g_focus, composite_focus;
  /// (1 - c)/(1 - ac); nullopt when ac = 1.
  std::optional<double> t;
  bool f_at_infinity = false, g_at_infinity = false, composite_at_infinity = false;
  /// det of the row-normalized triples.
  double collinearity = 0;
};

/// Foci of f = ax + b, g = cx + d and g(f(x)) with f drawn between x = 0 and
/// delta, g between delta and 2 delta and the composite across 0..2 delta.
Composition compose_linear_foci(double a, double b, double c, double d, const AxesConfig& cfg = {});

/// The same three foci, each in its own chart between x = 0 and delta.
Composition own_chart_foci(double a, double b, double c, double d, const AxesConfig& cfg = {});

}  // namespace arrowgraph
