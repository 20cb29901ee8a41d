#include "arrowgraph/transforms.hpp"

#include <algorithm>
#include <cctype>

#include "arrowgraph/errors.hpp"

namespace arrowgraph {

const char* transform_kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::add_constant: return "add_constant";
    case TransformKind::scale_output: return "scale_output";
    case TransformKind::shift_input: return "shift_input";
    case TransformKind::scale_input: return "scale_input";
  }
  return "?";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) {
  std::string key;
  for (char ch : name)
    if (ch != '_' && ch != '-') key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "addconstant") return TransformKind::add_constant;
  if (key == "scaleoutput") return TransformKind::scale_output;
  if (key == "shiftinput") return TransformKind::shift_input;
  if (key == "scaleinput") return TransformKind::scale_input;
  return std::nullopt;
}

namespace {

template <typename Scalar>
Eigen::Matrix3d matrix_of(const PlaneMap<Scalar>& m, double (*conv)(const Scalar&)) {
  Eigen::Matrix3d out;
  const BivariatePolynomial<Scalar>* rows[] = {&m.u, &m.v, &m.denominator};
  for (int r = 0; r < 3; ++r) {
    if (rows[r]->total_degree() > 1) throw DomainError("plane map is not linear-fractional");
    out(r, 0) = conv(rows[r]->coefficient(1, 0));
    out(r, 1) = conv(rows[r]->coefficient(0, 1));
    out(r, 2) = conv(rows[r]->coefficient(0, 0));
  }
  return out;
}

double identity(const double& v) { return v; }
double rational_to_double(const Rational& v) { return v.get_d(); }

BivariatePolynomial<double> poly_to_double(const Poly2& g) {
  std::vector<BivariatePolynomial<double>::Term> terms;
  for (const auto& t : g.terms()) terms.push_back({t.dx, t.dy, t.coeff.get_d()});
  return BivariatePolynomial<double>::from_terms(terms);
}

}  // namespace

Eigen::Matrix3d projective_matrix(const PlaneMap<double>& m) { return matrix_of(m, identity); }
Eigen::Matrix3d projective_matrix(const PlaneMap<Rational>& m) { return matrix_of(m, rational_to_double); }

PlaneMap<double> to_double(const PlaneMap<Rational>& m) {
  return {poly_to_double(m.u), poly_to_double(m.v), poly_to_double(m.denominator)};
}

std::optional<PlanePoint> apply(const PlaneMap<double>& m, const PlanePoint& p) {
  const double den = evaluate(m.denominator, p.x(), p.y());
  if (den == 0) return std::nullopt;
  return PlanePoint(evaluate(m.u, p.x(), p.y()) / den, evaluate(m.v, p.x(), p.y()) / den);
}

std::vector<PlanePoint> transform_points(const PlaneMap<double>& m, const std::vector<PlanePoint>& points) {
  const Eigen::Matrix3d inverse = projective_matrix(m).inverse();
  std::vector<PlanePoint> out;
  out.reserve(points.size());
  for (const auto& p : points)
    if (auto q = affine(ProjectivePointd(inverse * homogenize(p)))) out.push_back(*q);
  return out;
}

Poly2 transform_implicit(const Poly2& g, const Transform<Rational>& t) {
  if (g.is_zero()) throw DegenerateResult("zero polynomial");
  const PlaneMap<Rational> m = substitution_map(t);
  const int n = g.total_degree();

  std::vector<Poly2> u_pow{Poly2::constant(1)}, v_pow{Poly2::constant(1)}, den_pow{Poly2::constant(1)};
  for (int k = 1; k <= n; ++k) {
    u_pow.push_back(u_pow.back() * m.u);
    v_pow.push_back(v_pow.back() * m.v);
    den_pow.push_back(den_pow.back() * m.denominator);
  }
  Poly2 out;
  for (const auto& term : g.terms())
    out += term.coeff * (u_pow[term.dx] * v_pow[term.dy] * den_pow[n - term.dx - term.dy]);
  if (out.is_zero()) throw DegenerateResult("substitution annihilates the equation");

  if (m.denominator.total_degree() > 0) {
    for (;;) {
      try {
        Poly2 reduced = exact_div(out, m.denominator);
        out = std::move(reduced);
      } catch (const InexactDivision&) {
        break;
      }
    }
  }
  if (out.total_degree() <= 0) throw DegenerateResult("transformed equation is constant");
  return normalize(out);
}

Expr transformed_function(const Expr& g, const Transform<Rational>& t) {
  validate(t);
  const Expr c = Expr::number(t.c);
  switch (t.kind) {
    case TransformKind::add_constant: return g + c;
    case TransformKind::scale_output: return c * g;
    case TransformKind::shift_input: return substitute(g, Expr::variable() - c);
    case TransformKind::scale_input: return substitute(g, c * Expr::variable());
  }
  return g;
}

std::optional<double> pulled_back_residual(const std::function<double(double, double)>& g, const PlaneMap<double>& m,
                                           const PlanePoint& p) {
  auto q = apply(m, p);
  if (!q) return std::nullopt;
  return std::abs(g(q->x(), q->y()));
}

namespace {

Composition finish(ProjectivePointd ff, ProjectivePointd fg, ProjectivePointd fgf, double a, double c) {
  Composition out;
  out.f_focus = ff;
  out.g_focus = fg;
  out.composite_focus = fgf;
  const double denom = 1 - a * c;
  if (denom != 0) out.t = (1 - c) / denom;
  out.f_at_infinity = is_at_infinity(ff);
  out.g_at_infinity = is_at_infinity(fg);
  out.composite_at_infinity = is_at_infinity(fgf);
  out.collinearity = collinearity_determinant(ff, fg, fgf);
  return out;
}

}  // namespace

Composition compose_linear_foci(double a, double b, double c, double d, const AxesConfig& cfg) {
  validate(cfg);
  const double w = cfg.delta;
  return finish({w, b, 1 - a}, {w * (2 - c), d, 1 - c}, {2 * w, b * c + d, 1 - a * c}, a, c);
}

Composition own_chart_foci(double a, double b, double c, double d, const AxesConfig& cfg) {
  validate(cfg);
  const double w = cfg.delta;
  return finish({w, b, 1 - a}, {w, d, 1 - c}, {w, b * c + d, 1 - a * c}, a, c);
}

}  // namespace arrowgraph
