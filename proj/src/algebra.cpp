#include "arrowgraph/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <random>

#include "arrowgraph/errors.hpp"

namespace arrowgraph {

namespace {

// Scales the polynomials jointly to integer coefficients with gcd 1.
void make_jointly_primitive(std::initializer_list<Poly1*> polys) {
  Integer den = 1;
  for (const auto* p : polys)
    for (const auto& c : p->coefficients()) den = lcm(den, c.get_den());
  Integer g = 0;
  for (const auto* p : polys)
    for (const auto& c : p->coefficients()) g = gcd(g, Integer(c.get_num() * (den / c.get_den())));
  if (g == 0) return;
  Rational factor(den, g);
  factor.canonicalize();
  for (auto* p : polys) *p *= factor;
}

// x * C(t) - A(t) as a polynomial in t over Q[x, y].
Polynomial<Poly2> linear_in_t(const Poly1& c, const Poly1& a, const Poly2& var) {
  const int n = std::max(c.degree(), a.degree());
  std::vector<Poly2> coeffs;
  for (int k = 0; k <= n; ++k) coeffs.push_back(c.coefficient(k) * var - Poly2::constant(a.coefficient(k)));
  return Polynomial<Poly2>(std::move(coeffs));
}

std::string format_factor(const Poly2& g) { return format_poly2(normalize(g)); }

struct Probe {
  Rational x, y;
};

std::vector<Probe> probe_points(const FocalTriple& tr, int count) {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> num(-97, 97), den(1, 41);
  std::vector<Probe> out;
  for (int attempt = 0; out.size() < static_cast<std::size_t>(count) && attempt < 50 * count; ++attempt) {
    Rational t(num(rng), den(rng));
    t.canonicalize();
    const Rational c = evaluate(tr.c, t);
    if (c == 0) continue;
    out.push_back({Rational(evaluate(tr.a, t) / c), Rational(evaluate(tr.b, t) / c)});
  }
  return out;
}

bool vanishes_on(const Poly2& g, const std::vector<Probe>& probes) {
  for (const auto& p : probes)
    if (evaluate(g, p.x, p.y) != 0) return false;
  return true;
}

}  // namespace

FocalTriple focal_triple(const RationalFunction& rf) {
  const Poly1& p = rf.numerator;
  const Poly1& q = rf.denominator;
  const Poly1 dp = derivative(p), dq = derivative(q);
  const Poly1 t = Poly1::variable();
  FocalTriple tr{q * q, p * q - t * (dp * q - p * dq), p * dq - dp * q + q * q};
  const Poly1 g = ring_gcd(ring_gcd(tr.a, tr.b), tr.c);
  if (g.degree() > 0) {
    tr.a = exact_quotient(tr.a, g);
    tr.b = exact_quotient(tr.b, g);
    tr.c = exact_quotient(tr.c, g);
  }
  make_jointly_primitive({&tr.a, &tr.b, &tr.c});
  return tr;
}

int expected_degree(int p, int q) { return p <= q + 1 ? 2 * q : p + q; }

Poly2 implicitize(const FocalTriple& triple, ImplicitizationReport* report) {
  if (triple.a.degree() <= 0 && triple.b.degree() <= 0 && triple.c.degree() <= 0)
    throw DegenerateParametrization("constant parametrization traces a single point");

  const Poly2 res = resultant(linear_in_t(triple.c, triple.a, Poly2::x()), linear_in_t(triple.c, triple.b, Poly2::y()));
  if (res.is_zero()) throw DegenerateParametrization("resultant vanishes identically");

  ImplicitizationReport local;
  ImplicitizationReport& rep = report ? *report : local;
  rep = {};
  const auto probes = probe_points(triple, 20);
  rep.probes = static_cast<int>(probes.size());

  Poly2 g = res;
  // Factors depending on one variable only are extraneous unless the curve
  // itself lies on them.
  for (int pass = 0; pass < 2; ++pass) {
    const Poly1 content = pass == 0 ? content_in_x(g) : content_in_y(g);
    if (content.degree() <= 0) continue;
    const Poly2 factor = pass == 0 ? from_x_polynomial(content) : from_y_polynomial(content);
    if (vanishes_on(factor, probes)) continue;
    g = exact_div(g, factor);
    rep.removed_factors.push_back(format_factor(factor));
  }

  const Poly2 reduced = square_free_part(g);
  if (reduced.total_degree() <= 0) throw DegenerateParametrization("resultant has no curve component");
  rep.multiplicity = std::max(1, g.total_degree() / reduced.total_degree());
  if (!vanishes_on(reduced, probes)) throw DegenerateParametrization("eliminant misses parametrized points");
  return normalize(reduced);
}

RationalFunction family_function(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                 const Rational& e) {
  if (d == 0 && e == 0) throw DegenerateFamily("denominator d x + e is zero");
  const Poly1 num{c, b, a}, den{e, d};
  const RationalFunction rf = make_rational_function(num, den);
  if (rf.denominator.degree() == 0 && rf.numerator.degree() <= 1)
    throw DegenerateFamily("function is linear, its focal curve is a single point");
  return rf;
}

Poly2 conic_from_family(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const Rational& e) {
  family_function(a, b, c, d, e);
  auto term = [](const Rational& k, int dx, int dy) { return Poly2::monomial(k, dx, dy); };
  Poly2 g = term(b * b - 4 * a * c + 4 * c * d - 2 * b * e + e * e, 2, 0) +
            term(-2 * (b * d - 2 * a * e + d * e), 1, 1) + term(d * d, 0, 2) +
            term(-2 * (2 * c * d - b * e + e * e), 1, 0) + term(2 * d * e, 0, 1) + term(e * e, 0, 0);
  return normalize(g);
}

const char* conic_class_name(ConicClass c) {
  switch (c) {
    case ConicClass::ellipse: return "ellipse";
    case ConicClass::circle: return "circle";
    case ConicClass::parabola: return "parabola";
    case ConicClass::hyperbola: return "hyperbola";
    case ConicClass::degenerate: return "degenerate";
  }
  return "?";
}

ConicClass classify_conic(const Poly2& g) {
  if (g.total_degree() != 2) throw NotAConic("total degree is " + std::to_string(g.total_degree()) + ", not 2");
  const Rational A = g.coefficient(2, 0), B = g.coefficient(1, 1), C = g.coefficient(0, 2);
  const Rational D = g.coefficient(1, 0), E = g.coefficient(0, 1), F = g.coefficient(0, 0);
  // 4 * det of the symmetric matrix [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]].
  const Rational det4 = 4 * A * C * F + B * E * D - A * E * E - C * D * D - F * B * B;
  if (det4 == 0) return ConicClass::degenerate;
  const Rational disc = B * B - 4 * A * C;
  if (disc > 0) return ConicClass::hyperbola;
  if (disc == 0) return ConicClass::parabola;
  if (A == C && B == 0) return ConicClass::circle;
  return ConicClass::ellipse;
}

std::vector<std::complex<double>> polynomial_roots(const Poly1& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  const double lead = to_double(p.lead());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -to_double(p[i]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

bool has_distinct_critical_values(const Poly1& f, double tol) {
  const auto critical = polynomial_roots(derivative(f));
  std::vector<std::complex<double>> values;
  for (const auto& z : critical) {
    std::complex<double> acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = acc * z + to_double(f[i]);
    values.push_back(acc);
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= tol * (1 + std::abs(values[i]))) return false;
  return true;
}

AxisMeet vertical_axis_meet(const Poly2& g) {
  AxisMeet out;
  const Poly1 on_axis = restrict_to_y_axis(g);
  const int n = g.total_degree();
  // Top-degree part of G at (0 : 1 : 0) is the coefficient of y^n.
  out.at_infinity = g.coefficient(0, n) == 0;
  if (on_axis.degree() <= 0) return out;

  const Poly2 gx = partial_x(g), gy = partial_y(g);
  const Poly1 simple = square_free_part(on_axis);
  auto add_exact = [&](const Rational& y) {
    const bool vertical = evaluate(gy, Rational(0), y) == 0 && evaluate(gx, Rational(0), y) != 0;
    out.points.push_back({PlanePoint(0, to_double(y)), y, vertical});
  };

  if (simple.degree() == 1) {
    add_exact(Rational(-simple[0] / simple[1]));
  } else if (simple.degree() == 2) {
    const Rational disc = simple[1] * simple[1] - 4 * simple[2] * simple[0];
    if (disc >= 0) {
      mpz_class num = disc.get_num(), den = disc.get_den();
      mpz_class sn, sd;
      const bool square = mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
      if (square) {
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        Rational root(sn, sd);
        root.canonicalize();
        add_exact(Rational((-simple[1] - root) / (2 * simple[2])));
        add_exact(Rational((-simple[1] + root) / (2 * simple[2])));
      } else {
        const double r = std::sqrt(to_double(disc));
        for (double sign : {-1.0, 1.0}) {
          const double y = (-to_double(simple[1]) + sign * r) / (2 * to_double(simple[2]));
          out.points.push_back({PlanePoint(0, y), std::nullopt, false});
        }
      }
    }
  } else {
    for (const auto& z : polynomial_roots(simple)) {
      if (std::abs(z.imag()) > 1e-9 * (1 + std::abs(z))) continue;
      const double y = z.real();
      const double gyv = evaluate_double(gy, 0, y), gxv = evaluate_double(gx, 0, y);
      const double scale = 1 + evaluation_magnitude(gy, 0, y);
      out.points.push_back({PlanePoint(0, y), std::nullopt, std::abs(gyv) <= 1e-9 * scale && gxv != 0});
    }
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const AxisPoint& p, const AxisPoint& q) { return p.point.y() < q.point.y(); });
  return out;
}

ImplicitEquation implicit_equation(const Expr& f) {
  auto rf = to_rational_function(f);
  if (!rf) throw NotRational("'" + print(f) + "' is not a rational function of x");
  ImplicitEquation eq;
  eq.function = *rf;
  eq.equation = implicitize(focal_triple(*rf), &eq.report);
  eq.degree = eq.equation.total_degree();
  if (eq.degree == 2) eq.conic = classify_conic(eq.equation);
  return eq;
}

std::string describe(const ImplicitEquation& eq) {
  std::string s = format_poly2(eq.equation) + " = 0";
  if (eq.conic) s += std::string(" [") + conic_class_name(*eq.conic) + "]";
  return s;
}

nlohmann::json poly2_to_json(const Poly2& g) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : g.terms())
    terms.push_back({{"dx", t.dx}, {"dy", t.dy}, {"num", t.coeff.get_num().get_str()},
                     {"den", t.coeff.get_den().get_str()}});
  return {{"terms", terms}};
}

Poly2 poly2_from_json(const nlohmann::json& j) try {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("expected {\"terms\": [...]}");
  std::vector<Poly2::Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object()) throw std::invalid_argument("term must be an object");
    const int dx = t.at("dx").get<int>(), dy = t.at("dy").get<int>();
    if (dx < 0 || dy < 0) throw std::invalid_argument("negative exponent");
    auto big = [&](const char* key) -> Integer {
      const auto& v = t.at(key);
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      Integer out;
      if (out.set_str(s, 10) != 0) throw std::invalid_argument(std::string("bad integer in '") + key + "'");
      return out;
    };
    const Integer num = big("num");
    const Integer den = t.contains("den") ? big("den") : Integer(1);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational c(num, den);
    c.canonicalize();
    terms.push_back({dx, dy, c});
  }
  return Poly2::from_terms(terms);
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("malformed polynomial: ") + e.what());
}

}  // namespace arrowgraph
