#include "arrowgraph/bivariate.hpp"

#include <cmath>
#include <optional>

namespace arrowgraph {

double evaluation_magnitude(const Poly2& g, double x, double y) {
  double sum = 0.0;
  for (const auto& t : g.terms())
    sum += std::abs(to_double(t.coeff)) * std::pow(std::abs(x), t.dx) * std::pow(std::abs(y), t.dy);
  return sum;
}

Poly2 substitute(const Poly2& g, const Poly2& x_value, const Poly2& y_value) {
  return evaluate(g, x_value, y_value, [](const Rational& c) { return Poly2::constant(c); });
}

Poly1 restrict_to_y_axis(const Poly2& g) {
  std::vector<Rational> coeffs;
  for (const auto& row : g.in_y().coefficients()) coeffs.push_back(row.coefficient(0));
  return Poly1(std::move(coeffs));
}

Poly1 content_in_x(const Poly2& g) { return content(g.in_y()); }

Poly1 content_in_y(const Poly2& g) { return content_in_x(swap_variables(g)); }

Poly2 from_x_polynomial(const Poly1& p) { return Poly2(Poly2::Recursive::constant(p)); }

Poly2 from_y_polynomial(const Poly1& p) { return swap_variables(from_x_polynomial(p)); }

Poly2 gcd(const Poly2& a, const Poly2& b) { return Poly2(ring_gcd(a.in_y(), b.in_y())); }

Poly2 square_free_part(const Poly2& g) {
  if (g.degree_y() <= 0) return from_x_polynomial(square_free_part(g.in_y().coefficient(0)));
  return exact_div(g, gcd(g, partial_y(g)));
}

Poly2 normalize(const Poly2& g) {
  if (g.is_zero()) return g;
  auto terms = g.terms();
  Integer den = 1;
  for (const auto& t : terms) den = lcm(den, t.coeff.get_den());
  Integer num_gcd = 0;
  for (const auto& t : terms) num_gcd = gcd(num_gcd, Integer(t.coeff.get_num() * den / t.coeff.get_den()));
  Rational factor(den, num_gcd);
  factor.canonicalize();
  if (sgn(terms.front().coeff) < 0) factor = -factor;
  return factor * g;
}

namespace {

std::string monomial_text(int dx, int dy) {
  std::string out;
  auto power = [](const char* var, int d) {
    std::string s = var;
    if (d > 1) s += "^" + std::to_string(d);
    return s;
  };
  if (dx > 0) out += power("x", dx);
  if (dy > 0) {
    if (!out.empty()) out += "*";
    out += power("y", dy);
  }
  return out;
}

std::string coefficient_text(const Rational& magnitude) {
  std::string s = to_string(magnitude);
  return is_integer(magnitude) ? s : "(" + s + ")";
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::string term_text(const Rational& coeff, const std::string& monomial) {
  Rational mag = abs(coeff);
  if (monomial.empty()) return coefficient_text(mag);
  if (mag == 1) return monomial;
  return coefficient_text(mag) + "*" + monomial;
}

// If p = c * (x - r)^k with k >= 2, returns r.
std::optional<Rational> perfect_linear_power_root(const Poly1& p) {
  const int k = p.degree();
  if (k < 2) return std::nullopt;
  Rational r = Rational(-p[k - 1] / (p[k] * k));
  if (r == 0) return std::nullopt;
  Poly1 linear{Rational(-r), Rational(1)};
  if (ring_pow(linear, k) * p[k] != p) return std::nullopt;
  return r;
}

std::string format_terms(const Poly2& g, bool factor_y_free) {
  if (g.is_zero()) return "0";
  const Poly1 y_free = g.in_y().coefficient(0);
  std::optional<Rational> root = factor_y_free ? perfect_linear_power_root(y_free) : std::nullopt;
  std::string out;
  bool group_done = false;
  for (const auto& t : g.terms()) {
    if (root && t.dy == 0) {
      if (group_done) continue;
      group_done = true;
      const Rational& lead = y_free.lead();
      std::string base = "(x" + std::string(*root > 0 ? "-" : "+") + to_string(Rational(abs(*root))) + ")^" +
                         std::to_string(y_free.degree());
      append_signed(out, sgn(lead) < 0, abs(lead) == 1 ? base : coefficient_text(abs(lead)) + "*" + base);
      continue;
    }
    append_signed(out, sgn(t.coeff) < 0, term_text(t.coeff, monomial_text(t.dx, t.dy)));
  }
  return out;
}

}  // namespace

std::string format_poly2(const Poly2& g) { return format_terms(g, true); }

std::string format_expanded(const Poly2& g) { return format_terms(g, false); }

}  // namespace arrowgraph
