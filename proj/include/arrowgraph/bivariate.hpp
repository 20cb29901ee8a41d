#pragma once

#include <string>
#include <vector>

#include "arrowgraph/polynomial.hpp"

namespace arrowgraph {

/// Polynomial in x and y. Stored recursively as a polynomial in y whose
/// coefficients are polynomials in x, so the generic univariate algorithms
/// (exact division, pseudo-remainders, gcd) apply unchanged.
template <typename Scalar>
class BivariatePolynomial {
 public:
  using Univariate = Polynomial<Scalar>;
  using Recursive = Polynomial<Univariate>;

  struct Term {
    int dx;
    int dy;
    Scalar coeff;
  };

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(Recursive rows) : rows_(std::move(rows)) {}

  static BivariatePolynomial constant(const Scalar& c) {
    return BivariatePolynomial(Recursive::constant(Univariate::constant(c)));
  }
  static BivariatePolynomial monomial(const Scalar& c, int dx, int dy) {
    return BivariatePolynomial(Recursive::monomial(Univariate::monomial(c, dx), dy));
  }
  static BivariatePolynomial x() { return monomial(ring_traits<Scalar>::one(), 1, 0); }
  static BivariatePolynomial y() { return monomial(ring_traits<Scalar>::one(), 0, 1); }

  static BivariatePolynomial from_terms(const std::vector<Term>& terms) {
    BivariatePolynomial out;
    for (const auto& t : terms) out += monomial(t.coeff, t.dx, t.dy);
    return out;
  }

  bool is_zero() const { return rows_.is_zero(); }
  const Recursive& in_y() const { return rows_; }

  Scalar coefficient(int dx, int dy) const { return rows_.coefficient(dy).coefficient(dx); }

  int degree_y() const { return rows_.degree(); }
  int degree_x() const {
    int d = -1;
    for (const auto& row : rows_.coefficients()) d = std::max(d, row.degree());
    return d;
  }
  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (int j = 0; j <= rows_.degree(); ++j)
      if (!rows_[j].is_zero()) d = std::max(d, rows_[j].degree() + j);
    return d;
  }

  /// Nonzero terms in graded-lex order with x > y: higher total degree
  /// first, then higher power of x.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (int total = total_degree(); total >= 0; --total)
      for (int dx = total; dx >= 0; --dx) {
        Scalar c = coefficient(dx, total - dx);
        if (!arrowgraph::is_zero(c)) out.push_back({dx, total - dx, std::move(c)});
      }
    return out;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    rows_ += o.rows_;
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    rows_ -= o.rows_;
    return *this;
  }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a) { return BivariatePolynomial() - a; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return BivariatePolynomial(a.rows_ * b.rows_);
  }
  friend BivariatePolynomial operator*(const Scalar& k, const BivariatePolynomial& a) {
    return BivariatePolynomial(scale_all(a.rows_, k));
  }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.rows_ == b.rows_; }

 private:
  static Recursive scale_all(const Recursive& r, const Scalar& k) {
    std::vector<Univariate> out;
    for (const auto& row : r.coefficients()) out.push_back(row * k);
    return Recursive(std::move(out));
  }

  Recursive rows_;
};

using Poly2 = BivariatePolynomial<Rational>;

template <typename Scalar>
struct ring_traits<BivariatePolynomial<Scalar>> {
  static BivariatePolynomial<Scalar> zero() { return {}; }
  static BivariatePolynomial<Scalar> one() {
    return BivariatePolynomial<Scalar>::constant(ring_traits<Scalar>::one());
  }
  static BivariatePolynomial<Scalar> from_int(long n) {
    return BivariatePolynomial<Scalar>::constant(ring_traits<Scalar>::from_int(n));
  }
  static constexpr bool is_field = false;
};

template <typename Scalar>
bool is_zero(const BivariatePolynomial<Scalar>& p) {
  return p.is_zero();
}

template <typename Scalar>
BivariatePolynomial<Scalar> exact_div(const BivariatePolynomial<Scalar>& a, const BivariatePolynomial<Scalar>& b) {
  return BivariatePolynomial<Scalar>(exact_quotient(a.in_y(), b.in_y()));
}

/// G(x, y) evaluated in any type the coefficients convert into.
template <typename Scalar, typename T, typename Convert>
T evaluate(const BivariatePolynomial<Scalar>& g, const T& x, const T& y, Convert convert) {
  T acc{};
  const auto& rows = g.in_y();
  for (int j = rows.degree(); j >= 0; --j) {
    T row{};
    for (int i = rows[j].degree(); i >= 0; --i) row = T(row * x + convert(rows[j][i]));
    acc = T(acc * y + row);
  }
  return acc;
}

inline Rational evaluate(const Poly2& g, const Rational& x, const Rational& y) {
  return evaluate(g, x, y, [](const Rational& c) { return c; });
}

inline double evaluate_double(const Poly2& g, double x, double y) {
  return evaluate(g, x, y, [](const Rational& c) { return to_double(c); });
}

inline double evaluate(const BivariatePolynomial<double>& g, double x, double y) {
  return evaluate(g, x, y, [](double c) { return c; });
}

/// Sum of |coefficient * x^i y^j|, the natural floating-point scale of G at (x, y).
double evaluation_magnitude(const Poly2& g, double x, double y);

/// Exchanges the roles of x and y.
template <typename Scalar>
BivariatePolynomial<Scalar> swap_variables(const BivariatePolynomial<Scalar>& g) {
  std::vector<typename BivariatePolynomial<Scalar>::Term> ts = g.terms();
  for (auto& t : ts) std::swap(t.dx, t.dy);
  return BivariatePolynomial<Scalar>::from_terms(ts);
}

template <typename Scalar>
BivariatePolynomial<Scalar> partial_y(const BivariatePolynomial<Scalar>& g) {
  return BivariatePolynomial<Scalar>(derivative(g.in_y()));
}

template <typename Scalar>
BivariatePolynomial<Scalar> partial_x(const BivariatePolynomial<Scalar>& g) {
  std::vector<Polynomial<Scalar>> rows;
  for (const auto& row : g.in_y().coefficients()) rows.push_back(derivative(row));
  return BivariatePolynomial<Scalar>(typename BivariatePolynomial<Scalar>::Recursive(std::move(rows)));
}

/// G(x, y) with x and y replaced by polynomials.
Poly2 substitute(const Poly2& g, const Poly2& x_value, const Poly2& y_value);

/// G(0, y) as a polynomial in y.
Poly1 restrict_to_y_axis(const Poly2& g);

/// Content with respect to y: the gcd of the y-coefficients, a monic polynomial in x.
Poly1 content_in_x(const Poly2& g);
/// Content with respect to x, a monic polynomial in y.
Poly1 content_in_y(const Poly2& g);

Poly2 from_x_polynomial(const Poly1& p);
Poly2 from_y_polynomial(const Poly1& p);

/// gcd over Q[x, y], unit normalized.
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Removes repeated factors. Precondition: content_in_x(g) == 1.
Poly2 square_free_part(const Poly2& g);

/// Primitive integer form (coefficients coprime integers) with the
/// graded-lex leading coefficient positive. Zero stays zero.
Poly2 normalize(const Poly2& g);

/// Human-readable form, e.g. "(x-1)^2 + 4*x*y". A y-free part that is a
/// perfect power of a linear form is printed factored.
std::string format_poly2(const Poly2& g);

/// Fully expanded form in graded-lex order, e.g. "x^2 + 4*x*y - 2*x + 1".
std::string format_expanded(const Poly2& g);

}  // namespace arrowgraph
