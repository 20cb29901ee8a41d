#pragma once

// Dense univariate polynomials over a coefficient ring. The same template is
// used for Q[t], for Q[x][y] (the recursive form of a bivariate polynomial)
// and for Q[x, y][t], the ring the implicitization resultant lives in.

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "arrowgraph/errors.hpp"
#include "arrowgraph/rational.hpp"

namespace arrowgraph {

template <typename Scalar>
class Polynomial;

/// Ring constants and predicates. Specialized for every coefficient type.
template <typename T>
struct ring_traits;

template <typename Scalar>
bool is_zero(const Polynomial<Scalar>& p);

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static constexpr bool is_field = true;
};

template <>
struct ring_traits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long n) { return static_cast<double>(n); }
  static constexpr bool is_field = true;
};

template <typename Scalar>
struct ring_traits<Polynomial<Scalar>> {
  static Polynomial<Scalar> zero() { return {}; }
  static Polynomial<Scalar> one() { return Polynomial<Scalar>::constant(ring_traits<Scalar>::one()); }
  static Polynomial<Scalar> from_int(long n) {
    return Polynomial<Scalar>::constant(ring_traits<Scalar>::from_int(n));
  }
  static constexpr bool is_field = false;
};

template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  static Polynomial monomial(Scalar c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, ring_traits<Scalar>::zero());
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  /// The polynomial t.
  static Polynomial variable() { return monomial(ring_traits<Scalar>::one(), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  Scalar coefficient(int i) const {
    if (i < 0 || i > degree()) return ring_traits<Scalar>::zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const Scalar& lead() const {
    assert(!is_zero());
    return coeffs_.back();
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  void set_coefficient(int i, Scalar value) {
    if (i >= static_cast<int>(coeffs_.size()))
      coeffs_.resize(static_cast<std::size_t>(i) + 1, ring_traits<Scalar>::zero());
    coeffs_[static_cast<std::size_t>(i)] = std::move(value);
    trim();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<Scalar>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<Scalar>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& k) {
    for (auto& c : coeffs_) c = Scalar(c * k);
    trim();
    return *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    using arrowgraph::is_zero;
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Poly1 = Polynomial<Rational>;

template <typename Scalar>
bool is_zero(const Polynomial<Scalar>& p) {
  return p.is_zero();
}

template <typename Scalar>
Polynomial<Scalar> operator+(Polynomial<Scalar> a, const Polynomial<Scalar>& b) {
  a += b;
  return a;
}

template <typename Scalar>
Polynomial<Scalar> operator-(Polynomial<Scalar> a, const Polynomial<Scalar>& b) {
  a -= b;
  return a;
}

template <typename Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& a) {
  return Polynomial<Scalar>() - a;
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, ring_traits<Scalar>::zero());
  for (int i = 0; i <= a.degree(); ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return Polynomial<Scalar>(std::move(out));
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Scalar& k, Polynomial<Scalar> p) {
  p *= k;
  return p;
}

template <typename Scalar>
Polynomial<Scalar> operator*(Polynomial<Scalar> p, const Scalar& k) {
  p *= k;
  return p;
}

/// Multiplies by t^n.
template <typename Scalar>
Polynomial<Scalar> shift_up(const Polynomial<Scalar>& p, int n) {
  if (p.is_zero() || n == 0) return p;
  std::vector<Scalar> out(static_cast<std::size_t>(n), ring_traits<Scalar>::zero());
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return Polynomial<Scalar>(std::move(out));
}

template <typename T>
T ring_pow(const T& base, int exponent) {
  assert(exponent >= 0);
  T result = ring_traits<T>::one();
  T b = base;
  while (exponent > 0) {
    if (exponent & 1) result = T(result * b);
    exponent >>= 1;
    if (exponent) b = T(b * b);
  }
  return result;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() <= 0) return {};
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out.push_back(Scalar(p[i] * ring_traits<Scalar>::from_int(i)));
  return Polynomial<Scalar>(std::move(out));
}

/// Horner evaluation in the coefficient ring.
template <typename Scalar>
Scalar evaluate(const Polynomial<Scalar>& p, const Scalar& t) {
  Scalar acc = ring_traits<Scalar>::zero();
  for (int i = p.degree(); i >= 0; --i) acc = Scalar(acc * t + p[i]);
  return acc;
}

inline double evaluate_double(const Poly1& p, double t) {
  double acc = 0.0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * t + to_double(p[i]);
  return acc;
}

/// Composition p(q(t)).
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Polynomial<Scalar>::constant(p[i]);
  return acc;
}

// Exact division in the coefficient ring. Overloads for each ring used.
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw InexactDivision("division by zero");
  return Rational(a / b);
}

template <typename Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b);

/// Quotient and remainder over a field.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  static_assert(ring_traits<Scalar>::is_field, "divmod needs field coefficients");
  if (b.is_zero()) throw InexactDivision("polynomial division by zero");
  Polynomial<Scalar> q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Scalar factor = Scalar(r.lead() / b.lead());
    Polynomial<Scalar> step = Polynomial<Scalar>::monomial(factor, shift);
    q += step;
    r -= step * b;
  }
  return {q, r};
}

/// lc(b)^(deg a - deg b + 1) * a mod b, valid over any integral domain.
template <typename Scalar>
Polynomial<Scalar> pseudo_remainder(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw InexactDivision("pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree();
  const Scalar& lb = b.lead();
  Polynomial<Scalar> r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Polynomial<Scalar> sub = shift_up(b, r.degree() - b.degree()) * Scalar(r.lead());
    r = r * lb - sub;
    ++steps;
  }
  if (steps < delta + 1) r *= ring_pow(lb, delta + 1 - steps);
  return r;
}

/// a / b where b is known to divide a; throws InexactDivision otherwise.
template <typename Scalar>
Polynomial<Scalar> exact_quotient(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw InexactDivision("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InexactDivision("inexact polynomial division");
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, ring_traits<Scalar>::zero());
  Polynomial<Scalar> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Scalar factor = exact_div(r.lead(), b.lead());
    r -= shift_up(b, shift) * factor;
    q[static_cast<std::size_t>(shift)] = std::move(factor);
  }
  if (!r.is_zero()) throw InexactDivision("inexact polynomial division");
  return Polynomial<Scalar>(std::move(q));
}

template <typename Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  return exact_quotient(a, b);
}

/// Divides every coefficient by `d` exactly.
template <typename Scalar>
Polynomial<Scalar> divide_coefficients(const Polynomial<Scalar>& p, const Scalar& d) {
  std::vector<Scalar> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(exact_div(c, d));
  return Polynomial<Scalar>(std::move(out));
}

/// Resultant by the subresultant pseudo-remainder sequence. Coefficient ring
/// must be an integral domain with exact division.
template <typename D>
D resultant(Polynomial<D> a, Polynomial<D> b) {
  using R = ring_traits<D>;
  if (a.is_zero() || b.is_zero()) return R::zero();
  bool negate = false;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
  }
  auto finish = [&](D value) { return negate ? D(R::zero() - value) : value; };
  if (b.degree() == 0) return finish(ring_pow(b.lead(), a.degree()));

  D g = R::one();
  D h = R::one();
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    Polynomial<D> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return R::zero();
    b = divide_coefficients(r, D(g * ring_pow(h, delta)));
    g = a.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  D value = da == 1 ? b.lead() : exact_div(ring_pow(b.lead(), da), ring_pow(h, da - 1));
  return finish(std::move(value));
}

/// Leading coefficient in the base field, recursing through nested polynomials.
inline const Rational& base_lead(const Rational& r) { return r; }

template <typename Scalar>
decltype(auto) base_lead(const Polynomial<Scalar>& p) {
  return base_lead(p.lead());
}

inline Rational scale_base(const Rational& r, const Rational& k) { return Rational(r * k); }

/// Multiplies every base-field coefficient of a nested polynomial by k.
template <typename Scalar>
Polynomial<Scalar> scale_base(const Polynomial<Scalar>& p, const Rational& k) {
  std::vector<Scalar> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(scale_base(c, k));
  return Polynomial<Scalar>(std::move(out));
}

/// Associate whose innermost leading coefficient is 1.
template <typename Scalar>
Polynomial<Scalar> unit_normal(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return scale_base(p, Rational(1 / base_lead(p)));
}

// Greatest common divisors, normalized by unit_normal.
inline Rational ring_gcd(const Rational& a, const Rational& b) {
  return is_zero(a) && is_zero(b) ? Rational(0) : Rational(1);
}

template <typename Scalar>
Polynomial<Scalar> ring_gcd(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b);

/// gcd of the coefficients.
template <typename Scalar>
Scalar content(const Polynomial<Scalar>& p) {
  Scalar c = ring_traits<Scalar>::zero();
  for (const auto& coeff : p.coefficients()) {
    c = ring_gcd(c, coeff);
  }
  return c;
}

template <typename Scalar>
Polynomial<Scalar> primitive_part(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return divide_coefficients(p, content(p));
}

template <typename Scalar>
Polynomial<Scalar> ring_gcd(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  if constexpr (ring_traits<Scalar>::is_field) {
    Polynomial<Scalar> x = a, y = b;
    while (!y.is_zero()) {
      Polynomial<Scalar> r = divmod(x, y).second;
      x = std::move(y);
      y = std::move(r);
    }
    return unit_normal(x);
  } else {
    // Primitive remainder sequence over the coefficient domain.
    Scalar c = ring_gcd(content(a), content(b));
    Polynomial<Scalar> x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero() && y.degree() > 0) {
      Polynomial<Scalar> r = pseudo_remainder(x, y);
      x = std::move(y);
      y = r.is_zero() ? r : primitive_part(r);
    }
    Polynomial<Scalar> g = y.is_zero() ? x : Polynomial<Scalar>::constant(ring_traits<Scalar>::one());
    return unit_normal(Polynomial<Scalar>(primitive_part(g) * c));
  }
}

/// Square-free part over a field of characteristic zero.
template <typename Scalar>
Polynomial<Scalar> square_free_part(const Polynomial<Scalar>& p) {
  if (p.degree() <= 0) return p;
  return unit_normal(exact_quotient(p, ring_gcd(p, derivative(p))));
}

}  // namespace arrowgraph
