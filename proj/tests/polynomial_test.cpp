#include <random>

#include "arrowgraph/bivariate.hpp"
#include "doctest.h"

using namespace arrowgraph;

namespace {

// Sylvester-matrix determinant by Gaussian elimination over Q. Independent
// of the subresultant code path.
Rational sylvester_resultant(const Poly1& a, const Poly1& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) s[row][row + i] = a[m - i];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) s[n + row][row + i] = b[n - i];
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && s[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      Rational f = s[r][col] / s[col][col];
      for (int c = col; c < size; ++c) s[r][c] -= f * s[col][c];
    }
  }
  return det;
}

Poly1 random_poly(std::mt19937& rng, int degree, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Rational(coeff(rng)));
  if (c.back() == 0) c.back() = 1;
  return Poly1(std::move(c));
}

Poly1 t_poly() { return Poly1::variable(); }

}  // namespace

TEST_CASE("univariate arithmetic and trimming") {
  Poly1 p{Rational(1), Rational(2), Rational(0)};
  CHECK(p.degree() == 1);
  CHECK(Poly1{}.degree() == -1);
  Poly1 q = p * p;  // 1 + 4t + 4t^2
  CHECK(q == Poly1{1, 4, 4});
  CHECK(derivative(q) == Poly1{4, 8});
  CHECK(evaluate(q, Rational(1, 2)) == 4);
  CHECK((q - q).is_zero());
}

TEST_CASE("division, gcd and square-free part over Q") {
  Poly1 t = t_poly();
  Poly1 a = (t - Poly1{1}) * (t - Poly1{1}) * (t + Poly1{2});
  Poly1 b = (t - Poly1{1}) * (t + Poly1{3});
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(ring_gcd(a, b) == t - Poly1{1});
  CHECK(square_free_part(a) == (t - Poly1{1}) * (t + Poly1{2}));
  CHECK(exact_quotient(a, b * Poly1{0, 0} + (t - Poly1{1})) == (t - Poly1{1}) * (t + Poly1{2}));
  CHECK_THROWS_AS(exact_quotient(a, t + Poly1{5}), InexactDivision);
}

TEST_CASE("pseudo-remainder satisfies lc^(d+1) a = q b + r") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Poly1 a = random_poly(rng, 5), b = random_poly(rng, 3);
    Poly1 r = pseudo_remainder(a, b);
    Poly1 scaled = a * ring_pow(b.lead(), a.degree() - b.degree() + 1);
    CHECK(divmod(scaled, b).second == r);
  }
}

TEST_CASE("subresultant resultant agrees with the Sylvester determinant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Poly1 a = random_poly(rng, deg(rng)), b = random_poly(rng, deg(rng));
    CAPTURE(trial);
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }
  Poly1 t = t_poly();
  CHECK(resultant(t - Poly1{1}, (t - Poly1{1}) * (t + Poly1{4})) == 0);
}

TEST_CASE("bivariate resultant commutes with specialization") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-3, 3);
  auto random_bi_poly_in_t = [&](int degree) {
    std::vector<Poly2> coeffs;
    for (int i = 0; i <= degree; ++i)
      coeffs.push_back(Poly2::constant(small(rng)) + Rational(small(rng)) * Poly2::x() +
                       Rational(small(rng)) * Poly2::y() + Rational(small(rng)) * Poly2::x() * Poly2::y());
    return Polynomial<Poly2>(std::move(coeffs));
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_bi_poly_in_t(1 + trial % 4);
    auto b = random_bi_poly_in_t(1 + (trial / 4) % 4);
    Poly2 res = resultant(a, b);
    for (int probe = 0; probe < 5; ++probe) {
      Rational x(small(rng), 1 + probe), y(small(rng) + 7, 2);
      x.canonicalize();
      y.canonicalize();
      auto specialize = [&](const Polynomial<Poly2>& p) {
        std::vector<Rational> c;
        for (const auto& k : p.coefficients()) c.push_back(evaluate(k, x, y));
        return Poly1(std::move(c));
      };
      Poly1 sa = specialize(a), sb = specialize(b);
      if (sa.degree() != a.degree() || sb.degree() != b.degree()) continue;
      CHECK(evaluate(res, x, y) == sylvester_resultant(sa, sb));
    }
  }
}

TEST_CASE("bivariate gcd, contents and square-free part") {
  const Poly2 x = Poly2::x(), y = Poly2::y(), one = Poly2::constant(1);
  Poly2 circle = x * x + y * y - x;
  Poly2 line = y - Rational(2) * x + one;
  CHECK(normalize(gcd(circle * line, line * line)) == normalize(line));
  CHECK(normalize(square_free_part(circle * circle * line)) == normalize(circle * line));
  Poly2 with_content = (x - one) * (x + one) * circle;
  CHECK(content_in_x(with_content) == Poly1{-1, 0, 1});
  CHECK(content_in_y(with_content) == Poly1{1});
  CHECK(content_in_y((y + one) * circle) == Poly1{1, 1});
  CHECK(exact_div(with_content, circle) == (x - one) * (x + one));
}

TEST_CASE("normalization is primitive and sign-fixed") {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  Poly2 g = Rational(-3, 2) * x * x + Rational(3, 4) * y;
  Poly2 n = normalize(g);
  CHECK(n == Rational(2) * x * x - y);
  CHECK(normalize(Rational(5) * n) == n);
}

TEST_CASE("formatting") {
  const Poly2 x = Poly2::x(), y = Poly2::y(), one = Poly2::constant(1);
  CHECK(format_poly2((x - one) * (x - one) + Rational(4) * x * y) == "(x-1)^2 + 4*x*y");
  CHECK(format_expanded((x - one) * (x - one) + Rational(4) * x * y) == "x^2 + 4*x*y - 2*x + 1");
  CHECK(format_poly2(x * x + y * y - x) == "x^2 + y^2 - x");
  CHECK(format_poly2(y * y - Rational(4) * x) == "y^2 - 4*x");
  CHECK(format_poly2(Poly2{}) == "0");
}

TEST_CASE("substitution composes maps") {
  const Poly2 x = Poly2::x(), y = Poly2::y(), one = Poly2::constant(1);
  Poly2 g = x * x + y;
  CHECK(substitute(g, x + one, Rational(2) * y) == x * x + Rational(2) * x + one + Rational(2) * y);
  CHECK(restrict_to_y_axis(g + Rational(3) * y * y) == Poly1{0, 1, 3});
}
