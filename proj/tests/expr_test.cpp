#include <cmath>
#include <random>

#include "arrowgraph/errors.hpp"
#include "arrowgraph/expr.hpp"
#include "doctest.h"

using namespace arrowgraph;

namespace {

const Expr X = Expr::variable();
Expr num(long v) { return Expr::number(v); }

// Trees of the shape the parser produces: literals are non-negative with a
// finite decimal expansion.
Expr random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 12);
  std::uniform_int_distribution<int> small(0, 40);
  switch (pick(rng)) {
    case 0: return X;
    case 1: {
      Rational v(small(rng), std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : 4);
      v.canonicalize();
      return Expr::number(v);
    }
    case 2: return Expr::constant(small(rng) % 2 ? NamedConstant::pi : NamedConstant::e);
    case 3: return Expr::negate(random_tree(rng, depth - 1));
    case 4: return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
    case 5: return random_tree(rng, depth - 1) - random_tree(rng, depth - 1);
    case 6: return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
    case 7: return random_tree(rng, depth - 1) / random_tree(rng, depth - 1);
    case 8: return pow(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    default: return Expr::apply(static_cast<Builtin>(small(rng) % 6), random_tree(rng, depth - 1));
  }
}

// Smooth everywhere on the sampled interval so finite differences are meaningful.
Expr random_smooth(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  std::uniform_int_distribution<int> small(1, 5);
  switch (pick(rng)) {
    case 0: return X;
    case 1: return num(small(rng));
    case 2: return random_smooth(rng, depth - 1) + random_smooth(rng, depth - 1);
    case 3: return random_smooth(rng, depth - 1) - random_smooth(rng, depth - 1);
    case 4: return random_smooth(rng, depth - 1) * random_smooth(rng, depth - 1);
    case 5: return pow(random_smooth(rng, depth - 1), num(small(rng) % 3 + 1));
    case 6: return Expr::apply(small(rng) % 2 ? Builtin::sin : Builtin::cos, random_smooth(rng, depth - 1));
    default: {
      Expr u = random_smooth(rng, depth - 1);
      return Expr::apply(Builtin::exp, Expr::apply(Builtin::sin, u));
    }
  }
}

Expr random_rational_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  std::uniform_int_distribution<int> small(-4, 4);
  switch (pick(rng)) {
    case 0: return X;
    case 1: return num(small(rng));
    case 2: return random_rational_tree(rng, depth - 1) + random_rational_tree(rng, depth - 1);
    case 3: return random_rational_tree(rng, depth - 1) - random_rational_tree(rng, depth - 1);
    case 4: return random_rational_tree(rng, depth - 1) * random_rational_tree(rng, depth - 1);
    case 5: return random_rational_tree(rng, depth - 1) / random_rational_tree(rng, depth - 1);
    default: return pow(random_rational_tree(rng, depth - 1), num(small(rng) % 3));
  }
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("1/(4x)") == num(1) / (num(4) * X));
  CHECK(parse("2x^2") == num(2) * pow(X, num(2)));
  CHECK(parse("-x^2") == -pow(X, num(2)));
  CHECK(parse("x^-1") == pow(X, -num(1)));
  CHECK(parse("2^3^2") == pow(num(2), pow(num(3), num(2))));
  CHECK(parse("sin x^2") == pow(Expr::apply(Builtin::sin, X), num(2)));
  CHECK(parse("exp(x)") == Expr::apply(Builtin::exp, X));
  CHECK(parse("ex") == Expr::constant(NamedConstant::e) * X);
  CHECK(parse("2pi x") == num(2) * Expr::constant(NamedConstant::pi) * X);
  CHECK(parse("0.25") == Expr::number(Rational(1, 4)));
  CHECK(parse("x - 1 - 2") == (X - num(1)) - num(2));
}

TEST_CASE("syntax errors carry the offset and the expected tokens") {
  try {
    parse("sin x + ");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 8);
    CHECK(!e.expected().empty());
  }
  CHECK_THROWS_AS(parse("(x"), SyntaxError);
  CHECK_THROWS_AS(parse("x)"), SyntaxError);
  CHECK_THROWS_AS(parse("y"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("1.2.3"), SyntaxError);
  try {
    parse("x $ 1");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("evaluation and domain errors") {
  CHECK(evaluate(parse("x + 1/x"), 2.0) == doctest::Approx(2.5));
  CHECK(evaluate(parse("sqrt(x)"), 4.0) == doctest::Approx(2.0));
  CHECK(evaluate(parse("(-2)^3"), 0.0) == doctest::Approx(-8.0));
  CHECK_THROWS_AS(evaluate(parse("1/x"), 0.0), DomainError);
  CHECK_THROWS_AS(evaluate(parse("ln x"), 0.0), DomainError);
  CHECK_THROWS_AS(evaluate(parse("sqrt x"), -1.0), DomainError);
  CHECK_THROWS_AS(evaluate(parse("x^0.5"), -1.0), DomainError);
  CHECK_THROWS_AS(evaluate(parse("exp(exp(x))"), 10.0), DomainError);
}

TEST_CASE("derivatives") {
  CHECK(evaluate(differentiate(parse("x^2")), -1.0) == doctest::Approx(-2.0));
  CHECK(differentiate(parse("x^2")) == num(2) * X);
  CHECK(differentiate(parse("3")) == num(0));
  CHECK(evaluate(differentiate(parse("ln x")), 4.0) == doctest::Approx(0.25));
  CHECK(evaluate(differentiate(parse("x^x")), 2.0) == doctest::Approx(4.0 * (std::log(2.0) + 1.0)));
  CHECK(evaluate(differentiate(parse("tan x")), 0.3) == doctest::Approx(1.0 / std::pow(std::cos(0.3), 2)));
}

TEST_CASE("simplify folds literals") {
  CHECK(simplify(parse("1 + 2*3")) == num(7));
  CHECK(simplify(parse("0*x + 1*x")) == X);
  CHECK(simplify(parse("--x")) == X);
  CHECK(simplify(parse("x^1 + 0")) == X);
  CHECK(simplify(parse("2^-1")) == Expr::number(Rational(1, 2)));
}

TEST_CASE("printing") {
  CHECK(print(parse("1/(4x)")) == "1/(4*x)");
  CHECK(print(parse("x - (1 - x)")) == "x - (1 - x)");
  CHECK(print(parse("(x^2)^3")) == "(x^2)^3");
  CHECK(print(parse("sin x^2")) == "sin(x)^2");
  CHECK(print(Expr::number(Rational(-3))) == "(-3)");
  CHECK(print(Expr::number(Rational(1, 3))) == "(1/3)");
  CHECK(print(Expr::number(Rational(5, 2))) == "2.5");
}

TEST_CASE("rational recognition") {
  auto f = to_rational_function(parse("(x^2+x)/(x)"));
  REQUIRE(f);
  CHECK(f->numerator == Poly1{1, 1});
  CHECK(f->denominator == Poly1{1});
  auto g = to_rational_function(parse("1/(4x)"));
  REQUIRE(g);
  CHECK(g->numerator == Poly1{1});
  CHECK(g->denominator == Poly1{0, 4});
  auto h = to_rational_function(parse("x^-2 + 0.5"));
  REQUIRE(h);
  CHECK(h->numerator == Poly1{2, 0, 1});
  CHECK(h->denominator == Poly1{0, 0, 2});
  CHECK(!to_rational_function(parse("sin x")));
  CHECK(!to_rational_function(parse("x^pi")));
  CHECK(!to_rational_function(parse("x^0.5")));
  CHECK(!to_rational_function(parse("1/(x-x)")));
}

TEST_CASE("property: printing round-trips through the parser") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    Expr e = random_tree(rng, 4);
    const std::string text = print(e);
    CAPTURE(text);
    CHECK(parse(text) == e);
  }
}

TEST_CASE("property: symbolic derivative matches central differences") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> point(-1.5, 1.5);
  const double h = 1e-6;
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Expr e = random_smooth(rng, 3);
    Expr d = differentiate(e);
    const double x = point(rng);
    double fd, v;
    try {
      fd = (evaluate(e, x + h) - evaluate(e, x - h)) / (2 * h);
      v = evaluate(d, x);
    } catch (const DomainError&) {
      continue;
    }
    // Central differences lose accuracy on steep functions; skip those.
    if (std::abs(v) > 1e3) continue;
    ++compared;
    CAPTURE(print(e));
    CHECK(std::abs(fd - v) <= 1e-5 * (1 + std::abs(v)));
  }
  CHECK(compared > 200);
}

TEST_CASE("property: rational recognition agrees with evaluation") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> point(-3.0, 3.0);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Expr e = random_rational_tree(rng, 3);
    auto f = to_rational_function(e);
    if (!f) continue;
    for (int k = 0; k < 5; ++k) {
      const double x = point(rng);
      double direct;
      try {
        direct = evaluate(e, x);
      } catch (const DomainError&) {
        continue;
      }
      const double via = evaluate(*f, x);
      if (!std::isfinite(via)) continue;
      ++compared;
      CAPTURE(print(e));
      CHECK(std::abs(direct - via) <= 1e-12 * (1 + std::abs(direct)));
    }
  }
  CHECK(compared > 500);
}
