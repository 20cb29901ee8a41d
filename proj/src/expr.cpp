#include "arrowgraph/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "arrowgraph/errors.hpp"

namespace arrowgraph {

struct Expr::Node {
  NodeKind kind = NodeKind::number;
  Rational value;
  NamedConstant constant = NamedConstant::pi;
  Builtin fn = Builtin::sin;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::sin: return "sin";
    case Builtin::cos: return "cos";
    case Builtin::tan: return "tan";
    case Builtin::exp: return "exp";
    case Builtin::ln: return "ln";
    case Builtin::sqrt: return "sqrt";
  }
  return "?";
}

Expr::Expr() {
  static const auto zero = std::make_shared<const Node>();
  node_ = zero;
}

Expr Expr::number(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::number;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::constant(NamedConstant c) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::named_constant;
  n->constant = c;
  return Expr(std::move(n));
}

Expr Expr::variable() {
  static const auto var = [] {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::variable;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return Expr(var);
}

Expr Expr::negate(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::negate;
  n->a = std::move(child.node_);
  return Expr(std::move(n));
}

Expr Expr::binary(NodeKind kind, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Expr(std::move(n));
}

Expr Expr::apply(Builtin fn, Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::apply;
  n->fn = fn;
  n->a = std::move(child.node_);
  return Expr(std::move(n));
}

NodeKind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
NamedConstant Expr::named_constant() const { return node_->constant; }
Builtin Expr::builtin() const { return node_->fn; }
Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case NodeKind::number: return x.value() == y.value();
    case NodeKind::named_constant: return x.named_constant() == y.named_constant();
    case NodeKind::variable: return true;
    case NodeKind::negate: return x.lhs() == y.lhs();
    case NodeKind::apply: return x.builtin() == y.builtin() && x.lhs() == y.lhs();
    default: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

Expr operator+(Expr a, Expr b) { return Expr::binary(NodeKind::add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(NodeKind::subtract, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(NodeKind::multiply, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(NodeKind::divide, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::negate(std::move(a)); }
Expr pow(Expr base, Expr exponent) { return Expr::binary(NodeKind::power, std::move(base), std::move(exponent)); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { number, variable, pi, e, function, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
  Rational value;
  Builtin fn = Builtin::sin;
};

const std::vector<std::string>& atom_starts() {
  static const std::vector<std::string> v{"number", "'x'", "'pi'", "'e'", "function name", "'('"};
  return v;
}

std::vector<std::string> unary_starts() {
  std::vector<std::string> v{"'-'"};
  v.insert(v.end(), atom_starts().begin(), atom_starts().end());
  return v;
}

std::vector<Token> tokenize(std::string_view text) {
  struct Word {
    const char* spelling;
    Tok kind;
    Builtin fn;
  };
  // Longest spellings first so "exp" wins over "e".
  static const Word words[] = {
      {"sqrt", Tok::function, Builtin::sqrt}, {"sin", Tok::function, Builtin::sin},
      {"cos", Tok::function, Builtin::cos},   {"tan", Tok::function, Builtin::tan},
      {"exp", Tok::function, Builtin::exp},   {"ln", Tok::function, Builtin::ln},
      {"pi", Tok::pi, Builtin::sin},          {"e", Tok::e, Builtin::sin},
      {"x", Tok::variable, Builtin::sin},
  };

  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) ++j;
      std::string lexeme(text.substr(i, j - i));
      Rational value;
      try {
        value = parse_rational(lexeme);
      } catch (const std::invalid_argument&) {
        throw SyntaxError(i, {"number"}, "'" + lexeme + "'");
      }
      out.push_back({Tok::number, i, lexeme, std::move(value)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      bool matched = false;
      for (const auto& w : words) {
        if (text.substr(i).starts_with(w.spelling)) {
          out.push_back({w.kind, i, w.spelling, Rational(0), w.fn});
          i += std::char_traits<char>::length(w.spelling);
          matched = true;
          break;
        }
      }
      if (!matched) throw SyntaxError(i, atom_starts(), "'" + std::string(1, c) + "'");
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw SyntaxError(i, unary_starts(), "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, i, std::string(1, c), Rational(0)});
    ++i;
  }
  out.push_back({Tok::end, text.size(), "end of input", Rational(0)});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::end) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError(t.offset, std::move(expected), t.kind == Tok::end ? t.text : "'" + t.text + "'");
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::number:
      case Tok::variable:
      case Tok::pi:
      case Tok::e:
      case Tok::function:
      case Tok::lparen: return true;
      default: return false;
    }
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const NodeKind kind = next().kind == Tok::plus ? NodeKind::add : NodeKind::subtract;
      lhs = Expr::binary(kind, lhs, term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (peek().kind == Tok::star || peek().kind == Tok::slash) {
        const NodeKind kind = next().kind == Tok::star ? NodeKind::multiply : NodeKind::divide;
        lhs = Expr::binary(kind, lhs, unary());
      } else if (starts_atom()) {
        lhs = Expr::binary(NodeKind::multiply, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (peek().kind == Tok::minus) {
      next();
      return Expr::negate(unary());
    }
    if (!starts_atom()) fail(unary_starts());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (peek().kind == Tok::caret) {
      next();
      return pow(base, unary());
    }
    return base;
  }

  Expr atom() {
    if (!starts_atom()) fail(atom_starts());
    const Token& t = next();
    switch (t.kind) {
      case Tok::number: return Expr::number(t.value);
      case Tok::variable: return Expr::variable();
      case Tok::pi: return Expr::constant(NamedConstant::pi);
      case Tok::e: return Expr::constant(NamedConstant::e);
      case Tok::lparen: {
        Expr inner = expr();
        if (peek().kind != Tok::rparen) fail({"')'"});
        next();
        return inner;
      }
      case Tok::function: {
        const Builtin fn = t.fn;
        if (peek().kind == Tok::lparen) {
          next();
          Expr arg = expr();
          if (peek().kind != Tok::rparen) fail({"')'"});
          next();
          return Expr::apply(fn, arg);
        }
        if (!starts_atom()) fail({"'('", "argument"});
        return Expr::apply(fn, atom());
      }
      default: fail(atom_starts());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite value in ") + what);
  return v;
}

double eval_node(const Expr& e, double x) {
  switch (e.kind()) {
    case NodeKind::number: return to_double(e.value());
    case NodeKind::named_constant:
      return e.named_constant() == NamedConstant::pi ? std::numbers::pi : std::numbers::e;
    case NodeKind::variable: return x;
    case NodeKind::negate: return -eval_node(e.lhs(), x);
    case NodeKind::add: return checked(eval_node(e.lhs(), x) + eval_node(e.rhs(), x), "sum");
    case NodeKind::subtract: return checked(eval_node(e.lhs(), x) - eval_node(e.rhs(), x), "difference");
    case NodeKind::multiply: return checked(eval_node(e.lhs(), x) * eval_node(e.rhs(), x), "product");
    case NodeKind::divide: {
      const double num = eval_node(e.lhs(), x);
      const double den = eval_node(e.rhs(), x);
      if (den == 0.0) throw DomainError("division by zero");
      return checked(num / den, "quotient");
    }
    case NodeKind::power: {
      const double base = eval_node(e.lhs(), x);
      const Expr exponent = e.rhs();
      const double p = eval_node(exponent, x);
      if (base == 0.0 && p < 0.0) throw DomainError("zero to a negative power");
      if (base < 0.0 && p != std::floor(p)) throw DomainError("negative base to a fractional power");
      return checked(std::pow(base, p), "power");
    }
    case NodeKind::apply: {
      const double u = eval_node(e.lhs(), x);
      switch (e.builtin()) {
        case Builtin::sin: return std::sin(u);
        case Builtin::cos: return std::cos(u);
        case Builtin::tan: return checked(std::tan(u), "tan");
        case Builtin::exp: return checked(std::exp(u), "exp");
        case Builtin::ln:
          if (u <= 0.0) throw DomainError("ln of a non-positive number");
          return std::log(u);
        case Builtin::sqrt:
          if (u < 0.0) throw DomainError("sqrt of a negative number");
          return std::sqrt(u);
      }
    }
  }
  throw DomainError("unknown node");
}

}  // namespace

double evaluate(const Expr& e, double x) { return checked(eval_node(e, x), "expression"); }

// ---------------------------------------------------------------------------
// Simplification and differentiation

namespace {

constexpr long kMaxFoldedExponent = 64;

std::optional<long> small_integer(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
  return r.get_num().get_si();
}

std::optional<Rational> exact_power(const Rational& base, const Rational& exponent) {
  auto n = small_integer(exponent);
  if (!n || std::abs(*n) > kMaxFoldedExponent) return std::nullopt;
  if (base == 0 && *n < 0) return std::nullopt;
  Rational out = ring_pow(base, static_cast<int>(std::abs(*n)));
  if (*n < 0) out = 1 / out;
  return out;
}

// Local rewrite of one node whose children are already simplified.
Expr fold(NodeKind kind, const Expr& a, const Expr& b) {
  const bool numbers = a.is_number() && b.is_number();
  switch (kind) {
    case NodeKind::add:
      if (numbers) return Expr::number(Rational(a.value() + b.value()));
      if (a.is_number(0)) return b;
      if (b.is_number(0)) return a;
      break;
    case NodeKind::subtract:
      if (numbers) return Expr::number(Rational(a.value() - b.value()));
      if (b.is_number(0)) return a;
      if (a.is_number(0)) return b.kind() == NodeKind::negate ? b.lhs() : Expr::negate(b);
      break;
    case NodeKind::multiply:
      if (numbers) return Expr::number(Rational(a.value() * b.value()));
      if (a.is_number(0) || b.is_number(0)) return Expr::number(0);
      if (a.is_number(1)) return b;
      if (b.is_number(1)) return a;
      break;
    case NodeKind::divide:
      if (numbers && b.value() != 0) return Expr::number(Rational(a.value() / b.value()));
      if (b.is_number(1)) return a;
      if (a.is_number(0) && !b.is_number(0)) return Expr::number(0);
      break;
    case NodeKind::power:
      if (numbers)
        if (auto v = exact_power(a.value(), b.value())) return Expr::number(*v);
      if (b.is_number(1)) return a;
      if (b.is_number(0) || a.is_number(1)) return Expr::number(1);
      break;
    default: break;
  }
  return Expr::binary(kind, a, b);
}

Expr fold_negate(const Expr& a) {
  if (a.is_number()) return Expr::number(Rational(-a.value()));
  if (a.kind() == NodeKind::negate) return a.lhs();
  return Expr::negate(a);
}

Expr add(const Expr& a, const Expr& b) { return fold(NodeKind::add, a, b); }
Expr sub(const Expr& a, const Expr& b) { return fold(NodeKind::subtract, a, b); }
Expr mul(const Expr& a, const Expr& b) { return fold(NodeKind::multiply, a, b); }
Expr div(const Expr& a, const Expr& b) { return fold(NodeKind::divide, a, b); }
Expr power(const Expr& a, const Expr& b) { return fold(NodeKind::power, a, b); }

Expr derive(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::number:
    case NodeKind::named_constant: return Expr::number(0);
    case NodeKind::variable: return Expr::number(1);
    case NodeKind::negate: return fold_negate(derive(e.lhs()));
    case NodeKind::add: return add(derive(e.lhs()), derive(e.rhs()));
    case NodeKind::subtract: return sub(derive(e.lhs()), derive(e.rhs()));
    case NodeKind::multiply: {
      const Expr u = simplify(e.lhs()), v = simplify(e.rhs());
      return add(mul(derive(u), v), mul(u, derive(v)));
    }
    case NodeKind::divide: {
      const Expr u = simplify(e.lhs()), v = simplify(e.rhs());
      if (!depends_on_variable(v)) return div(derive(u), v);
      return div(sub(mul(derive(u), v), mul(u, derive(v))), power(v, Expr::number(2)));
    }
    case NodeKind::power: {
      const Expr u = simplify(e.lhs()), v = simplify(e.rhs());
      if (!depends_on_variable(v)) {
        const Expr v_minus_one = sub(v, Expr::number(1));
        return mul(mul(v, power(u, v_minus_one)), derive(u));
      }
      const Expr ln_u = Expr::apply(Builtin::ln, u);
      if (!depends_on_variable(u)) return mul(mul(power(u, v), ln_u), derive(v));
      return mul(power(u, v), add(mul(derive(v), ln_u), div(mul(v, derive(u)), u)));
    }
    case NodeKind::apply: {
      const Expr u = simplify(e.lhs());
      const Expr du = derive(u);
      switch (e.builtin()) {
        case Builtin::sin: return mul(Expr::apply(Builtin::cos, u), du);
        case Builtin::cos: return fold_negate(mul(Expr::apply(Builtin::sin, u), du));
        case Builtin::tan: return div(du, power(Expr::apply(Builtin::cos, u), Expr::number(2)));
        case Builtin::exp: return mul(Expr::apply(Builtin::exp, u), du);
        case Builtin::ln: return div(du, u);
        case Builtin::sqrt: return div(du, mul(Expr::number(2), Expr::apply(Builtin::sqrt, u)));
      }
    }
  }
  return Expr::number(0);
}

}  // namespace

Expr simplify(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::number:
    case NodeKind::named_constant:
    case NodeKind::variable: return e;
    case NodeKind::negate: return fold_negate(simplify(e.lhs()));
    case NodeKind::apply: return Expr::apply(e.builtin(), simplify(e.lhs()));
    default: return fold(e.kind(), simplify(e.lhs()), simplify(e.rhs()));
  }
}

Expr differentiate(const Expr& e) { return simplify(derive(simplify(e))); }

bool depends_on_variable(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::number:
    case NodeKind::named_constant: return false;
    case NodeKind::variable: return true;
    case NodeKind::negate:
    case NodeKind::apply: return depends_on_variable(e.lhs());
    default: return depends_on_variable(e.lhs()) || depends_on_variable(e.rhs());
  }
}

std::optional<Rational> exact_value(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::number: return e.value();
    case NodeKind::negate: {
      auto v = exact_value(e.lhs());
      if (!v) return std::nullopt;
      return Rational(-*v);
    }
    case NodeKind::add:
    case NodeKind::subtract:
    case NodeKind::multiply:
    case NodeKind::divide:
    case NodeKind::power: {
      auto a = exact_value(e.lhs());
      auto b = a ? exact_value(e.rhs()) : std::nullopt;
      if (!a || !b) return std::nullopt;
      switch (e.kind()) {
        case NodeKind::add: return Rational(*a + *b);
        case NodeKind::subtract: return Rational(*a - *b);
        case NodeKind::multiply: return Rational(*a * *b);
        case NodeKind::divide:
          if (*b == 0) return std::nullopt;
          return Rational(*a / *b);
        default: return exact_power(*a, *b);
      }
    }
    default: return std::nullopt;
  }
}

Expr substitute(const Expr& e, const Expr& replacement) {
  switch (e.kind()) {
    case NodeKind::number:
    case NodeKind::named_constant: return e;
    case NodeKind::variable: return replacement;
    case NodeKind::negate: return Expr::negate(substitute(e.lhs(), replacement));
    case NodeKind::apply: return Expr::apply(e.builtin(), substitute(e.lhs(), replacement));
    default: return Expr::binary(e.kind(), substitute(e.lhs(), replacement), substitute(e.rhs(), replacement));
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Level { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

Level level_of(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::add:
    case NodeKind::subtract: return kSum;
    case NodeKind::multiply:
    case NodeKind::divide: return kProduct;
    case NodeKind::negate: return kUnary;
    case NodeKind::power: return kPower;
    default: return kAtom;
  }
}

std::string print_at(const Expr& e, Level required);

std::string print_number(const Rational& v) {
  if (sgn(v) < 0) return "(-" + print_number(Rational(-v)) + ")";
  if (has_terminating_decimal(v)) return to_decimal_string(v);
  return "(" + to_string(v) + ")";
}

std::string print_node(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::number: return print_number(e.value());
    case NodeKind::named_constant: return e.named_constant() == NamedConstant::pi ? "pi" : "e";
    case NodeKind::variable: return "x";
    case NodeKind::negate: return "-" + print_at(e.lhs(), kUnary);
    case NodeKind::add: return print_at(e.lhs(), kSum) + " + " + print_at(e.rhs(), kProduct);
    case NodeKind::subtract: return print_at(e.lhs(), kSum) + " - " + print_at(e.rhs(), kProduct);
    case NodeKind::multiply: return print_at(e.lhs(), kProduct) + "*" + print_at(e.rhs(), kUnary);
    case NodeKind::divide: return print_at(e.lhs(), kProduct) + "/" + print_at(e.rhs(), kUnary);
    case NodeKind::power: return print_at(e.lhs(), kAtom) + "^" + print_at(e.rhs(), kUnary);
    case NodeKind::apply: return std::string(builtin_name(e.builtin())) + "(" + print_at(e.lhs(), kSum) + ")";
  }
  return "?";
}

std::string print_at(const Expr& e, Level required) {
  std::string s = print_node(e);
  return level_of(e) < required ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Expr& e) { return print_at(e, kSum); }

// ---------------------------------------------------------------------------
// Rational recognition

namespace {

constexpr long kMaxRationalExponent = 1000;

std::optional<RationalFunction> as_rational(const Expr& e) {
  auto combine = [](const RationalFunction& f, const RationalFunction& g, NodeKind kind)
      -> std::optional<RationalFunction> {
    const Poly1 &p = f.numerator, &q = f.denominator, &r = g.numerator, &s = g.denominator;
    switch (kind) {
      case NodeKind::add: return make_rational_function(p * s + r * q, q * s);
      case NodeKind::subtract: return make_rational_function(p * s - r * q, q * s);
      case NodeKind::multiply: return make_rational_function(p * r, q * s);
      case NodeKind::divide:
        if (r.is_zero()) return std::nullopt;
        return make_rational_function(p * s, q * r);
      default: return std::nullopt;
    }
  };

  switch (e.kind()) {
    case NodeKind::number: return RationalFunction{Poly1::constant(e.value()), Poly1{1}};
    case NodeKind::variable: return RationalFunction{Poly1::variable(), Poly1{1}};
    case NodeKind::negate: {
      auto f = as_rational(e.lhs());
      if (!f) return std::nullopt;
      return RationalFunction{-f->numerator, f->denominator};
    }
    case NodeKind::add:
    case NodeKind::subtract:
    case NodeKind::multiply:
    case NodeKind::divide: {
      auto f = as_rational(e.lhs());
      auto g = f ? as_rational(e.rhs()) : std::nullopt;
      if (!f || !g) return std::nullopt;
      return combine(*f, *g, e.kind());
    }
    case NodeKind::power: {
      auto exponent = exact_value(e.rhs());
      if (!exponent) return std::nullopt;
      auto n = small_integer(*exponent);
      if (!n || std::abs(*n) > kMaxRationalExponent) return std::nullopt;
      auto base = as_rational(e.lhs());
      if (!base) return std::nullopt;
      const int k = static_cast<int>(std::abs(*n));
      Poly1 num = ring_pow(base->numerator, k), den = ring_pow(base->denominator, k);
      if (*n < 0) {
        if (num.is_zero()) return std::nullopt;
        std::swap(num, den);
      }
      return make_rational_function(num, den);
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<RationalFunction> to_rational_function(const Expr& e) {
  auto f = as_rational(e);
  if (!f) return std::nullopt;
  return make_rational_function(f->numerator, f->denominator);
}

}  // namespace arrowgraph
