#pragma once

// Expression trees for functions of a single real variable x.
//
// Grammar (lowest to highest precedence):
//   expr  := term (("+"|"-") term)*
//   term  := unary (("*"|"/"|juxtaposition) unary)*
//   unary := "-" unary | power
//   power := atom ("^" unary)?
//   atom  := number | "x" | "pi" | "e" | ident "(" expr ")" | ident atom | "(" expr ")"
//   ident := sin | cos | tan | exp | ln | sqrt
//
// Literals are exact rationals. Nodes are immutable and shared, so an Expr is
// cheap to copy and safe to evaluate from several threads.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "arrowgraph/rational.hpp"
#include "arrowgraph/rational_function.hpp"

namespace arrowgraph {

enum class NodeKind { number, named_constant, variable, negate, add, subtract, multiply, divide, power, apply };
enum class Builtin { sin, cos, tan, exp, ln, sqrt };
enum class NamedConstant { pi, e };

const char* builtin_name(Builtin b);

class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr number(Rational value);
  static Expr number(long value) { return number(Rational(value)); }
  static Expr constant(NamedConstant c);
  static Expr variable();
  static Expr negate(Expr child);
  static Expr binary(NodeKind kind, Expr lhs, Expr rhs);
  static Expr apply(Builtin fn, Expr child);

  NodeKind kind() const;
  /// Precondition: kind() == number.
  const Rational& value() const;
  NamedConstant named_constant() const;
  Builtin builtin() const;
  /// Operand of negate/apply, left operand of binary nodes.
  Expr lhs() const;
  Expr rhs() const;

  bool is_number() const { return kind() == NodeKind::number; }
  bool is_number(long v) const { return is_number() && value() == v; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Raw node builders; no simplification.
Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr pow(Expr base, Expr exponent);

/// Throws SyntaxError.
Expr parse(std::string_view text);

/// IEEE double evaluation. Throws DomainError for ln/sqrt/division/power
/// outside the domain and for non-finite results.
double evaluate(const Expr& e, double x);

/// Constant folding over exact literals plus 0/1 identities.
Expr simplify(const Expr& e);

/// Symbolic d/dx, simplified.
Expr differentiate(const Expr& e);

/// Text that parses back to the same tree (up to simplification of folded
/// literals that have no finite decimal form).
std::string print(const Expr& e);

/// P / Q when e is built from +, -, *, /, integer powers, exact literals and
/// x; nullopt otherwise.
std::optional<RationalFunction> to_rational_function(const Expr& e);

/// e with every occurrence of x replaced by `replacement`.
Expr substitute(const Expr& e, const Expr& replacement);

bool depends_on_variable(const Expr& e);

/// Exact value of a variable-free tree of literals and + - * / ^(integer);
/// nullopt if it contains pi, e, builtins, x or divides by zero.
std::optional<Rational> exact_value(const Expr& e);

struct FunctionDef {
  std::string name;
  Expr body;
};

}  // namespace arrowgraph
