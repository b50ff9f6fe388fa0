#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "exactreal/creal.hpp"
#include "exactreal/realmap.hpp"

namespace exactreal {

enum class UnaryOp { Neg, Abs, Exp, Sin, Cos, Recip };
enum class BinaryOp { Add, Sub, Mul, Div, Min, Max };
enum class ConstantKind { Pi, E };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree for the command line. Literals are non-negative; a leading
/// minus parses as Neg.
struct Expr {
  struct Literal {
    Rational value;
  };
  struct Constant {
    ConstantKind kind;
  };
  struct Variable {
    std::string name;
  };
  struct Unary {
    UnaryOp op;
    ExprPtr arg;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  std::variant<Literal, Constant, Variable, Unary, Binary> node;
};

ExprPtr make_literal(Rational v);
ExprPtr make_constant(ConstantKind k);
ExprPtr make_variable(std::string name);
ExprPtr make_unary(UnaryOp op, ExprPtr arg);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);

/// Grammar, loosest first:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | primary
///   primary := number | 'pi' | 'e' | variable | name '(' expr (',' expr)* ')'
///            | '(' expr ')'
///   number  := digits ['.' digits] [('e'|'E') ['+'|'-'] digits] | '.' digits ...
/// Functions: exp sin cos abs recip (one argument), min max (two).
/// Throws ParseError with the byte offset of the offending token.
ExprPtr parse_expr(std::string_view text, const std::set<std::string>& variables = {"x"});

/// Fully parenthesized text; literals in decimal. Reparses to an equal tree.
std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

using Env = std::map<std::string, CReal>;

struct EvalOptions {
  /// Wrap literals with opaque() so no exact fast path applies.
  bool opaque_literals = false;
};

/// Structural evaluation with per-call memo on shared subtrees. Division is
/// mul(x, recip(y)) with find_apartness on y, which may throw
/// SearchExhausted. Unbound variables throw PreconditionError.
CReal eval(const ExprPtr& e, const Env& env = {}, const EvalOptions& opts = {});

/// Exact value over the rationals, or nothing when the tree uses pi, e, exp,
/// sin or cos, or divides by zero.
std::optional<Rational> eval_rational(const ExprPtr& e, const Env& env = {});

/// Enclosure of f on [lo, hi] for a one-variable expression: range [min, max]
/// and a Lipschitz constant, by interval rules per constructor.
struct LipschitzBound {
  Rational min;
  Rational max;
  Rational lipschitz;
};
/// Throws PreconditionError when a reciprocal's argument range contains 0.
LipschitzBound lipschitz_bound(const ExprPtr& e, const std::string& var, const Rational& lo,
                               const Rational& hi);

/// f(v) = eval(e, {var: v}), with modulus eps / L from lipschitz_bound when
/// an interval is given.
RealMap expr_map(const ExprPtr& e, const std::string& var,
                 std::optional<std::pair<Rational, Rational>> interval = std::nullopt);

}  // namespace exactreal
