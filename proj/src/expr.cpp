#include "exactreal/expr.hpp"

#include <cctype>
#include <vector>

#include "exactreal/arith.hpp"
#include "exactreal/series.hpp"

namespace exactreal {

ExprPtr make_literal(Rational v) { return std::make_shared<Expr>(Expr{Expr::Literal{std::move(v)}}); }
ExprPtr make_constant(ConstantKind k) { return std::make_shared<Expr>(Expr{Expr::Constant{k}}); }
ExprPtr make_variable(std::string name) {
  return std::make_shared<Expr>(Expr{Expr::Variable{std::move(name)}});
}
ExprPtr make_unary(UnaryOp op, ExprPtr arg) {
  return std::make_shared<Expr>(Expr{Expr::Unary{op, std::move(arg)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<Expr>(Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}});
}

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c); }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      // An exponent only when digits follow; "2e" stays a number and a name.
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && is_digit(s[j])) {
          i = j;
          while (i < s.size() && is_digit(s[i])) ++i;
        }
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (is_name_start(c)) {
      while (i < s.size() && is_name_char(s[i])) ++i;
      out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Function {
  const char* name;
  int arity;
  UnaryOp unary;
  BinaryOp binary;
};

constexpr Function kFunctions[] = {
    {"exp", 1, UnaryOp::Exp, BinaryOp::Add},    {"sin", 1, UnaryOp::Sin, BinaryOp::Add},
    {"cos", 1, UnaryOp::Cos, BinaryOp::Add},    {"abs", 1, UnaryOp::Abs, BinaryOp::Add},
    {"recip", 1, UnaryOp::Recip, BinaryOp::Add}, {"min", 2, UnaryOp::Neg, BinaryOp::Min},
    {"max", 2, UnaryOp::Neg, BinaryOp::Max},
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::set<std::string>& vars)
      : toks_(std::move(toks)), vars_(vars) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, peek().offset); }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const BinaryOp op = next().kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = make_binary(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const BinaryOp op = next().kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      lhs = make_binary(op, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return make_unary(UnaryOp::Neg, unary());
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        try {
          return make_literal(Rational::parse(t.text));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), t.offset + e.offset());
        }
      }
      case Tok::LParen: {
        ++pos_;
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Name:
        return name();
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("expected operand, got '" + t.text + "'");
    }
  }

  ExprPtr name() {
    const Token t = next();
    for (const auto& f : kFunctions) {
      if (t.text != f.name) continue;
      if (peek().kind != Tok::LParen) fail(std::string("expected '(' after ") + f.name);
      ++pos_;
      ExprPtr a = expr();
      if (f.arity == 1) {
        expect(Tok::RParen, "')'");
        return make_unary(f.unary, a);
      }
      expect(Tok::Comma, "','");
      ExprPtr b = expr();
      expect(Tok::RParen, "')'");
      return make_binary(f.binary, a, b);
    }
    if (t.text == "pi") return make_constant(ConstantKind::Pi);
    if (t.text == "e") return make_constant(ConstantKind::E);
    if (vars_.count(t.text)) return make_variable(t.text);
    throw ParseError("unknown identifier '" + t.text + "'", t.offset);
  }

  std::vector<Token> toks_;
  const std::set<std::string>& vars_;
  std::size_t pos_ = 0;
};

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Abs: return "abs";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Recip: return "recip";
  }
  return "?";
}

const char* binary_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return " + ";
    case BinaryOp::Sub: return " - ";
    case BinaryOp::Mul: return " * ";
    case BinaryOp::Div: return " / ";
    case BinaryOp::Min: return "min";
    case BinaryOp::Max: return "max";
  }
  return "?";
}

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

}  // namespace

ExprPtr parse_expr(std::string_view text, const std::set<std::string>& variables) {
  return Parser(lex(text), variables).parse();
}

std::string print_expr(const ExprPtr& e) {
  return std::visit(
      Overload{
          [](const Expr::Literal& l) {
            return l.value.has_finite_decimal() ? l.value.to_decimal_string()
                                                : "(" + l.value.to_string() + ")";
          },
          [](const Expr::Constant& c) { return std::string(c.kind == ConstantKind::Pi ? "pi" : "e"); },
          [](const Expr::Variable& v) { return v.name; },
          [](const Expr::Unary& u) {
            if (u.op == UnaryOp::Neg) return "(-" + print_expr(u.arg) + ")";
            return std::string(unary_name(u.op)) + "(" + print_expr(u.arg) + ")";
          },
          [](const Expr::Binary& b) {
            if (b.op == BinaryOp::Min || b.op == BinaryOp::Max)
              return std::string(binary_name(b.op)) + "(" + print_expr(b.lhs) + ", " +
                     print_expr(b.rhs) + ")";
            return "(" + print_expr(b.lhs) + binary_name(b.op) + print_expr(b.rhs) + ")";
          },
      },
      e->node);
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      Overload{
          [&](const Expr::Literal& l) { return l.value == std::get<Expr::Literal>(b->node).value; },
          [&](const Expr::Constant& c) { return c.kind == std::get<Expr::Constant>(b->node).kind; },
          [&](const Expr::Variable& v) { return v.name == std::get<Expr::Variable>(b->node).name; },
          [&](const Expr::Unary& u) {
            const auto& o = std::get<Expr::Unary>(b->node);
            return u.op == o.op && expr_equal(u.arg, o.arg);
          },
          [&](const Expr::Binary& x) {
            const auto& o = std::get<Expr::Binary>(b->node);
            return x.op == o.op && expr_equal(x.lhs, o.lhs) && expr_equal(x.rhs, o.rhs);
          },
      },
      a->node);
}

namespace {

class Evaluator {
 public:
  Evaluator(const Env& env, const EvalOptions& opts) : env_(env), opts_(opts) {}

  CReal operator()(const ExprPtr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    CReal v = std::visit(
        Overload{
            [&](const Expr::Literal& l) {
              return opts_.opaque_literals ? opaque(rational(l.value)) : rational(l.value);
            },
            [&](const Expr::Constant& c) { return c.kind == ConstantKind::Pi ? pi() : exactreal::e(); },
            [&](const Expr::Variable& v) {
              auto it = env_.find(v.name);
              if (it == env_.end()) throw PreconditionError("unbound variable '" + v.name + "'");
              return it->second;
            },
            [&](const Expr::Unary& u) { return unary(u.op, (*this)(u.arg)); },
            [&](const Expr::Binary& b) { return binary(b.op, (*this)(b.lhs), (*this)(b.rhs)); },
        },
        e->node);
    memo_.emplace(e.get(), v);
    return v;
  }

 private:
  static CReal unary(UnaryOp op, const CReal& x) {
    switch (op) {
      case UnaryOp::Neg: return neg(x);
      case UnaryOp::Abs: return abs(x);
      case UnaryOp::Exp: return exp(x);
      case UnaryOp::Sin: return sin(x);
      case UnaryOp::Cos: return cos(x);
      case UnaryOp::Recip: return recip(x);
    }
    throw std::logic_error("unary op");
  }

  static CReal binary(BinaryOp op, const CReal& x, const CReal& y) {
    switch (op) {
      case BinaryOp::Add: return add(x, y);
      case BinaryOp::Sub: return sub(x, y);
      case BinaryOp::Mul: return mul(x, y);
      case BinaryOp::Div: return mul(x, recip(y));
      case BinaryOp::Min: return min(x, y);
      case BinaryOp::Max: return max(x, y);
    }
    throw std::logic_error("binary op");
  }

  const Env& env_;
  const EvalOptions& opts_;
  std::map<const Expr*, CReal> memo_;
};

}  // namespace

CReal eval(const ExprPtr& e, const Env& env, const EvalOptions& opts) {
  return Evaluator(env, opts)(e);
}

std::optional<Rational> eval_rational(const ExprPtr& e, const Env& env) {
  using R = std::optional<Rational>;
  return std::visit(
      Overload{
          [](const Expr::Literal& l) -> R { return l.value; },
          [](const Expr::Constant&) -> R { return std::nullopt; },
          [&](const Expr::Variable& v) -> R {
            auto it = env.find(v.name);
            if (it == env.end()) return std::nullopt;
            return it->second.exact_value();
          },
          [&](const Expr::Unary& u) -> R {
            const R a = eval_rational(u.arg, env);
            if (!a) return std::nullopt;
            switch (u.op) {
              case UnaryOp::Neg: return -*a;
              case UnaryOp::Abs: return a->abs();
              case UnaryOp::Recip:
                if (a->is_zero()) return std::nullopt;
                return a->inverse();
              default: return std::nullopt;
            }
          },
          [&](const Expr::Binary& b) -> R {
            const R x = eval_rational(b.lhs, env);
            const R y = eval_rational(b.rhs, env);
            if (!x || !y) return std::nullopt;
            switch (b.op) {
              case BinaryOp::Add: return *x + *y;
              case BinaryOp::Sub: return *x - *y;
              case BinaryOp::Mul: return *x * *y;
              case BinaryOp::Div:
                if (y->is_zero()) return std::nullopt;
                return *x / *y;
              case BinaryOp::Min: return min(*x, *y);
              case BinaryOp::Max: return max(*x, *y);
            }
            return std::nullopt;
          },
      },
      e->node);
}

namespace {

constexpr long kMaxExponent = 4096;

Rational power_of(long base, long exponent) {
  if (exponent > kMaxExponent || exponent < -kMaxExponent)
    throw PreconditionError("Lipschitz bound out of range for exp");
  Rational out = 1;
  const Rational b = exponent >= 0 ? Rational(base) : Rational(Integer(1), Integer(base));
  for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) out *= b;
  return out;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw PreconditionError("Lipschitz bound out of range for exp");
  return v.get_si();
}

Rational max_abs(const LipschitzBound& b) { return max(b.min.abs(), b.max.abs()); }

LipschitzBound product(const LipschitzBound& a, const LipschitzBound& b) {
  const Rational p[] = {a.min * b.min, a.min * b.max, a.max * b.min, a.max * b.max};
  LipschitzBound out{p[0], p[0], a.lipschitz * max_abs(b) + b.lipschitz * max_abs(a)};
  for (const auto& v : p) {
    out.min = min(out.min, v);
    out.max = max(out.max, v);
  }
  return out;
}

LipschitzBound reciprocal(const LipschitzBound& a) {
  if (a.min.sign() <= 0 && a.max.sign() >= 0)
    throw PreconditionError("no modulus: reciprocal argument range contains 0");
  const Rational nearest = a.min.sign() > 0 ? a.min : -a.max;
  return {a.max.inverse(), a.min.inverse(), a.lipschitz / (nearest * nearest)};
}

}  // namespace

LipschitzBound lipschitz_bound(const ExprPtr& e, const std::string& var, const Rational& lo,
                               const Rational& hi) {
  auto rec = [&](const ExprPtr& s) { return lipschitz_bound(s, var, lo, hi); };
  return std::visit(
      Overload{
          [](const Expr::Literal& l) { return LipschitzBound{l.value, l.value, 0}; },
          [](const Expr::Constant& c) {
            // 3.14 < pi < 3.15, 2.71 < e < 2.72
            if (c.kind == ConstantKind::Pi)
              return LipschitzBound{Rational::parse("3.14"), Rational::parse("3.15"), 0};
            return LipschitzBound{Rational::parse("2.71"), Rational::parse("2.72"), 0};
          },
          [&](const Expr::Variable& v) {
            if (v.name != var) throw PreconditionError("no modulus: free variable '" + v.name + "'");
            return LipschitzBound{lo, hi, 1};
          },
          [&](const Expr::Unary& u) {
            const LipschitzBound a = rec(u.arg);
            switch (u.op) {
              case UnaryOp::Neg: return LipschitzBound{-a.max, -a.min, a.lipschitz};
              case UnaryOp::Abs:
                if (a.min.sign() >= 0) return a;
                if (a.max.sign() <= 0) return LipschitzBound{-a.max, -a.min, a.lipschitz};
                return LipschitzBound{0, max_abs(a), a.lipschitz};
              case UnaryOp::Exp: {
                // 1 + m <= e^m for m >= 0, 3^floor(m) < e^m below; e^M <= 3^ceil(M)
                // for M >= 0, 2^ceil(M) above.
                const Rational low = a.min.sign() >= 0 ? a.min + 1 : power_of(3, to_long(a.min.floor()));
                const long top = to_long(a.max.ceil());
                const Rational high = top >= 0 ? power_of(3, top) : power_of(2, top);
                return LipschitzBound{low, high, a.lipschitz * high};
              }
              case UnaryOp::Sin:
              case UnaryOp::Cos: return LipschitzBound{-1, 1, a.lipschitz};
              case UnaryOp::Recip: return reciprocal(a);
            }
            throw std::logic_error("unary op");
          },
          [&](const Expr::Binary& b) {
            const LipschitzBound x = rec(b.lhs);
            const LipschitzBound y = rec(b.rhs);
            switch (b.op) {
              case BinaryOp::Add: return LipschitzBound{x.min + y.min, x.max + y.max, x.lipschitz + y.lipschitz};
              case BinaryOp::Sub: return LipschitzBound{x.min - y.max, x.max - y.min, x.lipschitz + y.lipschitz};
              case BinaryOp::Mul: return product(x, y);
              case BinaryOp::Div: return product(x, reciprocal(y));
              case BinaryOp::Min:
                return LipschitzBound{min(x.min, y.min), min(x.max, y.max), max(x.lipschitz, y.lipschitz)};
              case BinaryOp::Max:
                return LipschitzBound{max(x.min, y.min), max(x.max, y.max), max(x.lipschitz, y.lipschitz)};
            }
            throw std::logic_error("binary op");
          },
      },
      e->node);
}

RealMap expr_map(const ExprPtr& e, const std::string& var,
                 std::optional<std::pair<Rational, Rational>> interval) {
  RealMap out{[e, var](const CReal& v) { return eval(e, Env{{var, v}}); }, std::nullopt};
  if (interval)
    out.modulus =
        UniformModulus::lipschitz(lipschitz_bound(e, var, interval->first, interval->second).lipschitz);
  return out;
}

}  // namespace exactreal
