#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "exactreal/bounds.hpp"
#include "exactreal/verify.hpp"
#include "support.hpp"

using namespace exactreal;
using namespace exactreal::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

/// "3.(-3)2" -> 3 - 3/10 + 2/100.
Rational parse_digits(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  const auto dot = text.find('.');
  Rational value(Integer(text.substr(0, dot), 10));
  if (dot == std::string::npos) return value;
  Rational place(Integer(1), Integer(10));
  for (std::size_t i = dot + 1; i < text.size(); place /= 10) {
    int d;
    if (text[i] == '(') {
      const auto close = text.find(')', i);
      d = std::stoi(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      d = text[i] - '0';
      ++i;
    }
    value += place * d;
  }
  return value;
}

std::pair<Rational, Rational> parse_bracket(std::string text) {
  // "(lo, hi)\n"
  const auto comma = text.find(", ");
  return {R(text.substr(1, comma - 1).c_str()),
          R(text.substr(comma + 2, text.find(')') - comma - 2).c_str())};
}

}  // namespace

TEST_CASE("parse examples") {
  const ExprPtr e = parse_expr("exp(1)");
  const auto* u = std::get_if<Expr::Unary>(&e->node);
  REQUIRE(u);
  CHECK(u->op == UnaryOp::Exp);
  CHECK(expr_equal(u->arg, make_literal(1)));

  const ExprPtr s = parse_expr("sin(x + exp(x))");
  CHECK(expr_equal(s, make_unary(UnaryOp::Sin,
                                 make_binary(BinaryOp::Add, make_variable("x"),
                                             make_unary(UnaryOp::Exp, make_variable("x"))))));
  CHECK(expr_equal(parse_expr("1 + 2 * 3"),
                   make_binary(BinaryOp::Add, make_literal(1),
                               make_binary(BinaryOp::Mul, make_literal(2), make_literal(3)))));
  CHECK(expr_equal(parse_expr("1 - 2 - 3"),
                   make_binary(BinaryOp::Sub, make_binary(BinaryOp::Sub, make_literal(1), make_literal(2)),
                               make_literal(3))));
  CHECK(expr_equal(parse_expr("-x*2"), make_binary(BinaryOp::Mul, make_unary(UnaryOp::Neg, make_variable("x")),
                                                   make_literal(2))));
  CHECK(expr_equal(parse_expr("max(pi, e)"), make_binary(BinaryOp::Max, make_constant(ConstantKind::Pi),
                                                         make_constant(ConstantKind::E))));
  CHECK(expr_equal(parse_expr("1.5e-2"), make_literal(R("3/200"))));
}

TEST_CASE("parse errors") {
  auto offset_of = [](const char* text) -> std::optional<std::size_t> {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::nullopt;
  };
  CHECK(offset_of("1 + * 2") == 4);
  CHECK(offset_of("y + 1") == 0);
  CHECK(offset_of("foo(1)") == 0);
  CHECK(offset_of("exp(1") == 5);
  CHECK(offset_of("min(1)") == 5);
  CHECK(offset_of("1 2") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("2 $ 3") == 2);
  CHECK_NOTHROW(parse_expr("y + 1", {"y"}));
}

TEST_CASE("parse . print . parse fixpoint") {
  std::vector<std::string> corpus = {
      "1", "x", "pi", "e", "-x", "--x", "1/3", "2*3+1", "exp(1)", "sin(x + exp(x))",
      "cos(x) * sin(x)", "abs(-2.5)", "recip(7)", "min(x, 1/2)", "max(pi, e)",
      "x*x - 2", "exp(x) - 2", "1 - 2 - 3", "1 / 2 / 3", "(1 + 2) * 3",
      "0.125", "1e3", "2.5e-3", "-(1/3)", "x - -x"};
  std::mt19937_64 rng(50);
  while (corpus.size() < 50) corpus.push_back(print_expr(random_expression(rng, 4)));
  for (const auto& text : corpus) {
    CAPTURE(text);
    const ExprPtr once = parse_expr(text);
    const std::string printed = print_expr(once);
    const ExprPtr twice = parse_expr(printed);
    CHECK(expr_equal(once, twice));
    CHECK(print_expr(twice) == printed);
  }
  CHECK(print_expr(parse_expr("1/3")) == "(1 / 3)");
}

TEST_CASE("eval") {
  CHECK(forced_failures(eval(parse_expr("2*3+1")), Oracle::exact(7), 1, 30) == 0);
  CHECK(forced_failures(eval(parse_expr("2*3+1"), {}, {true}), Oracle::exact(7), 1, 30) == 0);
  CHECK(forced_failures(eval(parse_expr("1/3")), Oracle::exact(R("1/3")), 2, 30) == 0);
  CHECK(forced_failures(eval(parse_expr("1/3"), {}, {true}), Oracle::exact(R("1/3")), 2, 30) == 0);
  {
    ScopedSearchConfig small(SearchConfig{1000, 200});
    CHECK_THROWS_AS(eval(parse_expr("1/0")), SearchExhausted);
  }
  CHECK(forced_failures(eval(parse_expr("x*x"), {{"x", e()}}),
                        Oracle{e_oracle().lo * e_oracle().lo, e_oracle().hi * e_oracle().hi}, 3, 30) == 0);
  CHECK_THROWS_AS(eval(parse_expr("x")), PreconditionError);
  CHECK(eval_rational(parse_expr("min(1/2, 1/3) + abs(-1)")) == R("4/3"));
  CHECK(!eval_rational(parse_expr("pi")));
  CHECK(!eval_rational(parse_expr("1/0")));
}

TEST_CASE("lipschitz bounds") {
  auto lb = [](const char* text, const char* lo, const char* hi) {
    return lipschitz_bound(parse_expr(text), "x", R(lo), R(hi));
  };
  LipschitzBound b = lb("x", "0", "1");
  CHECK(b.min == 0);
  CHECK(b.max == 1);
  CHECK(b.lipschitz == 1);
  b = lb("x*x", "0", "2");
  CHECK(b.min == 0);
  CHECK(b.max == 4);
  CHECK(b.lipschitz == 4);
  CHECK(lb("3 - 2*x", "0", "1").lipschitz == 2);
  CHECK(lb("exp(x)", "0", "1").lipschitz == 3);
  CHECK(lb("sin(x + exp(x))", "0", "8").lipschitz == 6562);
  CHECK(lb("recip(x)", "1", "2").lipschitz == 1);
  CHECK(lb("abs(x) + pi", "-1", "1").lipschitz == 1);
  CHECK_THROWS_AS(lb("recip(x)", "-1", "1"), PreconditionError);
  CHECK(expr_map(parse_expr("x*x"), "x", std::pair{Rational(0), Rational(1)}).modulus);
  CHECK(!expr_map(parse_expr("x*x"), "x").modulus);
}

TEST_CASE("lipschitz bounds hold on sample points") {
  for (const char* text : {"x*x - 2", "3*x*x*x - x", "min(x, 1/2) * max(x, -x)", "recip(x + 3)", "abs(x - 1/3)"}) {
    CAPTURE(text);
    const ExprPtr f = parse_expr(text);
    const LipschitzBound b = lipschitz_bound(f, "x", -1, 2);
    std::vector<Rational> points;
    for (int i = 0; i <= 30; ++i) points.push_back(Rational(Integer(i), Integer(10)) - 1);
    for (const auto& p : points) {
      const Rational v = *eval_rational(f, {{"x", rational(p)}});
      CHECK(b.min <= v);
      CHECK(v <= b.max);
      for (const auto& q : points)
        CHECK((*eval_rational(f, {{"x", rational(q)}}) - v).abs() <= b.lipschitz * (q - p).abs());
    }
  }
}

TEST_CASE("command surface") {
  const Outcome d = run_cli({"digits", "e", "-n", "10"});
  CHECK(d.code == 0);
  CHECK(e_oracle().within(parse_digits(d.out), R("1e-10")));
  CHECK(d.err.empty());

  const Outcome b = run_cli({"bounds", "pi", "--eps", "1/1000000"});
  CHECK(b.code == 0);
  const auto [lo, hi] = parse_bracket(b.out);
  CHECK(hi - lo < R("1e-6"));
  CHECK(pi_oracle().inside({lo, hi}));

  const Outcome r = run_cli({"root", "x*x - 2", "--lo", "1", "--hi", "2", "-n", "8"});
  CHECK(r.code == 0);
  CHECK(sqrt2_oracle().within(parse_digits(r.out), R("1e-8")));

  const Outcome i = run_cli({"integrate", "x*x", "--from", "0", "--to", "1", "-n", "3"});
  CHECK(i.code == 0);
  CHECK(Oracle::exact(R("1/3")).within(parse_digits(i.out), R("1e-3")));

  const Outcome s = run_cli({"digits", "-", "-n", "4"}, "1/3\n");
  CHECK(s.code == 0);
  CHECK(Oracle::exact(R("1/3")).within(parse_digits(s.out), R("1e-4")));

  const Outcome t = run_cli({"--trace", "digits", "pi", "-n", "3"});
  CHECK(t.code == 0);
  CHECK(t.err.rfind("trace: queries=", 0) == 0);

  const Outcome v = run_cli({"--seed", "7", "verify", "--cases", "40"});
  CHECK(v.code == 0);
  CHECK(v.out == "cases passed=40 failed=0\nqueries passed=400 failed=0\n");
  CHECK(run_cli({"--seed", "7", "verify", "--cases", "40", "--serial"}).out == v.out);
}

TEST_CASE("errors and exit codes") {
  const Outcome p = run_cli({"digits", "1 + * 2"});
  CHECK(p.code == cli::UsageError);
  const auto pj = nlohmann::json::parse(p.err);
  CHECK(pj["error"] == "parse");
  CHECK(pj["offset"] == 4);
  CHECK(p.out.empty());

  const Outcome z = run_cli({"--cap", "200", "digits", "1/0"});
  CHECK(z.code == cli::DomainError);
  CHECK(nlohmann::json::parse(z.err)["error"] == "search_exhausted");

  const Outcome rp = run_cli({"integrate", "recip(x)", "--from", "-1", "--to", "1", "-n", "2"});
  CHECK(rp.code == cli::DomainError);
  CHECK(nlohmann::json::parse(rp.err)["error"] == "precondition");

  CHECK(run_cli({}).code == cli::UsageError);
  CHECK(run_cli({"frobnicate"}).code == cli::UsageError);
  CHECK(run_cli({"digits", "pi", "-n", "many"}).code == cli::UsageError);
  CHECK(run_cli({"bounds", "pi", "--eps", "0"}).code == cli::UsageError);
  CHECK(run_cli({"root", "x", "--lo", "2", "--hi", "1", "-n", "2"}).code != 0);
  for (const auto& o : {p, z, rp}) CHECK(std::count(o.err.begin(), o.err.end(), '\n') == 1);
}

TEST_CASE("digit output near the bounds midpoint") {
  const std::vector<std::string> corpus = {"e", "pi", "1/3", "2*3+1", "exp(1/2)", "sin(1)", "cos(1/3)",
                                           "pi - e", "-pi", "recip(7)", "max(e, 1/2)", "abs(-pi)", "0", "-1/2"};
  for (const auto& text : corpus)
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(text);
      CAPTURE(n);
      const Outcome d = run_cli({"digits", "-n", std::to_string(n), "--", text});
      const Outcome b = run_cli({"bounds", "--eps", "1e-" + std::to_string(n + 1), "--", text});
      REQUIRE(d.code == 0);
      REQUIRE(b.code == 0);
      const auto [lo, hi] = parse_bracket(b.out);
      CHECK((parse_digits(d.out) - (lo + hi) / 2).abs() < Rational::pow10(-n));
    }
}

TEST_CASE("verify suite is identical serially and in parallel") {
  SuiteOptions opts;
  opts.cases = 200;
  opts.seed = 3;
  const SuiteReport a = run_soundness_suite(opts, Execution::Serial);
  const SuiteReport b = run_soundness_suite(opts, Execution::Parallel);
  CHECK(a.passed_cases == 200);
  CHECK(a.failed_queries == 0);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].expression == b.cases[i].expression);
    CHECK(a.cases[i].answers == b.cases[i].answers);
  }
}
