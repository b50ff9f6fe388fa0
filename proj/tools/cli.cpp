#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "exactreal/analysis.hpp"
#include "exactreal/digits.hpp"
#include "exactreal/expr.hpp"
#include "exactreal/verify.hpp"

namespace exactreal::cli {

namespace {

struct Failure {
  ExitCode code;
  std::string kind;
  std::string message;
  std::optional<std::size_t> offset;
};

void report(std::ostream& err, const Failure& f) {
  nlohmann::json j{{"error", f.kind}, {"message", f.message}};
  if (f.offset) j["offset"] = *f.offset;
  err << j.dump() << "\n";
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

/// "-" or an empty argument reads the expression from stdin.
std::string expression_text(const std::string& arg, std::istream& in) {
  if (!arg.empty() && arg != "-") return arg;
  return trim(std::string(std::istreambuf_iterator<char>(in), {}));
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw Failure{UsageError, "usage", "--" + name + ": " + e.what(), std::nullopt};
  }
}

ExprPtr parse_or_fail(const std::string& text, const std::set<std::string>& vars) {
  try {
    return parse_expr(text, vars);
  } catch (const ParseError& e) {
    throw Failure{UsageError, "parse", e.what(), e.offset()};
  }
}

struct Options {
  std::uint64_t cap = SearchConfig{}.cap;
  std::uint64_t seed = 1;
  bool trace = false;
  std::string expr;
  std::uint64_t digits = 10;
  std::string eps = "1/1000000";
  std::string from;
  std::string to;
  std::string lo;
  std::string hi;
  std::size_t cases = 1000;
  std::size_t queries = 10;
  bool serial = false;
};

void print_digits(std::ostream& out, const CReal& x, std::uint64_t n) {
  out << render_digits(to_signed_digits(x), n) << "\n";
}

void cmd_digits(const Options& o, std::istream& in, std::ostream& out) {
  const ExprPtr e = parse_or_fail(expression_text(o.expr, in), {});
  print_digits(out, eval(e), o.digits);
}

void cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const ExprPtr e = parse_or_fail(expression_text(o.expr, in), {});
  const Rational eps = rational_flag("eps", o.eps);
  if (eps.sign() <= 0) throw Failure{UsageError, "usage", "--eps must be positive", std::nullopt};
  const Bracket b = tight_bound(eval(e), PosRational(eps));
  out << "(" << b.lo << ", " << b.hi << ")\n";
}

void cmd_integrate(const Options& o, std::istream& in, std::ostream& out) {
  const ExprPtr e = parse_or_fail(expression_text(o.expr, in), {"x"});
  const Rational a = rational_flag("from", o.from);
  const Rational b = rational_flag("to", o.to);
  if (!(a < b)) throw Failure{UsageError, "usage", "--from must be below --to", std::nullopt};
  print_digits(out, integrate(expr_map(e, "x", std::make_pair(a, b)), rational(a), rational(b)),
               o.digits);
}

void cmd_root(const Options& o, std::istream& in, std::ostream& out) {
  const ExprPtr e = parse_or_fail(expression_text(o.expr, in), {"x"});
  const Rational a = rational_flag("lo", o.lo);
  const Rational b = rational_flag("hi", o.hi);
  if (!(a < b)) throw Failure{UsageError, "usage", "--lo must be below --hi", std::nullopt};
  print_digits(out, exact_ivt(expr_map(e, "x"), rational(a), rational(b)), o.digits);
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions s;
  s.seed = o.seed;
  s.cases = o.cases;
  s.queries_per_case = o.queries;
  const SuiteReport r = run_soundness_suite(s, o.serial ? Execution::Serial : Execution::Parallel);
  for (const auto& c : r.cases) {
    if (c.passed) continue;
    out << "FAIL " << c.expression << " = " << c.value;
    if (!c.error.empty()) out << " error: " << c.error;
    out << "\n";
  }
  out << "cases passed=" << r.passed_cases << " failed=" << r.failed_cases << "\n";
  out << "queries passed=" << r.passed_queries << " failed=" << r.failed_queries << "\n";
  return r.failed_cases == 0 ? Ok : DomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact real arithmetic with locators"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cap", o.cap, "Iteration cap for bounded searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for the randomized suite");
  app.add_flag("--trace", o.trace, "Print locator query counts to stderr");

  auto* digits = app.add_subcommand("digits", "Integer part and N signed digits");
  digits->add_option("expr", o.expr, "Expression ('-' reads stdin)");
  digits->add_option("-n", o.digits, "Number of digits");

  auto* bounds = app.add_subcommand("bounds", "Rational bracket of width < eps");
  bounds->add_option("expr", o.expr, "Expression ('-' reads stdin)");
  bounds->add_option("--eps", o.eps, "Width bound, a positive rational");

  auto* integ = app.add_subcommand("integrate", "N digits of the integral over [from, to]");
  integ->add_option("expr", o.expr, "Integrand in x ('-' reads stdin)");
  integ->add_option("--from", o.from, "Lower endpoint")->required();
  integ->add_option("--to", o.to, "Upper endpoint")->required();
  integ->add_option("-n", o.digits, "Number of digits");

  auto* root = app.add_subcommand("root", "N digits of a root in [lo, hi]");
  root->add_option("expr", o.expr, "Function of x with f(lo) <= 0 <= f(hi) ('-' reads stdin)");
  root->add_option("--lo", o.lo, "Left endpoint")->required();
  root->add_option("--hi", o.hi, "Right endpoint")->required();
  root->add_option("-n", o.digits, "Number of digits");

  auto* verify = app.add_subcommand("verify", "Forced-query soundness suite over rational oracles");
  verify->add_option("--cases", o.cases, "Number of random expressions");
  verify->add_option("--queries", o.queries, "Forced queries per expression");
  verify->add_flag("--serial", o.serial, "Run the serial kernel");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    report(err, {UsageError, "usage", e.what(), std::nullopt});
    return UsageError;
  }

  SearchConfig config = search_config();
  config.cap = o.cap;
  ScopedSearchConfig scoped(config);
  reset_query_stats();
  int code = Ok;
  try {
    if (*digits) cmd_digits(o, in, out);
    if (*bounds) cmd_bounds(o, in, out);
    if (*integ) cmd_integrate(o, in, out);
    if (*root) cmd_root(o, in, out);
    if (*verify) code = cmd_verify(o, out);
  } catch (const Failure& f) {
    report(err, f);
    code = f.code;
  } catch (const SearchExhausted& e) {
    report(err, {DomainError, "search_exhausted", e.what(), std::nullopt});
    code = DomainError;
  } catch (const PreconditionError& e) {
    report(err, {DomainError, "precondition", e.what(), std::nullopt});
    code = DomainError;
  } catch (const UnsoundLocator& e) {
    report(err, {DomainError, "unsound_locator", e.what(), std::nullopt});
    code = DomainError;
  } catch (const std::exception& e) {
    report(err, {DomainError, "domain", e.what(), std::nullopt});
    code = DomainError;
  }
  if (o.trace) {
    const QueryStats s = query_stats();
    err << "trace: queries=" << s.queries << " evaluations=" << s.evaluations << "\n";
  }
  return code;
}

}  // namespace exactreal::cli
