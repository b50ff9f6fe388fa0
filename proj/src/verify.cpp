#include "exactreal/verify.hpp"

#include <exception>

namespace exactreal {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Rational random_leaf(std::mt19937_64& rng) {
  const long num = static_cast<long>(draw(rng, 19)) - 9;
  const long den = static_cast<long>(draw(rng, 9)) + 1;
  return Rational(Integer(num), Integer(den));
}

/// Tree with the literal's sign folded into a Neg so printed text reparses.
ExprPtr leaf(const Rational& v) {
  if (v.sign() < 0) return make_unary(UnaryOp::Neg, make_literal(-v));
  return make_literal(v);
}

}  // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ExprPtr random_expression(std::mt19937_64& rng, int max_depth) {
  if (max_depth <= 0 || draw(rng, 4) == 0) return leaf(random_leaf(rng));
  switch (draw(rng, 7)) {
    case 0: return make_unary(UnaryOp::Neg, random_expression(rng, max_depth - 1));
    case 1: return make_unary(UnaryOp::Abs, random_expression(rng, max_depth - 1));
    case 2: {
      ExprPtr arg = random_expression(rng, max_depth - 1);
      const auto v = eval_rational(arg);
      if (!v || v->is_zero()) return make_unary(UnaryOp::Neg, arg);
      return make_unary(UnaryOp::Recip, arg);
    }
    case 3:
      return make_binary(BinaryOp::Add, random_expression(rng, max_depth - 1),
                         random_expression(rng, max_depth - 1));
    case 4:
      return make_binary(BinaryOp::Mul, random_expression(rng, max_depth - 1),
                         random_expression(rng, max_depth - 1));
    case 5:
      return make_binary(BinaryOp::Min, random_expression(rng, max_depth - 1),
                         random_expression(rng, max_depth - 1));
    default:
      return make_binary(BinaryOp::Max, random_expression(rng, max_depth - 1),
                         random_expression(rng, max_depth - 1));
  }
}

std::vector<ForcedQuery> forced_queries(std::mt19937_64& rng, const Rational& value,
                                        std::size_t count) {
  std::vector<ForcedQuery> out;
  for (std::size_t i = 0; i < count; ++i) {
    // Offsets from 0 (touching the value) up to about 1, widths down to 1e-6.
    const Rational gap = Rational(Integer(draw(rng, 4) == 0 ? 0 : draw(rng, 1000) + 1),
                                  Integer(1000)) *
                         Rational::pow10(-static_cast<long>(draw(rng, 4)));
    const Rational width = Rational(Integer(draw(rng, 999) + 1), Integer(1000)) *
                           Rational::pow10(-static_cast<long>(draw(rng, 4)));
    if (draw(rng, 2) == 0) {
      // r <= value: q < x holds and x < r fails.
      const Rational r = value - gap;
      out.push_back({r - width, r, Side::RealToTheRight});
    } else {
      const Rational q = value + gap;
      out.push_back({q, q + width, Side::RealToTheLeft});
    }
  }
  return out;
}

CaseResult run_case(const SuiteOptions& opts, std::size_t index) {
  std::mt19937_64 rng = case_rng(opts.seed, index);
  const ExprPtr e = random_expression(rng, opts.max_depth);
  CaseResult out;
  out.expression = print_expr(e);
  out.value = *eval_rational(e);
  out.queries = forced_queries(rng, out.value, opts.queries_per_case);
  try {
    const CReal x = eval(e, {}, EvalOptions{true});
    for (const auto& fq : out.queries) out.answers.push_back(x.locate(fq.q, fq.r));
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  out.passed = out.error.empty() && out.answers.size() == out.queries.size();
  for (std::size_t i = 0; out.passed && i < out.answers.size(); ++i)
    out.passed = out.answers[i] == out.queries[i].expected;
  return out;
}

SuiteReport run_soundness_suite(const SuiteOptions& opts, Execution exec) {
  SuiteReport report;
  report.cases.resize(opts.cases);
  const auto n = static_cast<std::int64_t>(opts.cases);
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) report.cases[i] = run_case(opts, static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) report.cases[i] = run_case(opts, static_cast<std::size_t>(i));
  }
  for (const auto& c : report.cases) {
    ++(c.passed ? report.passed_cases : report.failed_cases);
    for (std::size_t i = 0; i < c.queries.size(); ++i) {
      const bool ok = i < c.answers.size() && c.answers[i] == c.queries[i].expected;
      ++(ok ? report.passed_queries : report.failed_queries);
    }
  }
  return report;
}

}  // namespace exactreal
