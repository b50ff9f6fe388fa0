#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exactreal/analysis.hpp"
#include "exactreal/expr.hpp"

namespace exactreal {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  std::size_t queries_per_case = 10;
  int max_depth = 5;
};

/// Query whose side is forced by the exact value.
struct ForcedQuery {
  Rational q;
  Rational r;
  Side expected;
};

struct CaseResult {
  std::string expression;
  Rational value;
  std::vector<ForcedQuery> queries;
  std::vector<Side> answers;
  bool passed = false;
  /// Set when evaluation or a query threw.
  std::string error;
};

struct SuiteReport {
  std::vector<CaseResult> cases;
  std::size_t passed_cases = 0;
  std::size_t failed_cases = 0;
  std::size_t passed_queries = 0;
  std::size_t failed_queries = 0;
};

/// Random tree over rational leaves with neg, add, mul, min, max, abs and
/// recip, the latter only on arguments whose exact value is nonzero. Case i
/// draws from its own generator seeded by (seed, i).
ExprPtr random_expression(std::mt19937_64& rng, int max_depth);
std::vector<ForcedQuery> forced_queries(std::mt19937_64& rng, const Rational& value,
                                        std::size_t count);
std::mt19937_64 case_rng(std::uint64_t seed, std::size_t index);

/// Builds case i, evaluates it with opaque leaves and checks each forced
/// query against the exact value.
CaseResult run_case(const SuiteOptions& opts, std::size_t index);

/// All cases; Parallel splits them over OpenMP threads. Reports are equal
/// for both executions.
SuiteReport run_soundness_suite(const SuiteOptions& opts, Execution exec = Execution::Parallel);

}  // namespace exactreal
