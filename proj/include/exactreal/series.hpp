#pragma once

#include <cstdint>

#include "exactreal/bounds.hpp"
#include "exactreal/creal.hpp"

namespace exactreal {

/// Partial sums of sum x^k/k!. With |x| <= B the tail past N >= 2B is at
/// most 2 B^N / N!, which gives the Cauchy modulus. A rational argument is
/// summed in Q; any other argument through add/mul on reals, with B taken
/// from upper_bound(|x|).
CReal exp(const CReal& x);
/// Alternating series; past the point where terms decrease the tail is
/// below the first omitted term.
CReal sin(const CReal& x);
CReal cos(const CReal& x);

/// arctan(s) for |s| < 1 as a limit of rational partial sums.
CReal arctan_rational(const Rational& s);

/// exp(1).
CReal e();
/// 16 arctan(1/5) - 4 arctan(1/239).
CReal pi();

/// Moduli used above, exposed for tests.
std::uint64_t exp_terms_needed(const Rational& bound, const PosRational& eps);
std::uint64_t sin_terms_needed(const Rational& bound, const PosRational& eps);
std::uint64_t cos_terms_needed(const Rational& bound, const PosRational& eps);
std::uint64_t arctan_terms_needed(const Rational& s, const PosRational& eps);

/// Rational partial sums, exposed for oracles: first n terms.
Rational exp_partial_sum(const Rational& x, std::uint64_t n);
Rational arctan_partial_sum(const Rational& s, std::uint64_t n);

}  // namespace exactreal
