#pragma once

#include <cstdint>
#include <vector>

#include "exactreal/arith.hpp"
#include "exactreal/realmap.hpp"

namespace exactreal {

/// sign * (f(point) - t) > gap.
struct NonzeroWitness {
  Rational point;
  PosRational gap;
  Sign sign;
};

/// Execution of the Riemann-sum term kernels.
enum class Execution { Serial, Parallel };

/// Rational B with b - a <= B: b - a itself for rational endpoints, else the
/// upper end of a 1/16 bracket of b - a.
Rational interval_bound(const CReal& a, const CReal& b);

/// S_n = ((b-a)/n) * sum_{k<n} f(a + k(b-a)/n). Rational terms are summed in
/// Q once; the others are bracketed per query.
CReal riemann_sum(const RealMap& f, const CReal& a, const CReal& b, std::uint64_t n,
                  Execution exec = Execution::Parallel);

/// Least n with B/n <= omega(eps/(4B)).
std::uint64_t integration_terms(const UniformModulus& omega, const Rational& bound,
                                const PosRational& eps);

/// Limit of riemann_sum with modulus integration_terms. Requires f.modulus.
CReal integrate(const RealMap& f, const CReal& a, const CReal& b,
                Execution exec = Execution::Parallel);

struct ApproxIvtStep {
  CReal z;
  CReal w;
};

/// x with |f(x)| < eps, assuming f(a) < 0 < f(b): the limit of
/// c_n = (z_n + w_n)/2 with
///   d_n = max(0, min(1/2 + f(c_n)/eps, 1)),
///   z_{n+1} = c_n - d_n (b-a)/2^(n+1),  w_{n+1} = w_n - d_n (b-a)/2^(n+1).
CReal approx_ivt(const RealMap& f, const CReal& a, const CReal& b, const PosRational& eps);
/// (z_n, w_n) for n = 0..steps.
std::vector<ApproxIvtStep> approx_ivt_iterates(const RealMap& f, const CReal& a, const CReal& b,
                                               const PosRational& eps, std::uint64_t steps);

/// Scans pairs (i, j) in Cantor order with r_i = enumerate_interval(lo, hi, i)
/// and eta = 10^-j, testing locatesRight(eta <_g 2 eta) (Positive) and then
/// locatesLeft(-2 eta <_g -eta) (Negative) on g = f(r_i) - t.
NonzeroWitness nonconstant_search(const RealMap& f, const Rational& lo, const Rational& hi,
                                  const CReal& t);

struct TrisectionStep {
  CReal a;
  CReal b;
  /// Witness used to get from this interval to the next.
  std::optional<NonzeroWitness> split;
};

/// Root of f on [a, b], assuming f(a) <= 0 <= f(b) and f locally nonconstant.
/// Each step picks q strictly inside ((2a+b)/3, (a+2b)/3) with f(q) apart
/// from 0, keeps (a, q) when f(q) > 0 and (q, b) when f(q) < 0, and the root
/// is the limit of the a_n with modulus from B (2/3)^n.
CReal exact_ivt(const RealMap& f, const CReal& a, const CReal& b);
/// Intervals 0..steps of the same recurrence.
std::vector<TrisectionStep> exact_ivt_steps(const RealMap& f, const CReal& a, const CReal& b,
                                            std::uint64_t steps);

}  // namespace exactreal
