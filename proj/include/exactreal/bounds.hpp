#pragma once

#include <cstdint>
#include <functional>

#include "exactreal/creal.hpp"

namespace exactreal {

/// How lower_bound/upper_bound look for a witness.
enum class BoundSearch {
  /// Probe ±2^(k+1) first, then fall back to the Q enumeration. The result
  /// is fixed per real and memoized.
  Dyadic,
  /// Scan the Q enumeration only, without consulting the memo.
  Enumeration,
};

/// q < x where q - 1 is returned for the first q with
/// locatesRight(q - 1 <_x q).
Rational lower_bound(const CReal& x, BoundSearch mode = BoundSearch::Dyadic);
/// x < r where r + 1 is returned for the first r with
/// locatesLeft(r <_x r + 1).
Rational upper_bound(const CReal& x, BoundSearch mode = BoundSearch::Dyadic);

/// Bracket of width exactly 2*eps/3 on the grid q + i*eps/3, where q is the
/// memoized lower bound of x. The adjacent pair (right answer followed by
/// left answer) is found by bisection.
Bracket tight_bound(const CReal& x, const PosRational& eps);

/// tight_bound with eps rounded down to a power of two, so repeated requests
/// at nearby precisions land on shared grids. Width < eps.
Bracket bracket_narrower_than(const CReal& x, const PosRational& eps);

/// k with k - 1 < x < k + 1, k = floor(u) + 1 for the eps = 1 bracket (u, v).
Integer integer_bracket(const CReal& x);

enum class MidpointSearch {
  /// Scan scales 10^-j, testing the grid point just above a 10^-j bracket of x.
  Guided,
  /// Cantor-paired scan of (enumerate(i), 10^-j) pairs.
  Enumeration,
};

/// Rational q with x < q < y, assuming x < y. Witnessed by
/// locatesLeft(q - e <_x q) and locatesRight(q <_y q + e).
Rational archimedean_midpoint(const CReal& x, const CReal& y,
                              MidpointSearch mode = MidpointSearch::Guided);

enum class CotransChoice { XBelowS, SBelowY };

/// Assuming x < y, decides x < s or s < y through a rational midpoint.
CotransChoice cotrans_rational(const CReal& x, const CReal& y, const Rational& s);

/// q' with q < q' < x, assuming q < x.
Rational refine_lower(const CReal& x, const Rational& q);
/// r' with x < r' < r, assuming x < r.
Rational refine_upper(const CReal& x, const Rational& r);

/// M with |x_m - x_n| < eps for all m, n >= M(eps).
struct CauchyModulus {
  std::function<std::uint64_t(const PosRational&)> at;
  std::uint64_t operator()(const PosRational& eps) const { return at(eps); }
};

/// Least n with 2 * 10^-n < eps.
std::uint64_t decimal_modulus(const PosRational& eps);

struct CauchySequence {
  std::function<Rational(std::uint64_t)> term;
  CauchyModulus modulus;
};

/// term(n) = midpoint of tight_bound(x, 10^-n); modulus = decimal_modulus.
CauchySequence to_cauchy(const CReal& x);

}  // namespace exactreal
