#pragma once

#include <array>
#include <span>
#include <vector>

#include "exactreal/bounds.hpp"
#include "exactreal/creal.hpp"

namespace exactreal {

enum class Sign { Positive, Negative };

/// Evidence that x is apart from zero: Positive asserts x > gap,
/// Negative asserts x < -gap.
struct ApartnessWitness {
  Sign sign;
  PosRational gap;
};

/// locate(-x, q, r) is the flipped answer of locate(x, -r, -q).
CReal neg(const CReal& x);
/// Per query: e = (r-q)/2, bracket x to width < e as (u, v), then ask y
/// about (q-u, q-u+e).
CReal add(const CReal& x, const CReal& y);
CReal sub(const CReal& x, const CReal& y);
CReal min(const CReal& x, const CReal& y);
CReal max(const CReal& x, const CReal& y);
/// max(x, -x).
CReal abs(const CReal& x);
CReal mul(const CReal& x, const CReal& y);
/// Elementary reciprocal: sign of the witness, then x queried at (1/r, 1/q).
CReal recip(const CReal& x, const ApartnessWitness& witness);
/// Reciprocal through (qx < 1) + (1 < rx) decided by cotransitivity; slower,
/// kept as an independent construction.
CReal recip_via_cotransitivity(const CReal& x, const ApartnessWitness& witness);
/// recip(x, find_apartness(x)).
CReal recip(const CReal& x);
CReal div(const CReal& x, const CReal& y);

/// c * x for a rational c: x queried at (q/c, r/c).
CReal scale(const Rational& c, const CReal& x);
/// x + c for a rational c: x queried at (q - c, r - c).
CReal shift(const CReal& x, const Rational& c);

/// Finite sum x_0 + ... + x_{n-1} with the addition locator generalized to
/// n terms: the first n-1 summands are bracketed to width < e/(n-1) each,
/// the last is asked about the remaining window.
CReal sum(std::vector<CReal> terms);

/// Searches j = 0, 1, ... for locatesRight(10^-j <_x 2*10^-j) (Positive) or
/// locatesLeft(-2*10^-j <_x -10^-j) (Negative), with gap 10^-j.
ApartnessWitness find_apartness(const CReal& x);

/// The four products of brackets a < x < b, c < y < d used to answer one
/// multiplication query of width e = r - q.
struct ProductBrackets {
  Bracket x;
  Bracket y;
  Rational lowest;
  Rational highest;
};
ProductBrackets product_brackets(const CReal& x, const CReal& y, const PosRational& eps);

/// Rational z with |x| + 1 < z, from a bracket of |x| + 1.
Rational magnitude_bound(const CReal& x);

}  // namespace exactreal
