#pragma once

// Rational oracles and forced-query helpers shared by the test binaries.

#include <random>
#include <vector>

#include "exactreal/creal.hpp"
#include "exactreal/series.hpp"

namespace exactreal::testing {

/// Closed rational interval known to contain a real.
struct Oracle {
  Rational lo;
  Rational hi;

  static Oracle exact(const Rational& v) { return {v, v}; }
  Rational width() const { return hi - lo; }
  /// |p - x| < tol for every x in the interval.
  bool within(const Rational& p, const Rational& tol) const {
    return (p - lo).abs() < tol && (p - hi).abs() < tol;
  }
  /// Open bracket contains the whole interval.
  bool inside(const Bracket& b) const { return b.lo < lo && hi < b.hi; }
};

inline Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

/// exp(s) for 0 <= s <= 1 from sum_{k<n} s^k/k! and the tail bound 2 s^n/n!.
inline Oracle exp_oracle(const Rational& s, unsigned n = 40) {
  Rational sum = 0, term = 1;
  for (unsigned k = 0; k < n; ++k) {
    sum += term;
    term = term * s / static_cast<long>(k + 1);
  }
  Rational pow = 1;
  for (unsigned k = 0; k < n; ++k) pow *= s;
  return {sum, sum + pow * 2 / factorial(n)};
}

inline Oracle e_oracle() { return exp_oracle(Rational(1)); }

/// arctan(s) for 0 < s < 1 lies between consecutive alternating partial sums.
inline Oracle arctan_oracle(const Rational& s, unsigned n = 40) {
  Rational sum = 0, p = s;
  Rational next;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational t = p / static_cast<long>(2 * k + 1);
    if (k == n) next = (k % 2 == 0) ? sum + t : sum - t;
    else sum += (k % 2 == 0) ? t : -t;
    p *= s * s;
  }
  return {min(sum, next), max(sum, next)};
}

/// 16 arctan(1/5) - 4 arctan(1/239).
inline Oracle pi_oracle() {
  const Oracle a = arctan_oracle(Rational(Integer(1), Integer(5)));
  const Oracle b = arctan_oracle(Rational(Integer(1), Integer(239)));
  return {a.lo * 16 - b.hi * 4, a.hi * 16 - b.lo * 4};
}

/// Bisection on [lo, hi] with a sign test on midpoints: test(m) < 0, > 0,
/// or 0 when undecided (refines the oracle, then asks again).
template <typename Sign>
Oracle bisect(Rational lo, Rational hi, const Rational& width, Sign sign) {
  while (hi - lo >= width) {
    const Rational m = (lo + hi) / 2;
    const int s = sign(m);
    if (s < 0) lo = m;
    else if (s > 0) hi = m;
    else return {m, m};
  }
  return {lo, hi};
}

inline Oracle sqrt2_oracle() {
  return bisect(1, 2, Rational::pow10(-30), [](const Rational& m) {
    const Rational v = m * m - 2;
    return v.sign();
  });
}

/// ln 2 by bisection on t with exp(t) enclosed by the series oracle.
inline Oracle ln2_oracle() {
  return bisect(0, 1, Rational::pow10(-25), [](const Rational& m) {
    const Oracle e = exp_oracle(m, 60);
    if (e.hi < 2) return -1;
    if (e.lo > 2) return 1;
    throw std::logic_error("ln2 oracle undecided");
  });
}

/// Query (q, r) whose side is forced for every point of the oracle interval.
struct Forced {
  Rational q;
  Rational r;
  Side side;
};

inline std::vector<Forced> forced_queries(const Oracle& o, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Forced> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Rational gap = Rational(Integer(rng() % 4 == 0 ? 0 : rng() % 1000 + 1), Integer(1000)) *
                         Rational::pow10(-static_cast<long>(rng() % 6));
    const Rational width = Rational(Integer(rng() % 999 + 1), Integer(1000)) *
                           Rational::pow10(-static_cast<long>(rng() % 6));
    if (rng() % 2 == 0) {
      const Rational r = o.lo - gap;
      out.push_back({r - width, r, Side::RealToTheRight});
    } else {
      const Rational q = o.hi + gap;
      out.push_back({q, q + width, Side::RealToTheLeft});
    }
  }
  return out;
}

/// Number of forced queries x answers wrongly.
inline std::size_t forced_failures(const CReal& x, const Oracle& o, std::uint64_t seed,
                                   std::size_t count) {
  std::size_t bad = 0;
  for (const auto& f : forced_queries(o, seed, count))
    if (x.locate(f.q, f.r) != f.side) ++bad;
  return bad;
}

inline Rational R(const char* text) { return Rational::parse(text); }

}  // namespace exactreal::testing
