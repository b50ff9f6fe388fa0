#include "exactreal/bounds.hpp"

#include "exactreal/enumeration.hpp"

namespace exactreal {

namespace {

constexpr long kDyadicProbes = 4096;

Rational enumeration_lower_bound(const CReal& x) {
  const auto n = bounded_search(
      [&](std::uint64_t i) {
        const Rational q = enumerate(i);
        return x.locates_right(q - 1, q);
      },
      std::nullopt, "lower_bound");
  return enumerate(n) - 1;
}

Rational enumeration_upper_bound(const CReal& x) {
  const auto n = bounded_search(
      [&](std::uint64_t i) {
        const Rational r = enumerate(i);
        return x.locates_left(r, r + 1);
      },
      std::nullopt, "upper_bound");
  return enumerate(n) + 1;
}

}  // namespace

Rational lower_bound(const CReal& x, BoundSearch mode) {
  if (mode == BoundSearch::Enumeration) return enumeration_lower_bound(x);
  if (auto known = x.node().anchor_lo()) return *known;
  std::optional<Rational> found;
  for (long k = 0; k < kDyadicProbes && !found; ++k) {
    const Rational p = Rational::pow2(k + 1);
    for (const Rational& q : {p, -p}) {
      if (x.locates_right(q - 1, q)) {
        found = q - 1;
        break;
      }
    }
  }
  if (!found) found = enumeration_lower_bound(x);
  x.node().set_anchor_lo(*found);
  return *x.node().anchor_lo();
}

Rational upper_bound(const CReal& x, BoundSearch mode) {
  if (mode == BoundSearch::Enumeration) return enumeration_upper_bound(x);
  if (auto known = x.node().anchor_hi()) return *known;
  std::optional<Rational> found;
  for (long k = 0; k < kDyadicProbes && !found; ++k) {
    const Rational p = Rational::pow2(k + 1);
    for (const Rational& r : {-p, p}) {
      if (x.locates_left(r, r + 1)) {
        found = r + 1;
        break;
      }
    }
  }
  if (!found) found = enumeration_upper_bound(x);
  x.node().set_anchor_hi(*found);
  return *x.node().anchor_hi();
}

Bracket tight_bound(const CReal& x, const PosRational& eps) {
  const Rational anchor = lower_bound(x);
  const Rational step = eps.value() / 3;
  auto grid = [&](const Integer& i) { return anchor + step * Rational(i); };
  if (auto h = x.approximate(PosRational(step))) x.node().narrow(h->lo, h->hi);

  // Answers on the grid are forced to the right below x and to the left
  // above it, with at most one unforced cell, so the right-to-left switch
  // is unique and does not depend on where bisection starts.
  Integer right = -1;
  if (auto lo = x.node().cached_lo(); lo && anchor < *lo) {
    const Integer from_cache = ((*lo - anchor) / step).floor() - 1;
    if (from_cache > right) right = from_cache;
  }
  auto hi = x.node().cached_hi();
  const Rational top = hi ? *hi : upper_bound(x);
  Integer left = ((top - anchor) / step).ceil();
  if (left <= right) left = right + 1;

  while (left - right > 1) {
    Integer mid = (left + right);
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    if (x.locates_right(grid(mid), grid(mid + 1)))
      right = mid;
    else
      left = mid;
  }
  Bracket out{grid(right), grid(right + 2)};
  x.node().narrow(out.lo, out.hi);
  return out;
}

Bracket bracket_narrower_than(const CReal& x, const PosRational& eps) {
  return tight_bound(x, PosRational(floor_pow2(eps)));
}

Integer integer_bracket(const CReal& x) {
  const Bracket b = tight_bound(x, PosRational(1));
  return b.lo.floor() + 1;
}

Rational archimedean_midpoint(const CReal& x, const CReal& y, MidpointSearch mode) {
  auto test = [&](const Rational& q, const Rational& e) {
    return x.locates_left(q - e, q) && y.locates_right(q, q + e);
  };
  if (mode == MidpointSearch::Enumeration) {
    const auto n = bounded_search(
        [&](std::uint64_t k) {
          const auto [i, j] = cantor_unpair(k);
          return test(enumerate(i), Rational::pow10(-static_cast<long>(j)));
        },
        std::nullopt, "archimedean_midpoint");
    return enumerate(cantor_unpair(n).first);
  }
  const std::uint64_t levels = search_config().precision_limit();
  for (std::uint64_t j = 0; j < levels; ++j) {
    const Rational e = Rational::pow10(-static_cast<long>(j));
    const Bracket bx = bracket_narrower_than(x, PosRational(e));
    const Rational q = (Rational(Integer((bx.hi / e).ceil() + 1))) * e;
    if (test(q, e)) return q;
  }
  throw SearchExhausted("archimedean_midpoint: no rational found within " +
                        std::to_string(levels) + " precision levels");
}

CotransChoice cotrans_rational(const CReal& x, const CReal& y, const Rational& s) {
  const Rational q = archimedean_midpoint(x, y);
  return trichotomy(q, s) == Ordering::Greater ? CotransChoice::SBelowY : CotransChoice::XBelowS;
}

Rational refine_lower(const CReal& x, const Rational& q) {
  return archimedean_midpoint(rational(q), x);
}

Rational refine_upper(const CReal& x, const Rational& r) {
  return archimedean_midpoint(x, rational(r));
}

std::uint64_t decimal_modulus(const PosRational& eps) {
  std::uint64_t n = 0;
  Rational bound = 2;
  while (!(bound < eps.value())) {
    bound /= 10;
    ++n;
  }
  return n;
}

CauchySequence to_cauchy(const CReal& x) {
  CauchySequence out;
  out.term = [x](std::uint64_t n) {
    return tight_bound(x, PosRational(Rational::pow10(-static_cast<long>(n)))).midpoint();
  };
  out.modulus.at = [](const PosRational& eps) { return decimal_modulus(eps); };
  return out;
}

}  // namespace exactreal
