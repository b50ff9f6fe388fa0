#include "exactreal/arith.hpp"

#include <algorithm>
#include <mutex>

namespace exactreal {

namespace {

template <typename F>
std::optional<Rational> both_exact(const CReal& x, const CReal& y, F f) {
  if (x.exact_value() && y.exact_value()) return f(*x.exact_value(), *y.exact_value());
  return std::nullopt;
}

/// Lazily computed rational shared by all queries on one node.
class OnceRational {
 public:
  template <typename F>
  const Rational& get(F compute) {
    std::call_once(flag_, [&] { value_ = compute(); });
    return value_;
  }

 private:
  std::once_flag flag_;
  Rational value_;
};

using Hint = CReal::Hint;

/// The node's hint, or one derived from its exact value.
Hint hint_of(const CReal& x) {
  if (x.node().hint()) return x.node().hint();
  if (const auto& s = x.exact_value())
    return [s = *s](const Rational& w) { return Bracket{s - w / 2, s + w / 2}; };
  return nullptr;
}

}  // namespace

CReal neg(const CReal& x) {
  std::optional<Rational> exact;
  if (x.exact_value()) exact = -*x.exact_value();
  return CReal::from_locator(
      [x](const Rational& q, const Rational& r) { return flip(x.locate(-r, -q)); }, exact,
      !exact && hint_of(x) ? Hint([h = hint_of(x)](const Rational& w) {
        const Bracket b = h(w);
        return Bracket{-b.hi, -b.lo};
      })
                 : Hint());
}

CReal add(const CReal& x, const CReal& y) {
  auto exact = both_exact(x, y, [](const Rational& a, const Rational& b) { return a + b; });
  return CReal::from_locator(
      [x, y](const Rational& q, const Rational& r) {
        const Rational eps = (r - q) / 2;
        const Bracket bx = bracket_narrower_than(x, PosRational(eps));
        const Rational s = q - bx.lo;
        // Right: q - s = u < x and s < y. Left: x < u + e and y < s + e.
        return y.locate(s, s + eps);
      },
      exact,
      !exact && hint_of(x) && hint_of(y) ? Hint([hx = hint_of(x), hy = hint_of(y)](const Rational& w) {
        const Bracket a = hx(w / 2);
        const Bracket b = hy(w / 2);
        return Bracket{a.lo + b.lo, a.hi + b.hi};
      })
                               : Hint());
}

CReal sub(const CReal& x, const CReal& y) { return add(x, neg(y)); }

CReal min(const CReal& x, const CReal& y) {
  return CReal::from_locator(
      [x, y](const Rational& q, const Rational& r) {
        const bool x_left = x.locates_left(q, r);
        const bool y_left = y.locates_left(q, r);
        return (x_left || y_left) ? Side::RealToTheLeft : Side::RealToTheRight;
      },
      both_exact(x, y, [](const Rational& a, const Rational& b) { return exactreal::min(a, b); }));
}

CReal max(const CReal& x, const CReal& y) {
  return CReal::from_locator(
      [x, y](const Rational& q, const Rational& r) {
        const bool x_right = x.locates_right(q, r);
        const bool y_right = y.locates_right(q, r);
        return (x_right || y_right) ? Side::RealToTheRight : Side::RealToTheLeft;
      },
      both_exact(x, y, [](const Rational& a, const Rational& b) { return exactreal::max(a, b); }));
}

CReal abs(const CReal& x) { return max(x, neg(x)); }

Rational magnitude_bound(const CReal& x) {
  return bracket_narrower_than(add(abs(x), rational(1)), PosRational(1)).hi;
}

namespace {

ProductBrackets brackets_for(const CReal& x, const CReal& y, const Rational& z, const Rational& w,
                             const Rational& eps) {
  const Rational delta = min(Rational(1), eps / (z * 2));
  const Rational eta = min(Rational(1), eps / (w * 2));
  ProductBrackets out{bracket_narrower_than(x, PosRational(eta)),
                      bracket_narrower_than(y, PosRational(delta)), 0, 0};
  const std::array<Rational, 4> products{out.x.lo * out.y.lo, out.x.lo * out.y.hi,
                                         out.x.hi * out.y.lo, out.x.hi * out.y.hi};
  out.lowest = products[0];
  out.highest = products[0];
  for (const auto& p : products) {
    out.lowest = min(out.lowest, p);
    out.highest = max(out.highest, p);
  }
  return out;
}

}  // namespace

ProductBrackets product_brackets(const CReal& x, const CReal& y, const PosRational& eps) {
  return brackets_for(x, y, magnitude_bound(x), magnitude_bound(y), eps.value());
}

CReal mul(const CReal& x, const CReal& y) {
  struct State {
    OnceRational z;
    OnceRational w;
  };
  auto state = std::make_shared<State>();
  return CReal::from_locator(
      [x, y, state](const Rational& q, const Rational& r) {
        const Rational& z = state->z.get([&] { return magnitude_bound(x); });
        const Rational& w = state->w.get([&] { return magnitude_bound(y); });
        const ProductBrackets pb = brackets_for(x, y, z, w, r - q);
        if (q < pb.lowest) return Side::RealToTheRight;
        if (pb.highest < r) return Side::RealToTheLeft;
        throw UnsoundLocator("mul: product spread not below the query width");
      },
      both_exact(x, y, [](const Rational& a, const Rational& b) { return a * b; }));
}

CReal recip(const CReal& x, const ApartnessWitness& witness) {
  std::optional<Rational> exact;
  if (x.exact_value() && !x.exact_value()->is_zero()) exact = x.exact_value()->inverse();
  const bool positive = witness.sign == Sign::Positive;
  return CReal::from_locator(
      [x, positive](const Rational& q, const Rational& r) {
        if (positive && q.sign() <= 0) return Side::RealToTheRight;
        if (!positive && r.sign() >= 0) return Side::RealToTheLeft;
        // q and r share the sign of x here, so 1/r < 1/q.
        return flip(x.locate(r.inverse(), q.inverse()));
      },
      exact);
}

CReal recip_via_cotransitivity(const CReal& x, const ApartnessWitness& witness) {
  std::optional<Rational> exact;
  if (x.exact_value() && !x.exact_value()->is_zero()) exact = x.exact_value()->inverse();
  const bool positive = witness.sign == Sign::Positive;
  return CReal::from_locator(
      [x, positive](const Rational& q, const Rational& r) {
        const CReal qx = scale(q, x);
        const CReal rx = scale(r, x);
        if (positive) {
          // qx < rx; qx < 1 means q < 1/x, 1 < rx means 1/x < r.
          return cotrans_rational(qx, rx, 1) == CotransChoice::XBelowS ? Side::RealToTheRight
                                                                       : Side::RealToTheLeft;
        }
        // rx < qx; rx < 1 means 1/x < r, 1 < qx means q < 1/x.
        return cotrans_rational(rx, qx, 1) == CotransChoice::XBelowS ? Side::RealToTheLeft
                                                                     : Side::RealToTheRight;
      },
      exact);
}

ApartnessWitness find_apartness(const CReal& x) {
  const std::uint64_t levels = search_config().precision_limit();
  for (std::uint64_t j = 0; j < levels; ++j) {
    const Rational gap = Rational::pow10(-static_cast<long>(j));
    if (x.locates_right(gap, gap * 2)) return {Sign::Positive, PosRational(gap)};
    if (x.locates_left(-gap * 2, -gap)) return {Sign::Negative, PosRational(gap)};
  }
  throw SearchExhausted("find_apartness: real not separated from 0 within " +
                        std::to_string(levels) + " decimal scales");
}

CReal recip(const CReal& x) { return recip(x, find_apartness(x)); }

CReal div(const CReal& x, const CReal& y) { return mul(x, recip(y)); }

CReal scale(const Rational& c, const CReal& x) {
  if (c.is_zero()) return rational(0);
  std::optional<Rational> exact;
  if (x.exact_value()) exact = c * *x.exact_value();
  return CReal::from_locator(
      [c, x](const Rational& q, const Rational& r) {
        if (c.sign() > 0) return x.locate(q / c, r / c);
        return flip(x.locate(r / c, q / c));
      },
      exact,
      !exact && hint_of(x) ? Hint([c, h = hint_of(x)](const Rational& w) {
        const Bracket b = h(w / c.abs());
        return c.sign() > 0 ? Bracket{b.lo * c, b.hi * c} : Bracket{b.hi * c, b.lo * c};
      })
                 : Hint());
}

CReal shift(const CReal& x, const Rational& c) {
  std::optional<Rational> exact;
  if (x.exact_value()) exact = *x.exact_value() + c;
  return CReal::from_locator([c, x](const Rational& q, const Rational& r) {
    return x.locate(q - c, r - c);
  }, exact, !exact && hint_of(x) ? Hint([c, h = hint_of(x)](const Rational& w) {
    const Bracket b = h(w);
    return Bracket{b.lo + c, b.hi + c};
  })
                       : Hint());
}

CReal sum(std::vector<CReal> terms) {
  Rational exact_part = 0;
  std::vector<CReal> inexact;
  for (auto& t : terms) {
    if (t.exact_value())
      exact_part += *t.exact_value();
    else
      inexact.push_back(std::move(t));
  }
  if (inexact.empty()) return rational(exact_part);
  Hint hint;
  if (std::all_of(inexact.begin(), inexact.end(), [](const CReal& t) { return bool(hint_of(t)); })) {
    hint = [exact_part, inexact](const Rational& w) {
      const Rational each = w / static_cast<long>(inexact.size());
      Bracket out{exact_part, exact_part};
      for (const auto& t : inexact) {
        const Bracket b = hint_of(t)(each);
        out.lo += b.lo;
        out.hi += b.hi;
      }
      return out;
    };
  }
  return CReal::from_locator(
      [exact_part, inexact = std::move(inexact)](const Rational& q, const Rational& r) {
        const Rational eps = (r - q) / 2;
        const std::size_t rest = inexact.size() - 1;
        // Bracket of (exact part + all but the last inexact term), width < eps.
        Rational lo = exact_part;
        if (rest == 0) {
          lo -= eps / 3;
        } else {
          const PosRational each(eps / static_cast<long>(rest));
          for (std::size_t i = 0; i < rest; ++i) lo += bracket_narrower_than(inexact[i], each).lo;
        }
        const Rational s = q - lo;
        return inexact.back().locate(s, s + eps);
      },
      std::nullopt, std::move(hint));
}

}  // namespace exactreal
