#include "exactreal/series.hpp"

#include <mutex>
#include <vector>

#include "exactreal/arith.hpp"
#include "exactreal/limit.hpp"

namespace exactreal {

namespace {

// Power series sum_k t_k with t_0 = first and t_k = t_{k-1} * m * coefficient(k),
// m being x or x^2.
using Coefficient = Rational (*)(std::uint64_t);

Rational exp_coefficient(std::uint64_t k) { return Rational(Integer(1), Integer(k)); }
Rational sin_coefficient(std::uint64_t k) {
  return Rational(Integer(-1), Integer(2 * k) * Integer(2 * k + 1));
}
Rational cos_coefficient(std::uint64_t k) {
  return Rational(Integer(-1), Integer(2 * k - 1) * Integer(2 * k));
}

class RationalSeries {
 public:
  RationalSeries(Rational first, Rational multiplier, Coefficient c)
      : multiplier_(std::move(multiplier)), coefficient_(c) {
    terms_.push_back(std::move(first));
    partials_.push_back(0);
  }

  /// Sum of the first n terms.
  Rational partial(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (partials_.size() <= n) {
      const std::uint64_t k = partials_.size() - 1;
      while (terms_.size() <= k) {
        const std::uint64_t j = terms_.size();
        terms_.push_back(terms_.back() * multiplier_ * coefficient_(j));
      }
      partials_.push_back(partials_.back() + terms_[k]);
    }
    return partials_[n];
  }

 private:
  std::mutex mu_;
  Rational multiplier_;
  Coefficient coefficient_;
  std::vector<Rational> terms_;
  std::vector<Rational> partials_;
};

class RealSeries {
 public:
  RealSeries(CReal first, CReal multiplier, Coefficient c)
      : multiplier_(std::move(multiplier)), coefficient_(c) {
    terms_.push_back(std::move(first));
    partials_.push_back(rational(0));
  }

  CReal partial(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (partials_.size() <= n) {
      const std::uint64_t k = partials_.size() - 1;
      while (terms_.size() <= k) {
        const std::uint64_t j = terms_.size();
        terms_.push_back(scale(coefficient_(j), mul(terms_.back(), multiplier_)));
      }
      partials_.push_back(add(partials_.back(), terms_[k]));
    }
    return partials_[n];
  }

 private:
  std::mutex mu_;
  CReal multiplier_;
  Coefficient coefficient_;
  std::vector<CReal> terms_;
  std::vector<CReal> partials_;
};

Rational power(const Rational& b, std::uint64_t n) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < n; ++i) out *= b;
  return out;
}

Rational factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

using TermsNeeded = std::uint64_t (*)(const Rational&, const PosRational&);

/// Modulus from a bound B >= |x| supplied lazily.
CauchyModulus modulus_from_bound(std::function<Rational()> bound, TermsNeeded needed) {
  auto once = std::make_shared<std::once_flag>();
  auto value = std::make_shared<Rational>();
  return CauchyModulus{[=](const PosRational& eps) {
    std::call_once(*once, [&] { *value = bound(); });
    return needed(*value, eps);
  }};
}

// odd: the first term is x itself, otherwise 1.
CReal series(const CReal& x, bool odd, bool squared, Coefficient c, TermsNeeded needed) {
  if (const auto& s = x.exact_value()) {
    auto sums = std::make_shared<RationalSeries>(odd ? *s : Rational(1), squared ? *s * *s : *s, c);
    const Rational bound = s->abs();
    return limit_of_rationals([sums](std::uint64_t n) { return sums->partial(n); },
                              CauchyModulus{[bound, needed](const PosRational& eps) {
                                return needed(bound, eps);
                              }});
  }
  auto sums = std::make_shared<RealSeries>(odd ? x : rational(1), squared ? mul(x, x) : x, c);
  return limit([sums](std::uint64_t n) { return sums->partial(n); },
               modulus_from_bound([x] { return upper_bound(abs(x)); }, needed));
}

}  // namespace

std::uint64_t exp_terms_needed(const Rational& bound, const PosRational& eps) {
  std::uint64_t n = static_cast<std::uint64_t>(Integer((bound * 2).ceil()).get_ui());
  Rational tail = power(bound, n) / factorial(n);
  while (!(tail * 2 < eps.value())) {
    ++n;
    tail = tail * bound / static_cast<long>(n);
  }
  return n;
}

std::uint64_t sin_terms_needed(const Rational& bound, const PosRational& eps) {
  const Rational b2 = bound * bound;
  for (std::uint64_t n = 0;; ++n) {
    const Rational decreasing_from = Rational(Integer(Integer(2 * n + 2) * Integer(2 * n + 3)));
    if (decreasing_from < b2) continue;
    if (power(bound, 2 * n + 1) / factorial(2 * n + 1) * 2 < eps.value()) return n;
  }
}

std::uint64_t cos_terms_needed(const Rational& bound, const PosRational& eps) {
  const Rational b2 = bound * bound;
  for (std::uint64_t n = 0;; ++n) {
    const Rational decreasing_from = Rational(Integer(Integer(2 * n + 1) * Integer(2 * n + 2)));
    if (decreasing_from < b2) continue;
    if (power(bound, 2 * n) / factorial(2 * n) * 2 < eps.value()) return n;
  }
}

std::uint64_t arctan_terms_needed(const Rational& s, const PosRational& eps) {
  const Rational a = s.abs();
  Rational p = a;
  for (std::uint64_t n = 0;; ++n) {
    if (p / static_cast<long>(2 * n + 1) * 2 < eps.value()) return n;
    p *= a * a;
  }
}

Rational exp_partial_sum(const Rational& x, std::uint64_t n) {
  Rational term = 1;
  Rational out = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    out += term;
    term = term * x / static_cast<long>(k + 1);
  }
  return out;
}

Rational arctan_partial_sum(const Rational& s, std::uint64_t n) {
  Rational p = s;
  Rational out = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const Rational t = p / static_cast<long>(2 * k + 1);
    out += (k % 2 == 0) ? t : -t;
    p *= s * s;
  }
  return out;
}

CReal exp(const CReal& x) { return series(x, false, false, exp_coefficient, exp_terms_needed); }
CReal sin(const CReal& x) { return series(x, true, true, sin_coefficient, sin_terms_needed); }
CReal cos(const CReal& x) { return series(x, false, true, cos_coefficient, cos_terms_needed); }

CReal arctan_rational(const Rational& s) {
  if (!(s.abs() < 1)) throw PreconditionError("arctan_rational needs |s| < 1");
  return limit_of_rationals([s](std::uint64_t n) { return arctan_partial_sum(s, n); },
                            CauchyModulus{[s](const PosRational& eps) {
                              return arctan_terms_needed(s, eps);
                            }});
}

CReal e() {
  static const CReal value = exp(rational(1));
  return value;
}

CReal pi() {
  static const CReal value =
      sub(scale(16, arctan_rational(Rational(Integer(1), Integer(5)))),
          scale(4, arctan_rational(Rational(Integer(1), Integer(239)))));
  return value;
}

}  // namespace exactreal
