#include "exactreal/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>

#include "exactreal/enumeration.hpp"
#include "exactreal/limit.hpp"

namespace exactreal {

namespace {

/// Sum of rationals over a running common denominator; cheap when the
/// denominators keep dividing it, as for grid points k/n.
class Accumulator {
 public:
  void add(const Rational& v) {
    const Integer& p = v.numerator();
    const Integer& q = v.denominator();
    if (mpz_divisible_p(den_.get_mpz_t(), q.get_mpz_t())) {
      Integer f;
      mpz_divexact(f.get_mpz_t(), den_.get_mpz_t(), q.get_mpz_t());
      mpz_addmul(num_.get_mpz_t(), p.get_mpz_t(), f.get_mpz_t());
      return;
    }
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), q.get_mpz_t());
    num_ = num_ * (l / den_) + p * (l / q);
    den_ = l;
  }
  void add(const Accumulator& o) { add(o.value()); }
  Rational value() const { return Rational(num_, den_); }

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

/// The points a + k*delta and the terms f at those points.
struct TermGrid {
  RealMap f;
  CReal a;
  CReal delta;

  CReal point(std::uint64_t k) const {
    if (k == 0) return a;
    if (a.exact_value() && delta.exact_value())
      return rational(*a.exact_value() + *delta.exact_value() * Rational(Integer(k)));
    return add(a, scale(Rational(Integer(k)), delta));
  }
  CReal term(std::uint64_t k) const { return f.apply(point(k)); }
};

/// Runs body(k, acc) for k in [0, n) with one accumulator per thread and
/// returns the total. Exceptions are rethrown after the loop.
template <typename Body>
Rational accumulate(std::uint64_t n, Execution exec, Body body) {
  if (exec == Execution::Serial || n < 2) {
    Accumulator acc;
    for (std::uint64_t k = 0; k < n; ++k) body(k, acc);
    return acc.value();
  }
  const int threads = omp_get_max_threads();
  std::vector<Accumulator> partials(static_cast<std::size_t>(threads));
  std::exception_ptr error;
  std::mutex error_mu;
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    try {
      body(static_cast<std::uint64_t>(k), partials[static_cast<std::size_t>(omp_get_thread_num())]);
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  Accumulator total;
  for (const auto& p : partials) total.add(p);
  return total.value();
}

/// sum_{k<n} f(p_k): exact terms folded into one rational, the others
/// bracketed per query width (cached) with the last one queried directly.
class TermSum {
 public:
  TermSum(TermGrid grid, std::uint64_t n, Execution exec) : grid_(std::move(grid)), exec_(exec) {
    std::vector<std::vector<std::uint64_t>> inexact(
        static_cast<std::size_t>(exec == Execution::Serial ? 1 : omp_get_max_threads()));
    exact_ = accumulate(n, exec, [&](std::uint64_t k, Accumulator& acc) {
      const CReal t = grid_.term(k);
      if (t.exact_value())
        acc.add(*t.exact_value());
      else
        inexact[exec == Execution::Serial ? 0 : static_cast<std::size_t>(omp_get_thread_num())]
            .push_back(k);
    });
    for (auto& part : inexact) inexact_.insert(inexact_.end(), part.begin(), part.end());
    std::sort(inexact_.begin(), inexact_.end());
    if (!inexact_.empty()) {
      last_ = grid_.term(inexact_.back());
      inexact_.pop_back();
    }
  }

  bool all_exact() const { return !last_; }
  const Rational& exact_part() const { return exact_; }

  Side locate(const Rational& q, const Rational& r) {
    const Rational eps = (r - q) / 2;
    Rational lo = exact_;
    if (inexact_.empty())
      lo -= eps / 3;
    else
      lo += lower_sum(floor_pow2(PosRational(eps / static_cast<long>(inexact_.size()))));
    const Rational s = q - lo;
    return last_->locate(s, s + eps);
  }

 private:
  /// Sum of lower ends of brackets of width < each, one per inexact term
  /// except the last.
  Rational lower_sum(const Rational& each) {
    {
      std::lock_guard lock(mu_);
      if (auto it = lower_sums_.find(each); it != lower_sums_.end()) return it->second;
    }
    const PosRational half(each / 2);
    const PosRational full(each);
    const Rational total =
        accumulate(inexact_.size(), exec_, [&](std::uint64_t i, Accumulator& acc) {
          const CReal t = grid_.term(inexact_[i]);
          if (auto h = t.approximate(half))
            acc.add(h->lo);
          else
            acc.add(bracket_narrower_than(t, full).lo);
        });
    std::lock_guard lock(mu_);
    return lower_sums_.emplace(each, total).first->second;
  }

  TermGrid grid_;
  Execution exec_;
  Rational exact_;
  std::vector<std::uint64_t> inexact_;
  std::optional<CReal> last_;
  std::mutex mu_;
  std::map<Rational, Rational> lower_sums_;
};

CReal bounded_difference(const CReal& a, const CReal& b) {
  if (a.exact_value() && b.exact_value()) return rational(*b.exact_value() - *a.exact_value());
  return sub(b, a);
}

}  // namespace

Rational interval_bound(const CReal& a, const CReal& b) {
  if (a.exact_value() && b.exact_value()) return *b.exact_value() - *a.exact_value();
  return bracket_narrower_than(sub(b, a), PosRational(Rational(Integer(1), Integer(16)))).hi;
}

CReal riemann_sum(const RealMap& f, const CReal& a, const CReal& b, std::uint64_t n,
                  Execution exec) {
  if (n == 0) throw PreconditionError("riemann_sum needs n >= 1");
  const Rational inv_n(Integer(1), Integer(n));
  const CReal width = bounded_difference(a, b);
  const CReal delta = scale(inv_n, width);
  auto sum = std::make_shared<TermSum>(TermGrid{f, a, delta}, n, exec);
  CReal total = sum->all_exact()
                    ? rational(sum->exact_part())
                    : CReal::from_locator([sum](const Rational& q, const Rational& r) {
                        return sum->locate(q, r);
                      });
  if (const auto& d = delta.exact_value()) return scale(*d, total);
  return mul(delta, total);
}

std::uint64_t integration_terms(const UniformModulus& omega, const Rational& bound,
                                const PosRational& eps) {
  const Rational w = omega(PosRational(eps.value() / (bound * 4))).value();
  const Integer n = (bound / w).ceil();
  return n < 1 ? 1 : n.get_ui();
}

CReal integrate(const RealMap& f, const CReal& a, const CReal& b, Execution exec) {
  if (!f.modulus) throw PreconditionError("integrate needs a modulus of uniform continuity");
  const UniformModulus omega = *f.modulus;
  auto bound = std::make_shared<std::optional<Rational>>();
  auto once = std::make_shared<std::once_flag>();
  auto get_bound = [=] {
    std::call_once(*once, [&] { *bound = interval_bound(a, b); });
    return **bound;
  };
  return limit([=](std::uint64_t n) { return riemann_sum(f, a, b, n, exec); },
               CauchyModulus{[=](const PosRational& eps) {
                 return integration_terms(omega, get_bound(), eps);
               }});
}

namespace {

CReal clamp_unit(const CReal& v) { return max(rational(0), min(v, rational(1))); }

/// Shared recurrence state for approx_ivt; iterates are extended on demand.
class Halving {
 public:
  Halving(RealMap f, CReal a, CReal b, PosRational eps)
      : f_(std::move(f)), a_(a), b_(b), eps_(std::move(eps)), width_(bounded_difference(a, b)) {
    steps_.push_back({std::move(a), std::move(b)});
  }

  ApproxIvtStep at(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (steps_.size() <= n) {
      const std::uint64_t k = steps_.size() - 1;
      const ApproxIvtStep& s = steps_.back();
      const CReal c = midpoint(s.z, s.w);
      const CReal d = clamp_unit(shift(scale(eps_.value().inverse(), f_.apply(c)),
                                       Rational(Integer(1), Integer(2))));
      const Rational factor = Rational::pow2(-static_cast<long>(k + 1));
      const CReal move = width_.exact_value() ? scale(*width_.exact_value() * factor, d)
                                              : mul(d, scale(factor, width_));
      steps_.push_back({sub(c, move), sub(s.w, move)});
    }
    return steps_[n];
  }

  CReal c(std::uint64_t n) {
    const ApproxIvtStep s = at(n);
    return midpoint(s.z, s.w);
  }

 private:
  static CReal midpoint(const CReal& z, const CReal& w) {
    if (z.exact_value() && w.exact_value())
      return rational((*z.exact_value() + *w.exact_value()) / 2);
    return scale(Rational(Integer(1), Integer(2)), add(z, w));
  }

  RealMap f_;
  CReal a_;
  CReal b_;
  PosRational eps_;
  CReal width_;
  std::mutex mu_;
  std::vector<ApproxIvtStep> steps_;
};

/// Least n with bound * ratio^n < eps.
std::uint64_t geometric_modulus(const Rational& bound, const Rational& ratio,
                                const PosRational& eps) {
  std::uint64_t n = 0;
  Rational v = bound;
  while (!(v < eps.value())) {
    v *= ratio;
    ++n;
  }
  return n;
}

CauchyModulus geometric(const CReal& a, const CReal& b, Rational ratio) {
  auto bound = std::make_shared<std::optional<Rational>>();
  auto once = std::make_shared<std::once_flag>();
  return CauchyModulus{[=](const PosRational& eps) {
    std::call_once(*once, [&] { *bound = interval_bound(a, b); });
    return geometric_modulus(**bound, ratio, eps);
  }};
}

}  // namespace

CReal approx_ivt(const RealMap& f, const CReal& a, const CReal& b, const PosRational& eps) {
  auto state = std::make_shared<Halving>(f, a, b, eps);
  return limit([state](std::uint64_t n) { return state->c(n); },
               geometric(a, b, Rational(Integer(1), Integer(2))));
}

std::vector<ApproxIvtStep> approx_ivt_iterates(const RealMap& f, const CReal& a, const CReal& b,
                                               const PosRational& eps, std::uint64_t steps) {
  Halving state(f, a, b, eps);
  std::vector<ApproxIvtStep> out;
  for (std::uint64_t n = 0; n <= steps; ++n) out.push_back(state.at(n));
  return out;
}

NonzeroWitness nonconstant_search(const RealMap& f, const Rational& lo, const Rational& hi,
                                  const CReal& t) {
  if (!(lo < hi)) throw PreconditionError("nonconstant_search needs lo < hi");
  std::map<std::uint64_t, CReal> values;
  auto g = [&](std::uint64_t i) -> const CReal& {
    if (auto it = values.find(i); it != values.end()) return it->second;
    const CReal fr = f.apply(rational(enumerate_interval(lo, hi, i)));
    const CReal v = t.exact_value() ? shift(fr, -*t.exact_value()) : sub(fr, t);
    return values.emplace(i, v).first->second;
  };
  std::optional<NonzeroWitness> found;
  bounded_search(
      [&](std::uint64_t n) {
        const auto [i, j] = cantor_unpair(n);
        const Rational eta = Rational::pow10(-static_cast<long>(j));
        const CReal& v = g(i);
        if (v.locates_right(eta, eta * 2)) {
          found = NonzeroWitness{enumerate_interval(lo, hi, i), PosRational(eta), Sign::Positive};
          return true;
        }
        if (v.locates_left(-eta * 2, -eta)) {
          found = NonzeroWitness{enumerate_interval(lo, hi, i), PosRational(eta), Sign::Negative};
          return true;
        }
        return false;
      },
      std::nullopt, "nonconstant_search");
  return *found;
}

namespace {

/// c_a * a + c_b * b, kept rational when both ends are.
CReal affine(const CReal& a, const CReal& b, const Rational& ca, const Rational& cb) {
  if (a.exact_value() && b.exact_value())
    return rational(ca * *a.exact_value() + cb * *b.exact_value());
  return add(scale(ca, a), scale(cb, b));
}

class Trisection {
 public:
  Trisection(RealMap f, CReal a, CReal b) : f_(std::move(f)) {
    steps_.push_back({std::move(a), std::move(b), std::nullopt});
  }

  TrisectionStep at(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (steps_.size() <= n) {
      TrisectionStep& s = steps_.back();
      const Rational third(Integer(1), Integer(3));
      const CReal left = affine(s.a, s.b, third * 2, third);
      const CReal right = affine(s.a, s.b, third, third * 2);
      const Rational lo = archimedean_midpoint(left, right);
      const Rational hi = archimedean_midpoint(rational(lo), right);
      const NonzeroWitness w = nonconstant_search(f_, lo, hi, rational(0));
      s.split = w;
      if (w.sign == Sign::Positive)
        steps_.push_back({s.a, rational(w.point), std::nullopt});
      else
        steps_.push_back({rational(w.point), s.b, std::nullopt});
    }
    return steps_[n];
  }

 private:
  RealMap f_;
  std::mutex mu_;
  std::vector<TrisectionStep> steps_;
};

}  // namespace

CReal exact_ivt(const RealMap& f, const CReal& a, const CReal& b) {
  auto state = std::make_shared<Trisection>(f, a, b);
  const CauchyModulus modulus = geometric(a, b, Rational(Integer(2), Integer(3)));
  if (a.exact_value() && b.exact_value()) {
    // Past step 0 every left end is a rational from the search.
    return limit_of_rationals(
        [state](std::uint64_t n) { return *state->at(n).a.exact_value(); }, modulus);
  }
  return limit([state](std::uint64_t n) { return state->at(n).a; }, modulus);
}

std::vector<TrisectionStep> exact_ivt_steps(const RealMap& f, const CReal& a, const CReal& b,
                                            std::uint64_t steps) {
  Trisection state(f, a, b);
  state.at(steps);
  std::vector<TrisectionStep> out;
  for (std::uint64_t n = 0; n <= steps; ++n) out.push_back(state.at(n));
  return out;
}

}  // namespace exactreal
