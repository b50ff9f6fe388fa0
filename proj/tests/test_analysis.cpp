#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exactreal/analysis.hpp"
#include "exactreal/digits.hpp"
#include "exactreal/expr.hpp"
#include "exactreal/series.hpp"
#include "support.hpp"

using namespace exactreal;
using namespace exactreal::testing;

namespace {

RealMap square_minus_two() {
  return {[](const CReal& x) { return sub(mul(x, x), rational(2)); }, UniformModulus::lipschitz(4)};
}

RealMap exp_minus_two() {
  return {[](const CReal& x) { return shift(exp(x), -2); }, UniformModulus::lipschitz(3)};
}

RealMap linear(const Rational& slope, const Rational& offset) {
  return {[=](const CReal& x) { return shift(scale(slope, x), offset); },
          UniformModulus::lipschitz(slope.abs())};
}

Rational exact(const CReal& x) {
  REQUIRE(x.exact_value());
  return *x.exact_value();
}

}  // namespace

TEST_CASE("interval_bound") {
  CHECK(interval_bound(rational(0), rational(1)) == 1);
  CHECK(interval_bound(rational(R("-1/2")), rational(3)) == R("7/2"));
  const Rational b = interval_bound(opaque(rational(0)), opaque(e()));
  CHECK(b > e_oracle().hi);
  CHECK(b < e_oracle().lo + R("1/16"));
}

TEST_CASE("integration_terms") {
  const UniformModulus one = UniformModulus::lipschitz(1);
  CHECK(integration_terms(one, 1, PosRational(R("1/1000"))) == 4000);
  CHECK(integration_terms(one, 1, PosRational(R("1e-6"))) == 4000000);
  CHECK(integration_terms(one, 2, PosRational(R("1/1000"))) == 16000);
  CHECK(integration_terms(UniformModulus::lipschitz(0), 1, PosRational(R("1e-9"))) == 1);
  const UniformModulus three = UniformModulus::lipschitz(3);
  for (const char* e : {"1/7", "1/100", "3/1000"}) {
    const PosRational eps(R(e));
    const std::uint64_t n = integration_terms(three, 1, eps);
    CHECK(Rational(1) / static_cast<long>(n) <= three(PosRational(eps.value() / 4)).value());
    CHECK(Rational(1) / static_cast<long>(n - 1) > three(PosRational(eps.value() / 4)).value());
  }
}

TEST_CASE("riemann sums") {
  // Left sums of x on [0,1] telescope to (n-1)/(2n).
  for (std::uint64_t n = 1; n <= 30; ++n)
    CHECK(exact(riemann_sum(RealMap::identity(), rational(0), rational(1), n)) ==
          Rational(Integer(n - 1), Integer(2 * n)));
  CHECK(exact(riemann_sum(RealMap::constant(R("2/3")), rational(1), rational(4), 7)) == 2);
  CHECK(exact(riemann_sum(linear(2, 1), rational(-1), rational(1), 4)) == 1);

  const RealMap f = RealMap::exp_up_to(1);
  for (std::uint64_t n : {1u, 2u, 17u, 64u}) {
    const CReal serial = riemann_sum(f, rational(0), rational(1), n, Execution::Serial);
    const CReal parallel = riemann_sum(f, rational(0), rational(1), n, Execution::Parallel);
    for (long j = 1; j <= 8; ++j) {
      const PosRational eps(Rational::pow10(-j));
      CHECK(tight_bound(serial, eps) == tight_bound(parallel, eps));
    }
  }
  // exp terms at rational points are exact, so the sum is the rational
  // sum of exp oracles.
  const CReal s4 = riemann_sum(f, opaque(rational(0)), opaque(rational(1)), 4, Execution::Serial);
  Oracle expected = Oracle::exact(0);
  for (int k = 0; k < 4; ++k) {
    const Oracle t = exp_oracle(Rational(Integer(k), Integer(4)));
    expected = {expected.lo + t.lo / 4, expected.hi + t.hi / 4};
  }
  CHECK(forced_failures(s4, expected, 3, 30) == 0);
}

TEST_CASE("integrate") {
  const CReal half = integrate(RealMap::identity(), rational(0), rational(1));
  const Bracket b = tight_bound(half, PosRational(R("1/1000")));
  CHECK(b.contains(R("1/2")));
  const CReal area = integrate(RealMap::exp_up_to(1), rational(0), rational(1));
  const Oracle e1 = e_oracle();
  const Oracle em1{e1.lo - 1, e1.hi - 1};
  CHECK(em1.inside(tight_bound(area, PosRational(R("1/100")))));
  CHECK(tight_bound(integrate(RealMap::constant(3), rational(-1), rational(1)), PosRational(R("1e-9"))).contains(6));
  RealMap no_modulus = RealMap::identity();
  no_modulus.modulus.reset();
  CHECK_THROWS_AS(integrate(no_modulus, rational(0), rational(1)), PreconditionError);
}

TEST_CASE("approx_ivt") {
  const PosRational eps(R("1/1000"));
  const CReal r = approx_ivt(linear(1, R("-1/3")), rational(0), rational(1), eps);
  const Bracket b = tight_bound(r, PosRational(R("1/10000")));
  CHECK(b.lo - R("1/3") > -eps.value());
  CHECK(b.hi - R("1/3") < eps.value());

  const CReal s = approx_ivt(square_minus_two(), rational(1), rational(2), eps);
  const Bracket fs = tight_bound(square_minus_two().apply(s), PosRational(R("1/10000")));
  CHECK(fs.lo > -eps.value());
  CHECK(fs.hi < eps.value());

  // Halving law and recurrence, replayed in Q.
  const auto steps = approx_ivt_iterates(square_minus_two(), rational(1), rational(2), eps, 10);
  Rational z = 1, w = 2;
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CHECK(exact(steps[n].z) == z);
    CHECK(exact(steps[n].w) == w);
    CHECK(w - z == Rational::pow2(-static_cast<long>(n)));
    const Rational c = (z + w) / 2;
    Rational d = Rational(Integer(1), Integer(2)) + (c * c - 2) / eps.value();
    d = max(Rational(0), min(d, Rational(1)));
    const Rational move = d * Rational::pow2(-static_cast<long>(n + 1));
    z = c - move;
    w = w - move;
  }
}

TEST_CASE("nonconstant_search") {
  for (const char* t : {"1/2", "0", "1", "1/3"}) {
    const NonzeroWitness w = nonconstant_search(RealMap::identity(), 0, 1, rational(R(t)));
    const int s = w.sign == Sign::Positive ? 1 : -1;
    CHECK(w.point > 0);
    CHECK(w.point < 1);
    CHECK((w.point - R(t)) * s > w.gap.value());
  }
  const RealMap sq{[](const CReal& x) { return mul(x, x); }, std::nullopt};
  const NonzeroWitness w = nonconstant_search(sq, -1, 1, rational(0));
  CHECK(w.sign == Sign::Positive);
  CHECK(w.point * w.point > w.gap.value());
  const NonzeroWitness again = nonconstant_search(sq, -1, 1, rational(0));
  CHECK(again.point == w.point);
  CHECK(again.gap.value() == w.gap.value());
  // Non-exact target.
  const NonzeroWitness pe = nonconstant_search(linear(4, 0), 0, 1, opaque(pi()));
  CHECK(pe.point > 0);
  CHECK(pe.point < 1);
  CHECK(pi_oracle().within(pe.point * 4, Rational(1000)) );
  CHECK((pe.sign == Sign::Positive ? pe.point * 4 - pi_oracle().hi : pi_oracle().lo - pe.point * 4) > pe.gap.value());
  CHECK_THROWS_AS(nonconstant_search(RealMap::identity(), 1, 1, rational(0)), PreconditionError);
}

TEST_CASE("exact_ivt intervals") {
  const RealMap f = square_minus_two();
  const auto steps = exact_ivt_steps(f, rational(1), rational(2), 12);
  REQUIRE(steps.size() == 13);
  Rational shrink = 1;  // (2/3)^n
  for (std::size_t n = 0; n + 1 < steps.size(); ++n, shrink *= Rational(Integer(2), Integer(3))) {
    const Rational a = exact(steps[n].a), b = exact(steps[n].b);
    const Rational a1 = exact(steps[n + 1].a), b1 = exact(steps[n + 1].b);
    CAPTURE(n);
    CHECK(a <= a1);
    CHECK(a1 < b1);
    CHECK(b1 <= b);
    CHECK(((a == a1) != (b == b1)));
    CHECK(a * a - 2 <= 0);
    CHECK(b * b - 2 >= 0);
    CHECK(b - a <= shrink);
    REQUIRE(steps[n].split);
    const Rational q = steps[n].split->point;
    CHECK(q > (2 * a + b) / 3);
    CHECK(q < (a + 2 * b) / 3);
    CHECK((q == a1 || q == b1));
  }
  for (const auto& s : steps) CHECK(sqrt2_oracle().hi > exact(s.a));
}

TEST_CASE("exact_ivt roots") {
  const CReal root = exact_ivt(square_minus_two(), rational(1), rational(2));
  for (long j = 1; j <= 4; ++j) {
    const PosRational eps(Rational::pow10(-j));
    CHECK(tight_bound(square_minus_two().apply(root), eps).contains(0));
  }
  const SignedDigitRep d = to_signed_digits(root);
  CHECK(sqrt2_oracle().within(prefix_value(d, 5), R("1e-5")));
  const CReal ln2 = exact_ivt(exp_minus_two(), rational(0), rational(1));
  CHECK(ln2_oracle().within(prefix_value(to_signed_digits(ln2), 4), R("1e-4")));
  const CReal third = exact_ivt(linear(3, -1), rational(0), rational(1));
  CHECK(tight_bound(third, PosRational(R("1e-8"))).contains(R("1/3")));
}

TEST_CASE("integral of sin(x + exp(x)) over [0, 8]" * doctest::skip()) {
  // Reference: composite Simpson in double precision with 2^22 panels.
  const long panels = 1L << 22;
  const double h = 8.0 / panels;
  auto g = [](double t) { return std::sin(t + std::exp(t)); };
  double acc = g(0) + g(8);
  for (long i = 1; i < panels; ++i) acc += (i % 2 ? 4 : 2) * g(i * h);
  const double reference = acc * h / 3;
  const ExprPtr e = parse_expr("sin(x + exp(x))");
  const CReal v = integrate(expr_map(e, "x", std::pair{Rational(0), Rational(8)}), rational(0), rational(8));
  const Bracket b = tight_bound(v, PosRational(R("1/100")));
  CHECK(std::abs(b.midpoint().raw().get_d() - reference) < 0.01);
}
