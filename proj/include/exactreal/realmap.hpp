#pragma once

#include <functional>
#include <optional>

#include "exactreal/creal.hpp"

namespace exactreal {

/// omega with |x - y| < omega(e) => |f(x) - f(y)| < e on the interval the
/// map is used on. Soundness is the caller's assertion.
struct UniformModulus {
  std::function<PosRational(const PosRational&)> at;
  PosRational operator()(const PosRational& eps) const { return at(eps); }

  /// omega(e) = e / lipschitz.
  static UniformModulus lipschitz(const Rational& lipschitz);
};

/// A function on reals together with how it lifts locators: `apply` takes a
/// real with a locator to a real with a locator.
struct RealMap {
  std::function<CReal(const CReal&)> apply;
  std::optional<UniformModulus> modulus;

  static RealMap identity();
  static RealMap constant(const Rational& c);
  /// exp, with Lipschitz modulus e^hi on (-inf, hi].
  static RealMap exp_up_to(const Rational& hi);
};

CReal lift(const RealMap& f, const CReal& x);

/// outer after inner. The modulus is inner(outer(e)) when both carry one.
RealMap compose(const RealMap& outer, const RealMap& inner);

}  // namespace exactreal
