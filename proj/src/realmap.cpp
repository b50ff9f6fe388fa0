#include "exactreal/realmap.hpp"

#include "exactreal/series.hpp"

namespace exactreal {

UniformModulus UniformModulus::lipschitz(const Rational& lipschitz) {
  if (lipschitz.sign() <= 0) return UniformModulus{[](const PosRational&) { return PosRational(1); }};
  return UniformModulus{[lipschitz](const PosRational& eps) {
    return PosRational(eps.value() / lipschitz);
  }};
}

RealMap RealMap::identity() {
  return RealMap{[](const CReal& x) { return x; }, UniformModulus::lipschitz(1)};
}

RealMap RealMap::constant(const Rational& c) {
  const CReal value = rational(c);
  return RealMap{[value](const CReal&) { return value; }, UniformModulus::lipschitz(0)};
}

RealMap RealMap::exp_up_to(const Rational& hi) {
  // e^hi <= 3^ceil(hi) for hi >= 0, and <= 1 otherwise.
  Rational bound = 1;
  for (Integer k = 0; k < hi.ceil(); ++k) bound *= 3;
  return RealMap{[](const CReal& x) { return exp(x); }, UniformModulus::lipschitz(bound)};
}

CReal lift(const RealMap& f, const CReal& x) { return f.apply(x); }

RealMap compose(const RealMap& outer, const RealMap& inner) {
  RealMap out{[outer, inner](const CReal& x) { return outer.apply(inner.apply(x)); }, std::nullopt};
  if (outer.modulus && inner.modulus) {
    out.modulus = UniformModulus{[o = *outer.modulus, i = *inner.modulus](const PosRational& eps) {
      return i(o(eps));
    }};
  }
  return out;
}

}  // namespace exactreal
