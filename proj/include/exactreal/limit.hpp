#pragma once

#include <cstdint>
#include <functional>

#include "exactreal/bounds.hpp"
#include "exactreal/creal.hpp"

namespace exactreal {

using RealSequence = std::function<CReal(std::uint64_t)>;
using RationalSequence = std::function<Rational(std::uint64_t)>;

/// Limit of a sequence with a Cauchy modulus. Per query (q, r): e = (r-q)/3,
/// ask seq(M(e/2)) about (q+e, r-e). Sequence values are memoized.
CReal limit(RealSequence seq, CauchyModulus modulus);

/// limit over rational(seq(n)).
CReal limit_of_rationals(RationalSequence seq, CauchyModulus modulus);

}  // namespace exactreal
