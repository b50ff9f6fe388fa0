#pragma once

#include <cstdint>
#include <utility>

#include "exactreal/rational.hpp"

namespace exactreal {

/// Calkin–Wilf sequence, 1-based: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
Rational calkin_wilf(std::uint64_t m);
/// Inverse of calkin_wilf for positive rationals.
Integer calkin_wilf_index(const Rational& q);

/// Fixed bijection N -> Q: 0, then each Calkin–Wilf term followed by its
/// negation (0, 1, -1, 1/2, -1/2, 2, -2, ...).
Rational enumerate(std::uint64_t n);
Integer index_of(const Rational& q);

/// Bijection N -> Q ∩ (0,1): the left children of the Calkin–Wilf tree
/// (1/2, 1/3, 2/3, 1/4, 3/5, ...).
Rational enumerate_unit_interval(std::uint64_t n);
/// Affine image of enumerate_unit_interval onto (lo, hi).
Rational enumerate_interval(const Rational& lo, const Rational& hi, std::uint64_t n);

/// Cantor pairing inverse: n -> (first, second), walking each diagonal
/// first + second = d with second ascending.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);

}  // namespace exactreal
