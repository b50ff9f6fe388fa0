#include "exactreal/enumeration.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace exactreal {

Rational calkin_wilf(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("calkin_wilf is 1-based");
  Integer a = 1;
  Integer b = 1;
  const int top = std::bit_width(m) - 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    if ((m >> bit) & 1u)
      a += b;
    else
      b += a;
  }
  return Rational(a, b);
}

Integer calkin_wilf_index(const Rational& q) {
  if (q.sign() <= 0) throw std::invalid_argument("calkin_wilf_index needs q > 0");
  Integer a = q.numerator();
  Integer b = q.denominator();
  // Runs of identical moves, collected from the leaf upwards.
  std::vector<std::pair<bool, Integer>> runs;
  while (!(a == 1 && b == 1)) {
    if (a < b) {
      Integer steps = b / a;
      if (b % a == 0) steps -= 1;
      b -= steps * a;
      runs.emplace_back(false, steps);
    } else {
      Integer steps = a / b;
      if (a % b == 0) steps -= 1;
      a -= steps * b;
      runs.emplace_back(true, steps);
    }
  }
  Integer index = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const auto k = it->second.get_ui();
    mpz_mul_2exp(index.get_mpz_t(), index.get_mpz_t(), k);
    if (it->first) {
      Integer ones = 1;
      mpz_mul_2exp(ones.get_mpz_t(), ones.get_mpz_t(), k);
      index += ones - 1;
    }
  }
  return index;
}

Rational enumerate(std::uint64_t n) {
  if (n == 0) return Rational(0);
  const Rational q = calkin_wilf((n + 1) / 2);
  return (n % 2 == 1) ? q : -q;
}

Integer index_of(const Rational& q) {
  if (q.is_zero()) return 0;
  const Integer m = calkin_wilf_index(q.abs());
  return q.sign() > 0 ? Integer(2 * m - 1) : Integer(2 * m);
}

Rational enumerate_unit_interval(std::uint64_t n) { return calkin_wilf(2 * (n + 1)); }

Rational enumerate_interval(const Rational& lo, const Rational& hi, std::uint64_t n) {
  return lo + (hi - lo) * enumerate_unit_interval(n);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  auto d = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (d * (d + 1) / 2 > n) --d;
  while ((d + 1) * (d + 2) / 2 <= n) ++d;
  const std::uint64_t second = n - d * (d + 1) / 2;
  return {d - second, second};
}

}  // namespace exactreal
