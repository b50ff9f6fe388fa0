#include "exactreal/digits.hpp"

#include <stdexcept>

#include "exactreal/bounds.hpp"
#include "exactreal/limit.hpp"

namespace exactreal {

SignedDigit::SignedDigit(int value) : value_(value) {
  if (value < -9 || value > 9) throw std::out_of_range("signed digit out of range");
}

SignedDigit DigitStream::at(std::uint64_t n) {
  // Held across production so every reader sees one sequence.
  std::lock_guard lock(mu_);
  while (digits_.size() <= n) digits_.push_back(producer_(digits_.size()));
  return digits_[n];
}

std::uint64_t DigitStream::produced() const {
  std::lock_guard lock(mu_);
  return digits_.size();
}

namespace {

constexpr int kBase = 10;

struct ExtractionState {
  CReal x;
  Rational prefix;  // p_n for the next digit n
  Rational step;    // 10^-(n+1)
};

SignedDigit next_digit(ExtractionState& st) {
  auto grid = [&](int j) { return st.prefix + st.step * j; };
  // R_i := locatesRight(g_i <_x g_{i+1}); R_{-10} is forced, L_9 is forced.
  bool previous_right = st.x.locates_right(grid(-kBase), grid(-kBase + 1));
  for (int i = -kBase; i + 2 <= kBase; ++i) {
    const bool next_right = st.x.locates_right(grid(i + 1), grid(i + 2));
    if (previous_right && !next_right) {
      const int digit = i + 1;
      st.prefix += st.step * digit;
      st.step /= kBase;
      return SignedDigit(digit);
    }
    previous_right = next_right;
  }
  throw UnsoundLocator("digit scan found no right/left switch");
}

}  // namespace

SignedDigitRep to_signed_digits(const CReal& x) {
  const Integer k = integer_bracket(x);
  auto st = std::make_shared<ExtractionState>(
      ExtractionState{x, Rational(k), Rational(Integer(1), Integer(kBase))});
  return {k, std::make_shared<DigitStream>([st](std::uint64_t) { return next_digit(*st); })};
}

SignedDigitRep make_signed_digits(Integer integer_part, std::vector<int> digits) {
  std::vector<SignedDigit> checked;
  for (int d : digits) checked.emplace_back(d);
  return {std::move(integer_part),
          std::make_shared<DigitStream>([checked = std::move(checked)](std::uint64_t n) {
            return n < checked.size() ? checked[n] : SignedDigit(0);
          })};
}

SignedDigitRep make_signed_digits(Integer integer_part, DigitStream::Producer producer) {
  return {std::move(integer_part), std::make_shared<DigitStream>(std::move(producer))};
}

Rational prefix_value(const SignedDigitRep& rep, std::uint64_t n) {
  Rational out(rep.integer_part);
  Rational place = Rational(Integer(1), Integer(kBase));
  for (std::uint64_t i = 0; i < n; ++i) {
    out += place * rep.digit(i).value();
    place /= kBase;
  }
  return out;
}

CReal from_signed_digits(const SignedDigitRep& rep) {
  struct Prefixes {
    SignedDigitRep rep;
    std::mutex mu;
    std::vector<Rational> values;
  };
  auto cache = std::make_shared<Prefixes>();
  cache->rep = rep;
  cache->values.emplace_back(rep.integer_part);
  return limit_of_rationals(
      [cache](std::uint64_t n) {
        std::lock_guard lock(cache->mu);
        while (cache->values.size() <= n) {
          const std::uint64_t i = cache->values.size() - 1;
          cache->values.push_back(cache->values.back() +
                                  Rational::pow10(-static_cast<long>(i + 1)) *
                                      cache->rep.digit(i).value());
        }
        return cache->values[n];
      },
      CauchyModulus{[](const PosRational& eps) { return decimal_modulus(eps); }});
}

std::string render_digits(const SignedDigitRep& rep, std::uint64_t n) {
  std::string out = rep.integer_part.get_str();
  if (n == 0) return out;
  out += '.';
  for (std::uint64_t i = 0; i < n; ++i) {
    const int d = rep.digit(i).value();
    if (d < 0)
      out += "(" + std::to_string(d) + ")";
    else
      out += static_cast<char>('0' + d);
  }
  return out;
}

}  // namespace exactreal
