#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "exactreal/creal.hpp"

namespace exactreal {

/// Digit in {-9, ..., 9}.
class SignedDigit {
 public:
  explicit SignedDigit(int value);
  int value() const { return value_; }
  friend bool operator==(SignedDigit, SignedDigit) = default;

 private:
  int value_;
};

/// Memoized lazy digit stream; digit n is produced once and then shared by
/// all readers.
class DigitStream {
 public:
  using Producer = std::function<SignedDigit(std::uint64_t n)>;

  explicit DigitStream(Producer producer) : producer_(std::move(producer)) {}
  /// Digits 0..n-1 are always produced in order before digit n.
  SignedDigit at(std::uint64_t n);
  std::uint64_t produced() const;

 private:
  Producer producer_;
  mutable std::mutex mu_;
  std::vector<SignedDigit> digits_;
};

/// x = integer_part + sum_i digits[i] * 10^(-i-1).
struct SignedDigitRep {
  Integer integer_part;
  std::shared_ptr<DigitStream> digits;

  SignedDigit digit(std::uint64_t n) const { return digits->at(n); }
};

/// Integer part from integer_bracket; digit n by a left-to-right scan of the
/// 21 grid points p_n + j*10^(-n-1), j = -10..10, for the first adjacent pair
/// answered right then left.
SignedDigitRep to_signed_digits(const CReal& x);

/// Fixed digits followed by zeros.
SignedDigitRep make_signed_digits(Integer integer_part, std::vector<int> digits);
SignedDigitRep make_signed_digits(Integer integer_part, DigitStream::Producer producer);

/// p_n = k + sum_{i<n} a_i 10^(-i-1).
Rational prefix_value(const SignedDigitRep& rep, std::uint64_t n);

/// Limit of the prefixes with modulus least n such that 2*10^-n < e.
CReal from_signed_digits(const SignedDigitRep& rep);

/// "3.2(-5)(-8)": integer part, '.', then n digits with negative digits in
/// parentheses. n = 0 prints the integer part alone.
std::string render_digits(const SignedDigitRep& rep, std::uint64_t n);

}  // namespace exactreal
