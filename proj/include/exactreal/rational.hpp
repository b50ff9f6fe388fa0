#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactreal {

using Integer = mpz_class;

enum class Ordering { Less, Equal, Greater };

/// Exact fraction in canonical form (positive denominator, coprime terms).
///
/// Every constructor canonicalizes, so equality is structural. Values are
/// immutable once built and may be shared freely between threads.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit on purpose
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  /// Parses "12", "-7/3", "3.25", "-.5", "1e-6", "2.5E3".
  static Rational parse(std::string_view text);

  /// 10^exponent, exponent may be negative.
  static Rational pow10(long exponent);
  /// 2^exponent, exponent may be negative.
  static Rational pow2(long exponent);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;

  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const;

  /// Exact fraction text: "n" or "n/d".
  std::string to_string() const;
  /// Exact decimal text, only for denominators of the form 2^a 5^b.
  std::string to_decimal_string() const;
  bool has_finite_decimal() const;
  /// Decimal text rounded toward zero after `places` digits (display only).
  std::string to_fixed(unsigned places) const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Ordering trichotomy(const Rational& a, const Rational& b);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Strictly positive rational; construction rejects anything else.
class PosRational {
 public:
  explicit PosRational(Rational value);
  PosRational(long value) : PosRational(Rational(value)) {}  // NOLINT
  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT

 private:
  Rational value_;
};

/// Largest power of two not exceeding a positive rational.
Rational floor_pow2(const PosRational& eps);

/// Position of the first character rejected by Rational::parse.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace exactreal

template <>
struct std::hash<exactreal::Rational> {
  std::size_t operator()(const exactreal::Rational& q) const { return q.hash(); }
};
