#include "exactreal/rational.hpp"

#include <cctype>
#include <ostream>

namespace exactreal {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow10(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational Rational::pow2(long exponent) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(),
               static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

std::string Rational::to_string() const { return value_.get_str(); }

bool Rational::has_finite_decimal() const {
  Integer d = value_.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

std::string Rational::to_decimal_string() const {
  if (!has_finite_decimal()) throw std::domain_error("no finite decimal for " + to_string());
  unsigned places = 0;
  Rational scaled = abs();
  while (!scaled.is_integer()) {
    scaled *= 10;
    ++places;
  }
  return to_fixed(places);
}

std::string Rational::to_fixed(unsigned places) const {
  Rational scaled = abs() * pow10(static_cast<long>(places));
  std::string digits = scaled.floor().get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = sign() < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
  return h1 * 1000003u ^ (h2 + 0x9e3779b97f4a7c15ull + (h1 << 6) + (h1 >> 2)) ^
         static_cast<std::size_t>(sign() + 1);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("invalid rational literal '" + std::string(text) + "': " + why, pos);
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  Rational out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num)) throw fail("bad numerator");
    pos += slash + 1;
    if (!all_digits(den)) throw fail("bad denominator");
    const Integer d(std::string(den), 10);
    if (d == 0) throw fail("zero denominator");
    out = Rational(Integer(std::string(num), 10), d);
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
        exp_negative = exp_text[0] == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 9) {
        pos += e + 1;
        throw fail("bad exponent");
      }
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    const auto dot = mantissa.find('.');
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail("empty literal");
    if (!whole.empty() && !all_digits(whole)) throw fail("bad integer part");
    if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) {
      pos += dot + 1;
      throw fail("bad fraction part");
    }
    const std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) throw fail("empty literal");
    out = Rational(Integer(digits, 10)) * pow10(exponent - static_cast<long>(frac.size()));
  }
  return negative ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Ordering trichotomy(const Rational& a, const Rational& b) {
  const int c = cmp(a.raw(), b.raw());
  return c < 0 ? Ordering::Less : (c == 0 ? Ordering::Equal : Ordering::Greater);
}

PosRational::PosRational(Rational value) : value_(std::move(value)) {
  if (value_.sign() <= 0)
    throw std::invalid_argument("expected a positive rational, got " + value_.to_string());
}

Rational floor_pow2(const PosRational& eps) {
  const Rational& e = eps.value();
  long k = static_cast<long>(mpz_sizeinbase(e.numerator().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(e.denominator().get_mpz_t(), 2));
  Rational p = Rational::pow2(k);
  while (p > e) {
    p /= 2;
    --k;
  }
  while (p * 2 <= e) p *= 2;
  return p;
}

}  // namespace exactreal
