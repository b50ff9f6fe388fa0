#include "exactreal/creal.hpp"

namespace exactreal {
namespace detail {

Side LocatorNode::locate(const Rational& q, const Rational& r) {
  QueryKey key{q, r};
  {
    std::lock_guard lock(mu_);
    if (const auto it = answers_.find(key); it != answers_.end()) {
      count_query(false);
      return it->second;
    }
  }
  count_query(true);
  const Side computed = body_(q, r);
  std::lock_guard lock(mu_);
  const auto [it, inserted] = answers_.emplace(std::move(key), computed);
  const Side answer = it->second;
  if (inserted) {
    if (answer == Side::RealToTheRight) {
      if (!lo_ || *lo_ < q) lo_ = q;
    } else {
      if (!hi_ || r < *hi_) hi_ = r;
    }
  }
  return answer;
}

std::optional<Rational> LocatorNode::cached_lo() const {
  std::lock_guard lock(mu_);
  return lo_;
}

std::optional<Rational> LocatorNode::cached_hi() const {
  std::lock_guard lock(mu_);
  return hi_;
}

void LocatorNode::narrow(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  std::lock_guard lock(mu_);
  if (lo && (!lo_ || *lo_ < *lo)) lo_ = lo;
  if (hi && (!hi_ || *hi < *hi_)) hi_ = hi;
}

std::optional<Rational> LocatorNode::anchor_lo() const {
  std::lock_guard lock(mu_);
  return anchor_lo_;
}

std::optional<Rational> LocatorNode::anchor_hi() const {
  std::lock_guard lock(mu_);
  return anchor_hi_;
}

void LocatorNode::set_anchor_lo(const Rational& v) {
  std::lock_guard lock(mu_);
  if (!anchor_lo_) anchor_lo_ = v;
  if (!lo_ || *lo_ < v) lo_ = v;
}

void LocatorNode::set_anchor_hi(const Rational& v) {
  std::lock_guard lock(mu_);
  if (!anchor_hi_) anchor_hi_ = v;
  if (!hi_ || v < *hi_) hi_ = v;
}

std::size_t LocatorNode::memo_size() const {
  std::lock_guard lock(mu_);
  return answers_.size();
}

}  // namespace detail

CReal CReal::from_locator(Locator body, std::optional<Rational> exact, Hint hint) {
  return CReal(std::make_shared<detail::LocatorNode>(std::move(body), std::move(exact),
                                                     std::move(hint)));
}

std::optional<Bracket> CReal::approximate(const PosRational& w) const {
  if (node_->hint()) return node_->hint()(w.value());
  if (const auto& s = node_->exact()) return Bracket{*s - w.value() / 2, *s + w.value() / 2};
  return std::nullopt;
}

Side CReal::locate(const Rational& q, const Rational& r) const {
  if (!(q < r))
    throw PreconditionError("locate needs q < r, got q=" + q.to_string() + " r=" + r.to_string());
  return node_->locate(q, r);
}

std::optional<Bracket> CReal::cached_bracket() const {
  auto lo = node_->cached_lo();
  auto hi = node_->cached_hi();
  if (!lo || !hi) return std::nullopt;
  return Bracket{*lo, *hi};
}

CReal from_rational_first(const Rational& s) {
  return CReal::from_locator(
      [s](const Rational& q, const Rational&) {
        switch (trichotomy(q, s)) {
          case Ordering::Less:
            return Side::RealToTheRight;
          case Ordering::Equal:
          case Ordering::Greater:
            return Side::RealToTheLeft;
        }
        return Side::RealToTheLeft;
      },
      s);
}

CReal from_rational_second(const Rational& s) {
  return CReal::from_locator(
      [s](const Rational&, const Rational& r) {
        switch (trichotomy(s, r)) {
          case Ordering::Less:
            return Side::RealToTheLeft;
          case Ordering::Equal:
          case Ordering::Greater:
            return Side::RealToTheRight;
        }
        return Side::RealToTheRight;
      },
      s);
}

CReal opaque(const CReal& x) {
  return CReal::from_locator([x](const Rational& q, const Rational& r) { return x.locate(q, r); });
}

}  // namespace exactreal
