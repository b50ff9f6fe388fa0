#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "exactreal/rational.hpp"
#include "exactreal/search.hpp"

namespace exactreal {

/// Answer of a locator query (q, r): the real lies right of q, or left of r.
enum class Side { RealToTheRight, RealToTheLeft };

inline Side flip(Side s) {
  return s == Side::RealToTheRight ? Side::RealToTheLeft : Side::RealToTheRight;
}

/// Open rational interval known to contain a real.
struct Bracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo < v && v < hi; }
  bool intersects(const Bracket& o) const { return lo < o.hi && o.lo < hi; }
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

namespace detail {

struct QueryKey {
  Rational q;
  Rational r;
  friend bool operator==(const QueryKey&, const QueryKey&) = default;
};

struct QueryKeyHash {
  std::size_t operator()(const QueryKey& k) const {
    return k.q.hash() * 0x100000001b3ull ^ k.r.hash();
  }
};

/// Shared state of one real: its locator body plus the memo.
///
/// Answers are memoized per query, first writer wins. Every answer also
/// narrows the cached bracket; the bracket only ever speeds up searches and
/// never changes what a search returns.
class LocatorNode {
 public:
  using Body = std::function<Side(const Rational&, const Rational&)>;
  /// Bracket of width <= w strictly containing the real, computed without
  /// locator queries.
  using Hint = std::function<Bracket(const Rational& w)>;

  LocatorNode(Body body, std::optional<Rational> exact, Hint hint)
      : body_(std::move(body)), exact_(std::move(exact)), hint_(std::move(hint)) {}

  Side locate(const Rational& q, const Rational& r);
  const std::optional<Rational>& exact() const { return exact_; }
  const Hint& hint() const { return hint_; }

  std::optional<Rational> cached_lo() const;
  std::optional<Rational> cached_hi() const;
  void narrow(const std::optional<Rational>& lo, const std::optional<Rational>& hi);

  /// Fixed lower/upper bound found once by the dyadic search.
  std::optional<Rational> anchor_lo() const;
  std::optional<Rational> anchor_hi() const;
  void set_anchor_lo(const Rational& v);
  void set_anchor_hi(const Rational& v);

  std::size_t memo_size() const;

 private:
  Body body_;
  std::optional<Rational> exact_;
  Hint hint_;
  mutable std::mutex mu_;
  std::unordered_map<QueryKey, Side, QueryKeyHash> answers_;
  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
  std::optional<Rational> anchor_lo_;
  std::optional<Rational> anchor_hi_;
};

}  // namespace detail

/// A real number given by a locator: for rationals q < r it decides
/// whether q < x or x < r. Copies share the locator and its memo.
class CReal {
 public:
  using Locator = detail::LocatorNode::Body;
  using Hint = detail::LocatorNode::Hint;

  /// Wraps a locator body. `exact` records the denoted rational when it is
  /// known; `hint` cheaply brackets the real (exact values bracket
  /// themselves). Both are metadata for fast
  /// paths and never consulted by locate.
  static CReal from_locator(Locator body, std::optional<Rational> exact = std::nullopt,
                            Hint hint = nullptr);

  /// Rejects q >= r with PreconditionError.
  Side locate(const Rational& q, const Rational& r) const;
  bool locates_right(const Rational& q, const Rational& r) const {
    return locate(q, r) == Side::RealToTheRight;
  }
  bool locates_left(const Rational& q, const Rational& r) const { return !locates_right(q, r); }

  const std::optional<Rational>& exact_value() const { return node_->exact(); }
  /// Query-free bracket of width <= w, when the node carries a hint.
  std::optional<Bracket> approximate(const PosRational& w) const;
  /// Best bracket implied by answers so far, when both ends are known.
  std::optional<Bracket> cached_bracket() const;
  detail::LocatorNode& node() const { return *node_; }
  bool same_as(const CReal& o) const { return node_ == o.node_; }

 private:
  explicit CReal(std::shared_ptr<detail::LocatorNode> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::LocatorNode> node_;
};

/// Locator for s by trichotomy of q and s: q < s locates q < x,
/// otherwise s < r is located.
CReal from_rational_first(const Rational& s);
/// Locator for s by trichotomy of s and r: s < r locates x < r,
/// otherwise q < s is located.
CReal from_rational_second(const Rational& s);
/// The library's default embedding of the rationals (first construction).
inline CReal rational(const Rational& s) { return from_rational_first(s); }

/// Same answers as x, without exact value or hint, so derived reals only
/// ever see the locator.
CReal opaque(const CReal& x);

}  // namespace exactreal
