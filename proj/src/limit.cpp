#include "exactreal/limit.hpp"

#include <map>
#include <mutex>

namespace exactreal {

namespace {

struct SequenceCache {
  RealSequence seq;
  std::mutex mu;
  std::map<std::uint64_t, CReal> values;

  CReal at(std::uint64_t n) {
    {
      std::lock_guard lock(mu);
      if (auto it = values.find(n); it != values.end()) return it->second;
    }
    CReal v = seq(n);
    std::lock_guard lock(mu);
    return values.emplace(n, std::move(v)).first->second;
  }
};

CReal limit_node(RealSequence seq, CauchyModulus modulus, CReal::Hint hint) {
  auto cache = std::make_shared<SequenceCache>();
  cache->seq = std::move(seq);
  return CReal::from_locator(
      [cache, modulus = std::move(modulus)](const Rational& q, const Rational& r) {
        const Rational eps = (r - q) / 3;
        const CReal term = cache->at(modulus(PosRational(eps / 2)));
        return term.locate(q + eps, r - eps);
      },
      std::nullopt, std::move(hint));
}

}  // namespace

CReal limit(RealSequence seq, CauchyModulus modulus) {
  return limit_node(std::move(seq), std::move(modulus), nullptr);
}

CReal limit_of_rationals(RationalSequence seq, CauchyModulus modulus) {
  auto values = std::make_shared<RationalSequence>(std::move(seq));
  // |x - s_N| <= w/4 for N = M(w/4).
  CReal::Hint hint = [values, modulus](const Rational& w) {
    const Rational s = (*values)(modulus(PosRational(w / 4)));
    return Bracket{s - w / 2, s + w / 2};
  };
  return limit_node([values](std::uint64_t n) { return rational((*values)(n)); },
                    std::move(modulus), std::move(hint));
}

}  // namespace exactreal
