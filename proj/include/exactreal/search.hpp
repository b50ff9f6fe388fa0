#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace exactreal {

/// Raised when a bounded search passes its cap: the caller's existence
/// assertion was false, or the cap is too small for it.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A checkable precondition (such as q < r) was violated.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A locator produced an answer that contradicts one it is forced to give.
class UnsoundLocator : public std::logic_error {
 public:
  explicit UnsoundLocator(const std::string& what) : std::logic_error(what) {}
};

struct SearchConfig {
  /// Iteration cap for enumeration searches.
  std::uint64_t cap = 1'000'000;
  /// Cap on precision levels (exponents j of 10^-j) for searches that scan
  /// successively finer scales; the effective limit is min(cap, this).
  std::uint64_t precision_cap = 1'000;

  std::uint64_t precision_limit() const { return cap < precision_cap ? cap : precision_cap; }
};

SearchConfig search_config();
void set_search_config(const SearchConfig& config);

/// Installs a config for the lifetime of the object.
class ScopedSearchConfig {
 public:
  explicit ScopedSearchConfig(const SearchConfig& config) : saved_(search_config()) {
    set_search_config(config);
  }
  ~ScopedSearchConfig() { set_search_config(saved_); }
  ScopedSearchConfig(const ScopedSearchConfig&) = delete;
  ScopedSearchConfig& operator=(const ScopedSearchConfig&) = delete;

 private:
  SearchConfig saved_;
};

using DecidablePredicate = std::function<bool(std::uint64_t)>;

/// Least n with test(n). Without an explicit cap the configured cap applies.
std::uint64_t bounded_search(const DecidablePredicate& test,
                             std::optional<std::uint64_t> cap = std::nullopt,
                             const std::string& what = "bounded search");

/// Locator instrumentation (process wide).
struct QueryStats {
  std::uint64_t queries = 0;      // every locate call
  std::uint64_t evaluations = 0;  // calls that ran a locator body
};

QueryStats query_stats();
void reset_query_stats();

namespace detail {
void count_query(bool evaluated);
}

}  // namespace exactreal
