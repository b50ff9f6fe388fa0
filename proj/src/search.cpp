#include "exactreal/search.hpp"

#include <atomic>

namespace exactreal {

namespace {
std::atomic<std::uint64_t> g_cap{SearchConfig{}.cap};
std::atomic<std::uint64_t> g_precision_cap{SearchConfig{}.precision_cap};
std::atomic<std::uint64_t> g_queries{0};
std::atomic<std::uint64_t> g_evaluations{0};
}  // namespace

SearchConfig search_config() {
  SearchConfig c;
  c.cap = g_cap.load(std::memory_order_relaxed);
  c.precision_cap = g_precision_cap.load(std::memory_order_relaxed);
  return c;
}

void set_search_config(const SearchConfig& config) {
  g_cap.store(config.cap, std::memory_order_relaxed);
  g_precision_cap.store(config.precision_cap, std::memory_order_relaxed);
}

std::uint64_t bounded_search(const DecidablePredicate& test, std::optional<std::uint64_t> cap,
                             const std::string& what) {
  const std::uint64_t limit = cap.value_or(search_config().cap);
  for (std::uint64_t n = 0; n < limit; ++n)
    if (test(n)) return n;
  throw SearchExhausted(what + ": no witness below cap " + std::to_string(limit));
}

QueryStats query_stats() {
  return {g_queries.load(std::memory_order_relaxed), g_evaluations.load(std::memory_order_relaxed)};
}

void reset_query_stats() {
  g_queries.store(0, std::memory_order_relaxed);
  g_evaluations.store(0, std::memory_order_relaxed);
}

namespace detail {
void count_query(bool evaluated) {
  g_queries.fetch_add(1, std::memory_order_relaxed);
  if (evaluated) g_evaluations.fetch_add(1, std::memory_order_relaxed);
}
}  // namespace detail

}  // namespace exactreal
