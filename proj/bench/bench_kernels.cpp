#include <benchmark/benchmark.h>

#include "exactreal/analysis.hpp"
#include "exactreal/series.hpp"
#include "exactreal/verify.hpp"

using namespace exactreal;

namespace {

void BM_SoundnessSuite(benchmark::State& state, Execution exec) {
  SuiteOptions opts;
  opts.cases = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const SuiteReport r = run_soundness_suite(opts, exec);
    benchmark::DoNotOptimize(r.passed_queries);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// A fresh Riemann sum per iteration, queried once at width 10^-4: the exact
// fold over n terms plus one bracketing pass over the inexact ones.
void BM_RiemannExp(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RealMap f = RealMap::exp_up_to(1);
  for (auto _ : state) {
    const CReal s = riemann_sum(f, rational(0), rational(1), n, exec);
    benchmark::DoNotOptimize(s.locates_right(Rational::parse("1.7"), Rational::parse("1.7001")));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RiemannIdentity(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RealMap f = RealMap::identity();
  for (auto _ : state) {
    const CReal s = riemann_sum(f, rational(0), rational(1), n, exec);
    benchmark::DoNotOptimize(s.exact_value());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SoundnessSuite, serial, Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SoundnessSuite, parallel, Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RiemannExp, serial, Execution::Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RiemannExp, parallel, Execution::Parallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RiemannIdentity, serial, Execution::Serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RiemannIdentity, parallel, Execution::Parallel)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
