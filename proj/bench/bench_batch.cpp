// Serial reference vs OpenMP kernel on a fixed mixed query set.

#include <benchmark/benchmark.h>

#include <vector>

#include "lerch/batch.hpp"
#include "lerch/identities.hpp"

using namespace lerch;

namespace {

std::vector<LerchQuery> queries(std::size_t count) {
  GridRng rng(99);
  std::vector<LerchQuery> qs;
  qs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Complex z = std::polar(rng.uniform(0.05, 3.0), rng.uniform(-3.1, 3.1));
    const int n = rng.integer(1, 5);
    const Complex a{rng.uniform(0.05, 1.95), rng.uniform(-0.5, 0.5)};
    qs.push_back({z, n, a});
  }
  return qs;
}

void BM_serial(benchmark::State& state) {
  const auto qs = queries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch::evaluate_serial(qs, 1e-10));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_parallel(benchmark::State& state) {
  const auto qs = queries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch::evaluate(qs, 1e-10));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = batch::max_threads();
}

}  // namespace

BENCHMARK(BM_serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
