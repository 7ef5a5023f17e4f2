#include <benchmark/benchmark.h>

#include "rainbow/antiramsey/ar_search.hpp"
#include "rainbow/constructions/zoo.hpp"
#include "rainbow/core/family.hpp"
#include "rainbow/turan/ex_search.hpp"

using namespace rainbow;

namespace {

HyperGraphFamily family_for(int which) {
  switch (which) {
    case 0:
      return HyperGraphFamily::single(constructions::cycle(3));
    case 1:
      return HyperGraphFamily::single(disjoint_union(constructions::cycle(3), 2));
    default:
      return HyperGraphFamily::single(constructions::complete(4, 3));
  }
}

// Args: family (0 = K3, 1 = 2K3, 2 = K4^3), n.
void BM_ExSerial(benchmark::State& state) {
  const HyperGraphFamily fam = family_for(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(turan::ex_exact_serial(n, fam).value);
}

// Args: family, n, threads.
void BM_ExParallel(benchmark::State& state) {
  const HyperGraphFamily fam = family_for(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  turan::SearchOptions o;
  o.threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(turan::ex_exact(n, fam, o).value);
}

// Args: n, t, for F = K3.
void BM_ArSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), t = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(antiramsey::ar_exact_serial(n, t, constructions::cycle(3)).value);
}

// Args: n, t, threads.
void BM_ArParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), t = static_cast<int>(state.range(1));
  antiramsey::ArOptions o;
  o.threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(antiramsey::ar_exact(n, t, constructions::cycle(3), o).value);
}

}  // namespace

BENCHMARK(BM_ExSerial)->Args({0, 9})->Args({1, 9})->Args({2, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExParallel)
    ->ArgsProduct({{0, 1}, {9}, {1, 2, 4, 8}})
    ->ArgsProduct({{2}, {7}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_ArSerial)->Args({6, 2})->Args({7, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArParallel)->ArgsProduct({{6}, {2}, {1, 2, 4, 8}})->ArgsProduct({{7}, {1}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
