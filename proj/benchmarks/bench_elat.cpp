#include "elat/arith.hpp"
#include "elat/bound.hpp"
#include "elat/count.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_LatticeCount(benchmark::State& state) {
  const elat::EllipsoidParams p(elat::Rational(1), elat::Rational(state.range(0)));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(elat::count::lattice_count(p, {threads, elat::kDefaultBudget}));
}
BENCHMARK(BM_LatticeCount)->Args({100'000, 1})->Args({100'000, 0})->Args({1'000'000, 0})
    ->Unit(benchmark::kMillisecond);

void BM_RnSieve(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    elat::arith::RnTable table(n);
    benchmark::DoNotOptimize(table.prefix(n));
  }
}
BENCHMARK(BM_RnSieve)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_SeriesConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(elat::bound::series_constants(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesConstants)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

// The distro benchmark_main archive carries LTO bytecode from another compiler
// release, so the entry point is defined here.
BENCHMARK_MAIN();
