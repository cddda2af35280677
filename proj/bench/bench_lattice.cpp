// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "diffdim/lattice.hpp"

using namespace diffdim;

namespace {

// staircase in m variables with `size` corners on the hyperplane sum = size
ExponentSet corners(int m, int size) {
  ExponentSet set;
  set.m = m;
  for (int k = 0; k < size; ++k) {
    Exponent e;
    e[static_cast<std::size_t>(k % m)] = static_cast<Exponent::value_type>(size - k);
    e[static_cast<std::size_t>((k + 1) % m)] = static_cast<Exponent::value_type>(k + 1);
    set.elements.push_back(e);
  }
  return set;
}

void BM_CountSerial(benchmark::State& state) {
  const ExponentSet set = corners(4, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::count_excluded(set, static_cast<int>(state.range(0))));
}

void BM_CountParallel(benchmark::State& state) {
  const ExponentSet set = corners(4, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_excluded(set, static_cast<int>(state.range(0))));
}

void BM_OmegaSerial(benchmark::State& state) {
  const ExponentSet set = corners(4, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::dimension_polynomial(set));
}

void BM_OmegaParallel(benchmark::State& state) {
  const ExponentSet set = corners(4, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(dimension_polynomial(set));
}

} // namespace

BENCHMARK(BM_CountSerial)->Arg(20)->Arg(40);
BENCHMARK(BM_CountParallel)->Arg(20)->Arg(40);
BENCHMARK(BM_OmegaSerial)->Arg(8)->Arg(14);
BENCHMARK(BM_OmegaParallel)->Arg(8)->Arg(14);

BENCHMARK_MAIN();
