#include <benchmark/benchmark.h>

#include "qwilson/orbits.hpp"
#include "qwilson/permutations.hpp"

namespace {

using namespace qwilson;

void BM_FPolynomial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_polynomial(n));
  }
  long long cycles = 1;
  for (unsigned k = 2; k <= n; ++k) cycles *= k;
  state.SetItemsProcessed(state.iterations() * cycles);
}
BENCHMARK(BM_FPolynomial)->DenseRange(6, 9);

void BM_FPolynomialThreaded(benchmark::State& state) {
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_polynomial(9, jobs));
  }
}
BENCHMARK(BM_FPolynomialThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_CycleEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_cycle(n, [&](const Permutation& p) { count += p.image(1); });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CycleEnumeration)->DenseRange(7, 9);

void BM_OrbitCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_census(n));
  }
}
BENCHMARK(BM_OrbitCensus)->DenseRange(6, 8);

void BM_TransferLaw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_transfer_law(n));
  }
}
BENCHMARK(BM_TransferLaw)->Arg(8)->Arg(12);  // 12 exercises the sampled path

void BM_Mahonian(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_mahonian(n));
  }
}
BENCHMARK(BM_Mahonian)->Arg(7)->Arg(8);

void BM_WilsonViaOrbits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wilson_residue_via_orbits(n));
  }
}
BENCHMARK(BM_WilsonViaOrbits)->DenseRange(6, 8);

}  // namespace

BENCHMARK_MAIN();
