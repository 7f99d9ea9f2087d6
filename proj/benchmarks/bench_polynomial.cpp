#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qwilson/number_theory.hpp"
#include "qwilson/polynomial.hpp"
#include "qwilson/q_analogues.hpp"

namespace {

using namespace qwilson;

Polynomial random_dense(std::mt19937_64& rng, std::size_t terms) {
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::vector<BigInt> coeffs(terms);
  for (BigInt& c : coeffs) c = coeff(rng);
  coeffs.back() = 1;
  return Polynomial(std::move(coeffs));
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const std::size_t terms = static_cast<std::size_t>(state.range(0));
  const Polynomial a = random_dense(rng, terms);
  const Polynomial b = random_dense(rng, terms);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolyMul)->Arg(64)->Arg(256)->Arg(1024);

void BM_DivModFactorial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Polynomial dividend = q_factorial(n);
  const Polynomial modulus = q_integer(n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(divmod(dividend, modulus));
  }
}
BENCHMARK(BM_DivModFactorial)->Arg(20)->Arg(40);

void BM_QFactorial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_factorial(n));
  }
}
BENCHMARK(BM_QFactorial)->Arg(32)->Arg(64);

void BM_TotativeResidue(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  cyclotomic(n);  // fill the memo so the loop times the reduction itself
  for (auto _ : state) {
    benchmark::DoNotOptimize(totative_q_sum_residue(n));
  }
}
BENCHMARK(BM_TotativeResidue)->Arg(210)->Arg(720);

void BM_RamanujanSweep(benchmark::State& state) {
  for (auto _ : state) {
    long long sum = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) sum += ramanujan_sum(n, 1);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_RamanujanSweep);

}  // namespace

BENCHMARK_MAIN();
