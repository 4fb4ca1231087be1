#include <benchmark/benchmark.h>

#include <random>

#include "homkit/invariants.hpp"
#include "homkit/linalg.hpp"

using namespace homkit;

namespace {

Matrix<Fp> random_fp(std::size_t n, std::uint64_t seed) {
  const FieldSpec f = FieldSpec::prime(kDefaultPrime);
  std::mt19937_64 rng(seed);
  Matrix<Fp> m(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = from_int<Fp>(f, static_cast<long>(rng() % kDefaultPrime));
  return m;
}

Matrix<Rational> random_q(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<Rational> m(n, n, FieldSpec::rationals());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng() % 19) - 9);
  return m;
}

void BM_rref_fp_serial(benchmark::State& s) {
  const auto m = random_fp(s.range(0), 1);
  for (auto _ : s) benchmark::DoNotOptimize(serial::rref(m));
}

void BM_rref_fp_parallel(benchmark::State& s) {
  const auto m = random_fp(s.range(0), 1);
  for (auto _ : s) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_q_serial(benchmark::State& s) {
  const auto m = random_q(s.range(0), 2);
  for (auto _ : s) benchmark::DoNotOptimize(serial::rref(m));
}

void BM_rref_q_parallel(benchmark::State& s) {
  const auto m = random_q(s.range(0), 2);
  for (auto _ : s) benchmark::DoNotOptimize(rref(m));
}

void BM_gldim_fixture(benchmark::State& s) {
  auto a = from_quiver<Fp>(spec_of_fixture("FIX-TP2", FieldSpec::prime(kDefaultPrime)));
  for (auto _ : s) benchmark::DoNotOptimize(gldim(a, 12));
}

}  // namespace

BENCHMARK(BM_rref_fp_serial)->Arg(64)->Arg(256);
BENCHMARK(BM_rref_fp_parallel)->Arg(64)->Arg(256);
BENCHMARK(BM_rref_q_serial)->Arg(32)->Arg(64);
BENCHMARK(BM_rref_q_parallel)->Arg(32)->Arg(64);
BENCHMARK(BM_gldim_fixture);

BENCHMARK_MAIN();
