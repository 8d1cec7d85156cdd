#include <benchmark/benchmark.h>

#include <cmath>

#include "dwell/basis.hpp"
#include "dwell/fdm.hpp"
#include "dwell/serial.hpp"
#include "dwell/sweep.hpp"

namespace {

dwell::Tridiagonal bench_matrix(int n) {
  const dwell::PotentialParams p = dwell::SymWellParams{5.0, 2};
  return dwell::assemble_tridiagonal(p, dwell::GridSpec::for_potential(p, n));
}

void BM_BisectionParallel(benchmark::State& state) {
  const auto t = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dwell::eigen_tridiag_smallest(t, 8));
}

void BM_BisectionSerial(benchmark::State& state) {
  const auto t = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dwell::serial::eigen_tridiag_smallest(t, 8));
}

void BM_AssembleParallel(benchmark::State& state) {
  const dwell::PotentialParams p = dwell::AsymWellParams{2.0, 2, 0.3};
  const auto grid = dwell::GridSpec::for_potential(p, static_cast<int>(state.range(0)));
  auto v = [&p](double x) { return dwell::evaluate(p, x); };
  for (auto _ : state) benchmark::DoNotOptimize(dwell::assemble_tridiagonal(v, grid));
}

void BM_AssembleSerial(benchmark::State& state) {
  const dwell::PotentialParams p = dwell::AsymWellParams{2.0, 2, 0.3};
  const auto grid = dwell::GridSpec::for_potential(p, static_cast<int>(state.range(0)));
  auto v = [&p](double x) { return dwell::evaluate(p, x); };
  for (auto _ : state) benchmark::DoNotOptimize(dwell::serial::assemble_tridiagonal(v, grid));
}

void BM_QuadratureParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dwell::quadrature_matrix(2, 32, [](double x) { return std::cos(x); }));
  }
}

void BM_QuadratureSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dwell::serial::quadrature_matrix(2, 32, [](double x) { return std::cos(x); }));
  }
}

dwell::SweepConfig bench_sweep() {
  dwell::SweepConfig c;
  c.m = 2;
  c.alpha_min = 1.0;
  c.alpha_max = 10.0;
  c.steps = 8;
  c.N = 32;
  return c;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto c = bench_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(dwell::sweep(c));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto c = bench_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(dwell::serial::sweep(c));
}

}  // namespace

BENCHMARK(BM_BisectionParallel)->Arg(4000)->Arg(16000);
BENCHMARK(BM_BisectionSerial)->Arg(4000)->Arg(16000);
BENCHMARK(BM_AssembleParallel)->Arg(100000);
BENCHMARK(BM_AssembleSerial)->Arg(100000);
BENCHMARK(BM_QuadratureParallel);
BENCHMARK(BM_QuadratureSerial);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
