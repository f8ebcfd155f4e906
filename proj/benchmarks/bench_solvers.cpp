#include <benchmark/benchmark.h>

#include <complex>

#include "bernlab/bernlab.hpp"

using namespace bernlab;

static void RemezAbs(benchmark::State& state) {
  const auto problem = ApproxProblem::for_spec(FunctionSpec(1.0, 0.0), static_cast<int>(state.range(0)),
                                               PNorm::infinity());
  for (auto _ : state) benchmark::DoNotOptimize(remez_linf(problem).error);
}
BENCHMARK(RemezAbs)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void RemezOscillating(benchmark::State& state) {
  const auto problem = ApproxProblem::for_spec(FunctionSpec(0.0, 4.0, Variant::cos_part),
                                               static_cast<int>(state.range(0)), PNorm::infinity());
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem).error);
}
BENCHMARK(RemezOscillating)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void LawsonComplex(benchmark::State& state) {
  const auto problem = ApproxProblem::for_spec(FunctionSpec(1.5, 1.0), static_cast<int>(state.range(0)),
                                               PNorm::infinity());
  for (auto _ : state) benchmark::DoNotOptimize(minimax_complex(problem).error);
}
BENCHMARK(LawsonComplex)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void L1Real(benchmark::State& state) {
  const auto problem = ApproxProblem::for_spec(FunctionSpec(1.0, 0.0), static_cast<int>(state.range(0)),
                                               PNorm(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(best_l1(problem).error);
}
BENCHMARK(L1Real)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void L1Complex(benchmark::State& state) {
  const auto problem = ApproxProblem::for_spec(FunctionSpec(0.5, 1.0), static_cast<int>(state.range(0)),
                                               PNorm(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(best_l1(problem).error);
}
BENCHMARK(L1Complex)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void L2Projection(benchmark::State& state) {
  const auto problem = ApproxProblem::for_spec(FunctionSpec(0.5, 1.0), static_cast<int>(state.range(0)),
                                               PNorm(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(project_l2(problem).error);
}
BENCHMARK(L2Projection)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void ComplexGamma(benchmark::State& state) {
  std::complex<double> z(0.5, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(complex_gamma(z));
    z += std::complex<double>(0.0, 0.01);
  }
}
BENCHMARK(ComplexGamma);

BENCHMARK_MAIN();
