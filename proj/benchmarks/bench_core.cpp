#include <benchmark/benchmark.h>

#include "qbound/bounds.hpp"
#include "qbound/entropic.hpp"
#include "qbound/gibbs.hpp"
#include "qbound/sampling.hpp"
#include "qbound/tensor_ops.hpp"

using namespace qbound;

static void BM_Entropy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SystemLayout layout({{"A", d}}, 1);
  const QuantumState rho = sample_state(1, layout);
  for (auto _ : state) benchmark::DoNotOptimize(entropy(rho));
}
BENCHMARK(BM_Entropy)->Arg(16)->Arg(64)->Arg(256);

static void BM_PartialTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SystemLayout layout({{"A", d}, {"B", d}}, 2);
  const QuantumState rho = sample_state(2, layout);
  for (auto _ : state)
    benchmark::DoNotOptimize(partial_trace(rho, {"A"}).matrix().sum());
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(8)->Arg(16);

static void BM_MutualInformation(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SystemLayout layout({{"A", d}, {"B", d}}, 2);
  const QuantumState rho = sample_state(3, layout);
  PartitionSpec part{{{"A"}, {"B"}}, {}};
  for (auto _ : state)
    benchmark::DoNotOptimize(multipartite_mi(rho, part));
}
BENCHMARK(BM_MutualInformation)->Arg(4)->Arg(8)->Arg(16);

static void BM_GibbsSolve(benchmark::State& state) {
  OscillatorModel osc{{1.0}};
  const SpectrumModel spec = osc.truncate(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_gibbs(spec, 1.5).entropy);
}
BENCHMARK(BM_GibbsSolve)->Arg(128)->Arg(512)->Arg(2048);

static void BM_TwoStepBound(benchmark::State& state) {
  BoundSpec spec;
  spec.descriptor = {FunctionClass::LHat, 1.0, 2.0, 1, 2};
  spec.eps = 0.1;
  spec.energy_bar = 1.0;
  spec.t = 1.0;
  spec.fhat = EnergyFunction::default_envelope(OscillatorModel{{1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(vb_two_step(spec).total);
}
BENCHMARK(BM_TwoStepBound);

BENCHMARK_MAIN();
