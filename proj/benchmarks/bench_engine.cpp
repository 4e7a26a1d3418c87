#include "pensim/engine.hpp"
#include "pensim/index_shares.hpp"
#include "pensim/transitions.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pensim;

SystemSpec make_spec(SystemKind kind) {
  return SystemSpec(kind, DemographyParams(100, Rational(1, 10)), 1, 1000);
}

void BM_SimulateP(benchmark::State& state) {
  const SystemSpec spec = make_spec(SystemKind::P);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(spec, state.range(0)));
}
BENCHMARK(BM_SimulateP)->Arg(50)->Arg(200);

void BM_SimulateCB(benchmark::State& state) {
  const SystemSpec spec = make_spec(SystemKind::CB);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(spec, state.range(0)));
}
BENCHMARK(BM_SimulateCB)->Arg(50)->Arg(200);

void BM_EquivalenceSweep(benchmark::State& state) {
  const SystemSpec p = make_spec(SystemKind::P);
  const SystemSpec cb = make_spec(SystemKind::CB);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_equivalence(p, cb, state.range(0)));
}
BENCHMARK(BM_EquivalenceSweep)->Arg(20)->Arg(50);

void BM_HoldingsTrace(benchmark::State& state) {
  const Trajectory traj = simulate(make_spec(SystemKind::CB), state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(holdings_trace(traj));
}
BENCHMARK(BM_HoldingsTrace)->Arg(50)->Arg(200);

}  // namespace
