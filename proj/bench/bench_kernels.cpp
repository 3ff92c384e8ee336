// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "arpl/montecarlo.hpp"
#include "figure.hpp"

namespace {

using arpl::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_PersistenceProfile(benchmark::State& state) {
  const auto law = arpl::InnovationLaw::gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(arpl::estimate_persistence_profile(0.5, law, 10, 200000, 1, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * 200000);
}
BENCHMARK(BM_PersistenceProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PolytopeVolume(benchmark::State& state) {
  const auto spec = arpl::PolytopeSpec::tutte_q(3, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(arpl::polytope_volume_mc(spec, 500000, 1, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * 500000);
}
BENCHMARK(BM_PolytopeVolume)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FigureData(benchmark::State& state) {
  arpl::cli::FigureOptions opt;
  opt.step = arpl::make_rational(1, 20);
  for (auto _ : state) benchmark::DoNotOptimize(arpl::cli::figure_data(opt, exec_of(state)));
}
BENCHMARK(BM_FigureData)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
