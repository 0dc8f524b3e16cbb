// Serial reference vs OpenMP kernel for the full frame pipeline.

#include <benchmark/benchmark.h>

#include "mannheim/catalog.hpp"
#include "mannheim/ruled_surface.hpp"

namespace {

using namespace mannheim;

void run(benchmark::State& state, Execution execution) {
  const SurfaceSpec spec = catalog::small_circle(0.5, catalog::kDefaultRange, static_cast<std::size_t>(state.range(0)));
  AnalysisOptions options;
  options.execution = execution;
  for (auto _ : state) benchmark::DoNotOptimize(darboux_frame(spec, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FrameSerial(benchmark::State& state) { run(state, Execution::serial); }
void BM_FrameParallel(benchmark::State& state) { run(state, Execution::parallel); }

BENCHMARK(BM_FrameSerial)->Arg(2001)->Arg(20001)->Arg(200001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrameParallel)->Arg(2001)->Arg(20001)->Arg(200001)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
