#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "kodaira/params.hpp"
#include "kodaira/sweep.hpp"

using namespace kodaira;

namespace {

const std::vector<ConstructionParams>& triples(std::int64_t max_p) {
  static std::map<std::int64_t, std::vector<ConstructionParams>> cache;
  auto it = cache.find(max_p);
  if (it == cache.end()) it = cache.emplace(max_p, enumerate_params(max_p, 500)).first;
  return it->second;
}

template <auto Sweep>
void consistency(benchmark::State& state) {
  const auto& params = triples(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(params, SweepLimits{}));
  state.counters["triples"] = static_cast<double>(params.size());
  state.counters["threads"] = Sweep == sweep_parallel ? sweep_threads() : 1;
}

template <auto Build>
void dossiers(benchmark::State& state) {
  const auto& params = triples(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Build(params, DossierOptions{}));
  state.counters["triples"] = static_cast<double>(params.size());
}

}  // namespace

BENCHMARK(consistency<sweep_serial>)->Arg(13)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(consistency<sweep_parallel>)->Arg(13)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(dossiers<dossiers_serial>)->Arg(13)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(dossiers<dossiers_parallel>)->Arg(13)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
