#include <benchmark/benchmark.h>

#include "hellmann/table.hpp"
#include "hellmann/verify.hpp"

using namespace hellmann;

namespace {

TableConfig config_for(Engine engine) {
    TableConfig config;
    config.spec = preset("delta-0.1-scan");
    config.spec.engine = engine;
    return config;
}

void table_serial(benchmark::State& state) {
    const auto config = config_for(Engine(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fill_table_serial(config));
}

void table_parallel(benchmark::State& state) {
    const auto config = config_for(Engine(state.range(0)));
    state.counters["workers"] = table_workers();
    for (auto _ : state) benchmark::DoNotOptimize(fill_table(config));
}

void quadrature_suite(benchmark::State& state) {
    QuadratureSuite suite;
    suite.states = states_up_to(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_quadrature(suite));
}

} // namespace

BENCHMARK(table_serial)->Arg(int(Engine::perturbation))->Arg(int(Engine::both))->Unit(benchmark::kMillisecond);
BENCHMARK(table_parallel)->Arg(int(Engine::perturbation))->Arg(int(Engine::both))->Unit(benchmark::kMillisecond);
BENCHMARK(quadrature_suite)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
