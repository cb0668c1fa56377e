#include <benchmark/benchmark.h>

#include "simplexflow/cesaro.hpp"
#include "simplexflow/cli/cli.hpp"
#include "simplexflow/dynamics.hpp"
#include "simplexflow/ode_limit.hpp"
#include "simplexflow/trajectory.hpp"

namespace sf = simplexflow;

namespace {

void BM_Step(benchmark::State& state) {
  const sf::Parameters params(1, 1, 1);
  const auto f = sf::SpeedFunction::constant(0.5);
  auto p = sf::make_point(0.5, 0.3, 0.2);
  for (auto _ : state) {
    p = sf::step(p, params, f);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Step);

void BM_StepLog(benchmark::State& state) {
  const sf::Parameters params(1, 1, 1);
  const auto f = sf::SpeedFunction::constant(0.5);
  auto p = sf::make_point(0.5, 0.3, 0.2).to_log();
  for (auto _ : state) {
    p = sf::step_log(p, params, f);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_StepLog);

void BM_Iterate(benchmark::State& state) {
  const sf::Parameters params(-1, -1, -1);
  const auto f = sf::SpeedFunction::constant(0.5);
  for (auto _ : state) {
    auto t = sf::iterate(sf::make_point(0.5, 0.3, 0.2), params, f,
                         {.steps = state.range(0), .observe = {.phi = true, .sector = true}});
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Iterate)->Arg(10000)->Arg(100000);

void BM_CesaroPush(benchmark::State& state) {
  sf::CesaroState ces(static_cast<int>(state.range(0)));
  const auto p = sf::make_point(0.5, 0.3, 0.2);
  for (auto _ : state) {
    ces.push(p);
    benchmark::DoNotOptimize(ces.values());
  }
}
BENCHMARK(BM_CesaroPush)->Arg(2)->Arg(32);

void BM_CesaroCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::cesaro_coefficients(3, state.range(0)));
  }
}
BENCHMARK(BM_CesaroCoefficients)->Arg(1000)->Arg(100000);

void BM_ReferenceRk4(benchmark::State& state) {
  const sf::OdeRun run{.start = sf::make_point(0.5, 0.3, 0.2),
                       .params = sf::Parameters(1, 1, 1),
                       .speed = sf::SpeedFunction::constant(1),
                       .horizon = 5,
                       .method = sf::ReferenceRk4{1e-3},
                       .sample_interval = 1000000};
  for (auto _ : state) benchmark::DoNotOptimize(sf::reference_path(run));
}
BENCHMARK(BM_ReferenceRk4);

void BM_Sweep(benchmark::State& state) {
  sf::cli::RunConfig cfg;
  cfg.command = "sweep";
  cfg.a_list = cfg.b_list = cfg.c_list = {-1.0, 1.0};
  cfg.starts = 4;
  cfg.steps = 10000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::cli::sweep_csv(cfg, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
