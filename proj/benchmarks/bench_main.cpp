#include <benchmark/benchmark.h>

#include "awe/dynamics.hpp"
#include "awe/engine.hpp"
#include "awe/scenario.hpp"
#include "awe/stability.hpp"

namespace {

awe::KinematicState crosswind_state() {
  awe::KinematicState s;
  s.phi = 0.1;
  s.theta = 0.4;
  s.r = 80.0;
  s.phi_dot = 0.15;
  s.theta_dot = 0.05;
  s.r_dot = 1.5;
  return s;
}

void BM_IntegrateStep(benchmark::State& state) {
  const awe::SystemParams params;
  awe::WindField wind;
  wind.w0 = 5.0;
  awe::KinematicState s = crosswind_state();
  for (auto _ : state) {
    s = awe::integrate_step(s, wind, 0.02, 500.0, params, 1e-3);
    benchmark::DoNotOptimize(s);
    s.r = 80.0; // keep the state bounded across iterations
    s.theta = 0.4;
  }
}
BENCHMARK(BM_IntegrateStep);

void BM_EngineSecond(benchmark::State& state) {
  awe::Scenario sc;
  sc.sim.duration = 1.0;
  for (auto _ : state) {
    auto res = awe::run_simulation(sc);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_EngineSecond)->Unit(benchmark::kMillisecond);

void BM_LyapunovCertificate(benchmark::State& state) {
  const awe::ActuatorParams act;
  const auto vertices =
      awe::gamma_design_vertices(awe::default_gamma_box(), 0.28, -2.5, act);
  for (auto _ : state) {
    auto res = awe::find_common_lyapunov(vertices);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_LyapunovCertificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
