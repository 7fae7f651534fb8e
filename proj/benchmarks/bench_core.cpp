#include <benchmark/benchmark.h>

#include <random>

#include "triqd/discord.hpp"
#include "triqd/measure.hpp"
#include "triqd/oracle.hpp"
#include "triqd/qmat.hpp"
#include "triqd/states.hpp"

namespace {

triqd::ParamSet reference_params() {
  triqd::ParamSet p;
  p.a = {0, 0, 0.03};
  p.b = {0, 0, 0.25};
  p.c = {0.12, 0.12, 0.01};
  p.r = {0.1, 0.1, -0.3};
  p.s = {0.13, 0.13, -0.26};
  p.t = {-0.02, -0.02, -0.36};
  return p;
}

void BM_eig_hermitian_8(benchmark::State& state) {
  const triqd::ComplexMatrix rho = triqd::build_state(reference_params());
  for (auto _ : state) benchmark::DoNotOptimize(triqd::eig_hermitian(rho));
}
BENCHMARK(BM_eig_hermitian_8);

void BM_objective_gf(benchmark::State& state) {
  const triqd::ParamSet p = reference_params();
  const triqd::BlochVector zA = triqd::BlochVector::from_angles(0.7, 1.1);
  const triqd::BlochVector zB = triqd::BlochVector::from_angles(0.3, 2.9);
  for (auto _ : state) benchmark::DoNotOptimize(triqd::objective_gf(p, zA, zB));
}
BENCHMARK(BM_objective_gf);

void BM_cond_entropies_matrix(benchmark::State& state) {
  const triqd::ComplexMatrix rho = triqd::build_state(reference_params());
  const auto scheme = triqd::MeasurementScheme::shared(
      triqd::BlochVector::from_angles(0.7, 1.1), triqd::BlochVector::from_angles(0.3, 2.9));
  for (auto _ : state) benchmark::DoNotOptimize(triqd::cond_entropies_matrix(rho, scheme));
}
BENCHMARK(BM_cond_entropies_matrix);

void BM_maximize_objective(benchmark::State& state) {
  const triqd::ParamSet p = reference_params();
  triqd::OptimizerOptions opts;
  opts.grid_theta = static_cast<int>(state.range(0));
  opts.grid_phi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(triqd::maximize_objective(p, opts));
}
BENCHMARK(BM_maximize_objective)->Arg(8)->Arg(16)->Arg(32);

void BM_oracle_discord(benchmark::State& state) {
  const triqd::ComplexMatrix rho = triqd::build_werner_ghz(0.5);
  triqd::OracleOptions opts;
  opts.grid_theta = static_cast<int>(state.range(0));
  opts.grid_phi = static_cast<int>(state.range(0));
  opts.refine = false;
  for (auto _ : state) benchmark::DoNotOptimize(triqd::oracle_discord(rho, opts));
}
BENCHMARK(BM_oracle_discord)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
