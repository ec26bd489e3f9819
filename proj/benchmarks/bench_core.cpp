#include <benchmark/benchmark.h>

#include <cmath>

#include "becnlo/gpe_oracle.hpp"
#include "becnlo/lifetime.hpp"
#include "becnlo/validity.hpp"

namespace {

using namespace becnlo;

void BM_RadialIntegral(benchmark::State& state) {
  const RadialGrid grid(10.0, static_cast<std::size_t>(state.range(0)));
  const auto f = RadialField::sample(grid, FieldUnit::kDensity,
                                     [](double r) { return std::exp(-r * r); });
  for (auto _ : state) benchmark::DoNotOptimize(quad::radial_integral(f, 3.3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RadialIntegral)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_TfChemicalPotentialNumeric(benchmark::State& state) {
  const auto config = sodium_reference_config();
  const auto sc = derive_scales(config);
  for (auto _ : state) benchmark::DoNotOptimize(tf_chemical_potential_numeric(config, sc));
}
BENCHMARK(BM_TfChemicalPotentialNumeric);

void BM_FigureData(benchmark::State& state) {
  const auto config = sodium_reference_config();
  const int fig = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(figure_data(fig, config).to_csv());
}
BENCHMARK(BM_FigureData)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ValidityReport(benchmark::State& state) {
  const auto config = sodium_reference_config();
  for (auto _ : state) benchmark::DoNotOptimize(validity_report(config));
}
BENCHMARK(BM_ValidityReport)->Unit(benchmark::kMillisecond);

void BM_EstimateLifetime(benchmark::State& state) {
  auto config = sodium_reference_config();
  config.species.im_a12 = -1.29e-9;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_lifetime(config));
}
BENCHMARK(BM_EstimateLifetime)->Unit(benchmark::kMicrosecond);

void BM_CompareTfVsGpe(benchmark::State& state) {
  const auto config = sodium_reference_config();
  OracleOptions opts;
  opts.n_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compare_tf_vs_gpe(config, opts));
}
BENCHMARK(BM_CompareTfVsGpe)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
