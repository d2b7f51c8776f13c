#include <benchmark/benchmark.h>

#include "linrel/closed_form.hpp"
#include "linrel/energy.hpp"
#include "linrel/growth.hpp"
#include "linrel/oracle.hpp"

namespace {

using namespace linrel;

void BM_PhiClosed(benchmark::State& state) {
  const ProblemSpec spec{6, 6, 0, 0};
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(phi_closed(spec, n));
}
BENCHMARK(BM_PhiClosed)->Arg(100)->Arg(10'000);

void BM_PhiConvolve(benchmark::State& state) {
  const ProblemSpec spec{6, 6, 0, 0};
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(phi_convolve(spec, n));
}
BENCHMARK(BM_PhiConvolve)->Arg(100)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_PhiViaSeries(benchmark::State& state) {
  const ProblemSpec spec{3, 3, 0, 0};
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(phi_via_series(spec, n));
}
BENCHMARK(BM_PhiViaSeries)->Arg(100)->Arg(1'000)->Unit(benchmark::kMillisecond);

void BM_PhiEnumerate(benchmark::State& state) {
  const ProblemSpec spec{3, 3, 0, 0};
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(phi_enumerate(spec, n));
  state.SetItemsProcessed(state.iterations() * n * n * n * n * n * n);
}
BENCHMARK(BM_PhiEnumerate)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GrowthPolynomial(benchmark::State& state) {
  const ProblemSpec spec{3, 2, 0, 12};
  for (auto _ : state) benchmark::DoNotOptimize(growth_polynomial(spec));
}
BENCHMARK(BM_GrowthPolynomial);

void BM_PsiPolynomial(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi_polynomial(h));
}
BENCHMARK(BM_PsiPolynomial)->Arg(7)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EnergyReportInterval(benchmark::State& state) {
  const IntSet set = IntSet::interval(0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(energy_report(set, 3));
}
BENCHMARK(BM_EnergyReportInterval)->Arg(100)->Arg(5'000);

}  // namespace

BENCHMARK_MAIN();
