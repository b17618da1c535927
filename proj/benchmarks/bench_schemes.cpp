#include <benchmark/benchmark.h>

#include "uc/catalog.hpp"
#include "uc/invariants.hpp"

namespace {

void BM_FatpointProbe(benchmark::State& state) {
  uc::PointConfig z = uc::dual_points(uc::catalog::h19(uc::FieldSpec::rationals()));
  int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    uc::Rng rng(1);
    benchmark::DoNotOptimize(uc::generic_fatpoint_dim(z, j, j + 1, uc::GenericMode::probe(), rng));
  }
}
BENCHMARK(BM_FatpointProbe)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SplittingProbe(benchmark::State& state) {
  uc::PointConfig z = uc::dual_points(uc::catalog::b3(uc::FieldSpec::rationals()));
  for (auto _ : state) {
    uc::Rng rng(1);
    benchmark::DoNotOptimize(uc::compute_splitting(z, uc::GenericMode::probe(), rng));
  }
}
BENCHMARK(BM_SplittingProbe)->Unit(benchmark::kMillisecond);

void BM_HilbertFunction(benchmark::State& state) {
  uc::PointConfig z = uc::dual_points(uc::catalog::h19(uc::FieldSpec::rationals()));
  for (auto _ : state) benchmark::DoNotOptimize(uc::delta_hf(z));
}
BENCHMARK(BM_HilbertFunction)->Unit(benchmark::kMillisecond);

}  // namespace
