#include <benchmark/benchmark.h>

#include "uc/arrangements.hpp"
#include "uc/catalog.hpp"

namespace {

void BM_JacobianDim(benchmark::State& state) {
  uc::LineArrangement a = uc::catalog::b3(uc::FieldSpec::rationals());
  int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uc::jacobian_dim(a, t));
}
BENCHMARK(BM_JacobianDim)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SingularPoints(benchmark::State& state) {
  uc::LineArrangement a = uc::catalog::h19(uc::FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(uc::singular_points(a));
}
BENCHMARK(BM_SingularPoints)->Unit(benchmark::kMillisecond);

void BM_FreenessB3(benchmark::State& state) {
  uc::LineArrangement a = uc::catalog::b3(uc::FieldSpec::rationals());
  for (auto _ : state) {
    uc::Rng rng(1);
    benchmark::DoNotOptimize(uc::freeness(a, uc::GenericMode::probe(), rng));
  }
}
BENCHMARK(BM_FreenessB3)->Unit(benchmark::kMillisecond);

}  // namespace
