#include <benchmark/benchmark.h>

#include "uc/catalog.hpp"
#include "uc/lefschetz.hpp"

namespace {

void BM_PowerIdealHF(benchmark::State& state) {
  auto pi = uc::PowerIdeal::uniform(uc::catalog::a_ab(3, 13, uc::FieldSpec::rationals()), 8);
  int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uc::power_ideal_hf(pi, j));
}
BENCHMARK(BM_PowerIdealHF)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SlpAt(benchmark::State& state) {
  auto pi = uc::PowerIdeal::uniform(uc::catalog::a_ab(3, 13, uc::FieldSpec::rationals()), 8);
  for (auto _ : state) {
    uc::Rng rng(1);
    benchmark::DoNotOptimize(uc::slp_at(pi, 2, 8, uc::GenericMode::probe(), rng));
  }
}
BENCHMARK(BM_SlpAt)->Unit(benchmark::kMillisecond);

}  // namespace
