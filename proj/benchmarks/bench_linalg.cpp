#include <benchmark/benchmark.h>

#include "uc/linalg.hpp"

namespace {

uc::Mat random_mat(const uc::FieldSpec& k, std::size_t n, std::uint64_t seed) {
  uc::Rng rng(seed);
  uc::Mat m(n, n + 4, k);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = uc::Scalar::from_int(k, rng.range(-50, 50));
  return m;
}

void BM_RankRational(benchmark::State& state) {
  uc::Mat m = random_mat(uc::FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(uc::rank(m));
}
BENCHMARK(BM_RankRational)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_RankPrime(benchmark::State& state) {
  uc::Mat m = random_mat(uc::FieldSpec::prime(32003), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(uc::rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_Kernel(benchmark::State& state) {
  uc::Mat m = random_mat(uc::FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(uc::kernel_basis(m));
}
BENCHMARK(BM_Kernel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
