#include <benchmark/benchmark.h>

#include "lclab/concavity.hpp"
#include "lclab/partitions.hpp"
#include "lclab/series.hpp"
#include "lclab/stirling.hpp"
#include "lclab/triangle.hpp"

namespace {

void BM_BuildDArcais(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lclab::build_triangle(lclab::ArithFn::sigma(), lclab::HKind::kId, n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildDArcais)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BuildRationalTilde(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = lclab::tilde(lclab::ArithFn::sigma());
  for (auto _ : state) benchmark::DoNotOptimize(lclab::build_triangle(g, lclab::HKind::kOne, n));
}
BENCHMARK(BM_BuildRationalTilde)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_HorizontalCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tri = lclab::build_triangle(lclab::ArithFn::sigma(), lclab::HKind::kId, n);
  for (auto _ : state) benchmark::DoNotOptimize(lclab::horizontal_check(tri, 1, n, 1));
}
BENCHMARK(BM_HorizontalCheck)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SeriesExp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto e = lclab::eichler_integral(lclab::ArithFn::sigma(), order);
  e *= lclab::Rational(3);
  for (auto _ : state) benchmark::DoNotOptimize(lclab::exp(e));
}
BENCHMARK(BM_SeriesExp)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_NekrasovOkounkov(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lclab::nekrasov_okounkov_poly(n, 1));
}
BENCHMARK(BM_NekrasovOkounkov)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PartitionStream(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    lclab::PartitionStream stream(n);
    do {
      ++count;
    } while (stream.next());
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionStream)->Arg(40)->Arg(60);

void BM_StirlingFirstFailures(benchmark::State& state) {
  const auto m_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lclab::stirling_vertical_first_failures(m_max, 1500));
}
BENCHMARK(BM_StirlingFirstFailures)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
