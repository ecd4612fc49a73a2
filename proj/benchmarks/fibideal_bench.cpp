#include <benchmark/benchmark.h>

#include "fibideal/kr.hpp"
#include "fibideal/laurent_poly.hpp"
#include "fibideal/number_theory.hpp"
#include "fibideal/series.hpp"

namespace fibideal {

static void BM_FibFastDoubling(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fib(n));
}
BENCHMARK(BM_FibFastDoubling)->RangeMultiplier(10)->Range(10, 100000);

static void BM_DivisorProfile(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(divisor_profile(n));
}
BENCHMARK(BM_DivisorProfile)->Arg(360)->Arg(5040)->Arg(10000);

static void BM_CnPoly(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cn_poly(n));
}
BENCHMARK(BM_CnPoly)->RangeMultiplier(4)->Range(16, 1024);

static void BM_LambdaProductSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_product_series(order));
}
BENCHMARK(BM_LambdaProductSeries)->RangeMultiplier(2)->Range(64, 1024);

static void BM_LambdaEval(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_eval(n));
}
BENCHMARK(BM_LambdaEval)->Arg(100)->Arg(300)->Arg(1000);

static void BM_SymbolicKrProduct(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kr_lhs_series(order, LaurentPoly::q()));
}
BENCHMARK(BM_SymbolicKrProduct)->Arg(20)->Arg(60)->Arg(120);

}  // namespace fibideal

BENCHMARK_MAIN();
