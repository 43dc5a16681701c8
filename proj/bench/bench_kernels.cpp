#include <random>

#include <benchmark/benchmark.h>

#include "hopfcheck/category.hpp"
#include "hopfcheck/linalg.hpp"
#include "hopfcheck/matrix.hpp"

using namespace hopfcheck;

namespace {

CMatrix random_matrix(std::size_t n, unsigned seed, double density = 0.5) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::bernoulli_distribution keep(density);
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng))
        m(r, c) = CycQ8(coef(rng), coef(rng), coef(rng), coef(rng));
  return m;
}

void BM_Matmul(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(matmul(a, b, exec));
}

void BM_RowReduce(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CMatrix a = random_matrix(n, 3, 0.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(row_reduce(a, exec));
}

void BM_Pentagon(benchmark::State& state, Exec exec) {
  const TYData t = klein_four_ty(CycQ8(Rational(1, 2)));
  for (auto _ : state)
    benchmark::DoNotOptimize(pentagon_check(t, exec));
}

} // namespace

BENCHMARK_CAPTURE(BM_Matmul, serial, Exec::Serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Matmul, parallel, Exec::Parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RowReduce, serial, Exec::Serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RowReduce, parallel, Exec::Parallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pentagon, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pentagon, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
