#include <benchmark/benchmark.h>

#include "pqb/bivariate.hpp"
#include "pqb/korovkin.hpp"
#include "pqb/target.hpp"

using namespace pqb;

static void BM_BasisFloat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PQPair pq(0.95, 0.9);
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uni_basis_all(n, x, pq));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BasisFloat)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_BasisExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pq = exact_pair(9, 10, 3, 5);
  const Rational x = make_rational(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uni_basis_all(n, x, pq));
  }
}
BENCHMARK(BM_BasisExact)->DenseRange(4, 16, 4);

static void BM_BiApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& f = *find_corpus_function("ripple");
  const BiParams params(PQPair(0.95, 0.9), PQPair(0.95, 0.9), n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bi_apply(f.f, params, 0.3, 0.6));
  }
}
BENCHMARK(BM_BiApply)->RangeMultiplier(4)->Range(8, 512);

static void BM_ApplyOnGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& f = *find_corpus_function("quad");
  const BiParams params(PQPair(0.95, 0.9), PQPair(0.95, 0.9), n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_on_grid(f, params, 50));
  }
}
BENCHMARK(BM_ApplyOnGrid)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);
