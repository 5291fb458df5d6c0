#include <benchmark/benchmark.h>

#include "pqb/certify.hpp"
#include "pqb/expr.hpp"
#include "pqb/modulus.hpp"
#include "pqb/voronovskaja.hpp"

using namespace pqb;

static void BM_ModulusProfile(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  const auto& f = *find_corpus_function("vee");
  for (auto _ : state) {
    ModulusProfile profile(f, ModulusKind::Complete, grid, 0.5);
    benchmark::DoNotOptimize(profile.value(0.25));
  }
}
BENCHMARK(BM_ModulusProfile)->RangeMultiplier(2)->Range(25, 200)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sched = ParamSchedule::builtin("i");
  const BiParams params(sched.at(n), sched.at(n), n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_bound(Theorem::CompleteModulus, *find_corpus_function("ripple"), params));
  }
}
BENCHMARK(BM_Certify)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_VoronovskajaTrace(benchmark::State& state) {
  const auto sched = ParamSchedule::builtin("i");
  const std::vector<int> degrees{256, 512, 1024};
  for (auto _ : state) {
    benchmark::DoNotOptimize(voronovskaja_trace(*find_corpus_function("quad"), sched, 0.5, 0.5, degrees));
  }
}
BENCHMARK(BM_VoronovskajaTrace)->Unit(benchmark::kMillisecond);

static void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_expr("sin(pi*x)*cos(2*pi*y) + exp(-abs(x - 0.5)) * max(x, y)^2"));
  }
}
BENCHMARK(BM_Parse);

static void BM_Eval(benchmark::State& state) {
  const Expr e = parse_expr("sin(pi*x)*cos(2*pi*y) + exp(-abs(x - 0.5)) * max(x, y)^2");
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval(x, 0.7));
    x = x < 0.9 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_Eval);
