#include <benchmark/benchmark.h>

#include <balword/words.hpp>

using namespace balword;

static void BM_CountDP(benchmark::State& state) {
  const long long n = state.range(0);
  words::BalanceSpec spec(1, 2, 3);
  for (auto _ : state) {
    auto cv = words::count_balanced_dp(n, spec);
    benchmark::DoNotOptimize(cv.b.data());
  }
}
BENCHMARK(BM_CountDP)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_CountDPWideWindow(benchmark::State& state) {
  const long long r = state.range(0);
  words::BalanceSpec spec(2, 5, r);
  for (auto _ : state) {
    auto cv = words::count_balanced_dp(500, spec);
    benchmark::DoNotOptimize(cv.b.data());
  }
}
BENCHMARK(BM_CountDPWideWindow)->Arg(2)->Arg(8)->Arg(32);

static void BM_Enumerate(benchmark::State& state) {
  const long long n = state.range(0);
  words::BalanceSpec spec(1, 2, 2);
  for (auto _ : state) {
    auto ws = words::enumerate_balanced(n, spec);
    benchmark::DoNotOptimize(ws.data());
  }
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(16)->Arg(20);

static void BM_Reproject(benchmark::State& state) {
  const long long n = state.range(0);
  words::BalanceSpec spec(1, 2, 3);
  words::Word w = words::complete_to_length(words::Word(), spec, n);
  const Rational a(1, 2), ap(3, 5);
  for (auto _ : state) {
    auto out = words::reproject(w, a, ap, 3);
    benchmark::DoNotOptimize(out.letters.data());
  }
}
BENCHMARK(BM_Reproject)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_ContinuityBound(benchmark::State& state) {
  const long long n = state.range(0);
  const Rational a(1, 2), ap(3, 5);
  for (auto _ : state) {
    auto k = words::continuity_bound(n, a, ap, 3);
    benchmark::DoNotOptimize(k.get_mpz_t());
  }
}
BENCHMARK(BM_ContinuityBound)->Arg(40)->Arg(400);

BENCHMARK_MAIN();
