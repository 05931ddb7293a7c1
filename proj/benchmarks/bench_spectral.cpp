#include <benchmark/benchmark.h>

#include <balword/graphwords.hpp>
#include <balword/monodromy.hpp>
#include <balword/poly.hpp>
#include <balword/transfer.hpp>

using namespace balword;

static void BM_BuildPeriodMatrix(benchmark::State& state) {
  const long long r = state.range(0);
  for (auto _ : state) {
    auto m = transfer::build_M(2, 5, r);
    benchmark::DoNotOptimize(m.a.data());
  }
}
BENCHMARK(BM_BuildPeriodMatrix)->Arg(5)->Arg(20)->Arg(60);

static void BM_PerronRoot(benchmark::State& state) {
  const long long r = state.range(0);
  const auto m = transfer::build_M(1, 2, r);
  for (auto _ : state) {
    auto pr = transfer::perron_root(m);
    benchmark::DoNotOptimize(pr.value);
  }
}
BENCHMARK(BM_PerronRoot)->Arg(5)->Arg(20)->Arg(60);

static void BM_FullSpectrum(benchmark::State& state) {
  const long long r = state.range(0);
  const auto m = transfer::build_M(1, 2, r);
  for (auto _ : state) {
    auto sr = transfer::full_spectrum(m);
    benchmark::DoNotOptimize(sr.pairs.data());
  }
}
BENCHMARK(BM_FullSpectrum)->Arg(5)->Arg(20)->Arg(60);

static void BM_OscillationScan(benchmark::State& state) {
  const long long points = state.range(0);
  const auto m = transfer::build_M(1, 2, 20);
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(points));
  for (long long i = 0; i < points; ++i)
    grid.push_back(1.0 + 2.5 * (static_cast<double>(i) + 0.5) /
                             static_cast<double>(points));
  for (auto _ : state) {
    auto scan = transfer::oscillation_scan(m, grid);
    benchmark::DoNotOptimize(scan.sign_changes);
  }
}
BENCHMARK(BM_OscillationScan)->Arg(100)->Arg(1000)->Arg(2000);

static void BM_ExactDeterminant(benchmark::State& state) {
  const long long r = state.range(0);
  const auto m = transfer::build_M(2, 5, r);
  for (auto _ : state) {
    auto d = transfer::determinant(m);
    benchmark::DoNotOptimize(d.get_mpz_t());
  }
}
BENCHMARK(BM_ExactDeterminant)->Arg(5)->Arg(20);

static void BM_RootSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const poly::PolyInstance f(n, 1, 3.25);
  for (auto _ : state) {
    auto rs = poly::roots(f);
    benchmark::DoNotOptimize(rs.roots.data());
  }
}
BENCHMARK(BM_RootSolve)->Arg(5)->Arg(12)->Arg(24);

static void BM_CriticalLoop(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cl = monodromy::loop_around_critical(n, 1);
    benchmark::DoNotOptimize(cl.perm.map.data());
  }
}
BENCHMARK(BM_CriticalLoop)->Arg(4)->Arg(6)->Arg(8);

static void BM_GaloisClassify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = monodromy::galois_classify(n, 1);
    benchmark::DoNotOptimize(rep.group.order.get_mpz_t());
  }
}
BENCHMARK(BM_GaloisClassify)->Arg(5)->Arg(7);

static void BM_GraphPathCounts(benchmark::State& state) {
  const long long len = state.range(0);
  graphwords::TwoColoredGraph g;
  g.V = 3;
  g.a0.assign(9, 0);
  g.a1.assign(9, 0);
  g.at0(1, 0) = 2;
  g.at1(2, 1) = 1;
  g.at1(0, 2) = 3;
  g.at1(0, 0) = 1;
  g.at0(1, 2) = 1;
  for (auto _ : state) {
    auto t = graphwords::count_balanced_paths(g, len, 1, 2, 4);
    benchmark::DoNotOptimize(t.c.data());
  }
}
BENCHMARK(BM_GraphPathCounts)->Arg(64)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
