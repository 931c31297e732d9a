#include <benchmark/benchmark.h>

#include "rootforge/rootforge.hpp"

using namespace rootforge;

namespace {

// prod (x - i) for i = 1..n, with every third root doubled
IntPoly wilkinson_like(int n) {
  IntPoly p{1};
  for (int i = 1; i <= n; ++i) {
    p = p * IntPoly{-i, 1};
    if (i % 3 == 0) p = p * IntPoly{-i, 1};
  }
  return p;
}

IntPoly mignotte(int n, int tau) {
  IntPoly lin{-1, 1L << tau};
  return IntPoly::monomial(1, n) - IntPoly{2} * lin * lin;
}

void BM_IsolateInteger(benchmark::State& st) {
  IntPoly p = wilkinson_like(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(isolate_integer(p));
}
BENCHMARK(BM_IsolateInteger)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_IsolateMignotte(benchmark::State& st) {
  IntPoly p = mignotte(static_cast<int>(st.range(0)), 14);
  for (auto _ : st) benchmark::DoNotOptimize(isolate_integer(p));
}
BENCHMARK(BM_IsolateMignotte)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Refine(benchmark::State& st) {
  IntPoly p = IntPoly{-2, 0, 1} * IntPoly{3, 0, 1} * IntPoly{-5, 1};
  RootResult r = isolate_integer(p);
  for (auto _ : st) benchmark::DoNotOptimize(refine_integer(p, r, st.range(0)));
}
BENCHMARK(BM_Refine)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& st) {
  auto h = OracleHandle::from_integer(wilkinson_like(16));
  int64_t gamma = compute_gamma(h).Gamma;
  for (auto _ : st) benchmark::DoNotOptimize(factorize(h, st.range(0), gamma));
}
BENCHMARK(BM_Factorize)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
