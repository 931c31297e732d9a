#include <benchmark/benchmark.h>

#include <tuple>

#include "rootforge/rootforge.hpp"

using namespace rootforge;

namespace {

IntPoly2 term_sum(std::initializer_list<std::tuple<long, int, int>> terms) {
  IntPoly2 f;
  for (auto [a, i, j] : terms) f.add_term(BigInt(a), i, j);
  return f;
}

void BM_TopologyCircle(benchmark::State& st) {
  IntPoly2 f = term_sum({{1, 2, 0}, {1, 0, 2}, {-1, 0, 0}});
  for (auto _ : st) benchmark::DoNotOptimize(compute_topology(f));
}
BENCHMARK(BM_TopologyCircle)->Unit(benchmark::kMillisecond);

void BM_TopologyNodalCubic(benchmark::State& st) {
  IntPoly2 f = term_sum({{1, 0, 2}, {-1, 3, 0}, {-1, 2, 0}});
  for (auto _ : st) benchmark::DoNotOptimize(compute_topology(f));
}
BENCHMARK(BM_TopologyNodalCubic)->Unit(benchmark::kMillisecond);

void BM_SolveSystem(benchmark::State& st) {
  IntPoly2 g = term_sum({{1, 2, 0}, {1, 0, 2}, {-4, 0, 0}});
  IntPoly2 h = term_sum({{1, 3, 0}, {-1, 0, 1}, {-1, 0, 0}});
  for (auto _ : st) benchmark::DoNotOptimize(solve_system(g, h));
}
BENCHMARK(BM_SolveSystem)->Unit(benchmark::kMillisecond);

}  // namespace
