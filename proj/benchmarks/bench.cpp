#include <benchmark/benchmark.h>

#include <cmath>

#include "xpk/extraction.hpp"
#include "xpk/minors.hpp"
#include "xpk/random.hpp"
#include "xpk/sparsity.hpp"
#include "xpk/spectral.hpp"

namespace {

xpk::Graph giant_like(std::size_t n) { return xpk::gnp({n, 4.0 / double(n), 11}); }

void BM_Gnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(xpk::gnp({n, 2.0 / double(n), seed++}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gnp)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

void BM_Lambda1(benchmark::State& state) {
  xpk::Graph g = xpk::make::grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xpk::lambda1(g).lambda1);
}
BENCHMARK(BM_Lambda1)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Extract(benchmark::State& state) {
  xpk::Graph g = giant_like(static_cast<std::size_t>(state.range(0)));
  const double c1 = std::floor(g.density_value() * 1000) / 1000;
  const xpk::ExtractionParams p{c1, 1 + (c1 - 1) / 2, 0.1, g.max_degree()};
  for (auto _ : state) benchmark::DoNotOptimize(xpk::extract_expander(g, p));
}
BENCHMARK(BM_Extract)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TouchBound(benchmark::State& state) {
  xpk::Graph g = xpk::gnp({static_cast<std::size_t>(state.range(0)), 2.0 / double(state.range(0)), 3});
  const std::size_t m = g.num_vertices() / 500;
  for (auto _ : state) benchmark::DoNotOptimize(xpk::touch_bound_verdict(g, m, 10 * m));
}
BENCHMARK(BM_TouchBound)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_LocalSparsity(benchmark::State& state) {
  xpk::Graph g = xpk::gnp({static_cast<std::size_t>(state.range(0)), 2.0 / double(state.range(0)), 5});
  for (auto _ : state) benchmark::DoNotOptimize(xpk::local_sparsity_verdict(g, 1.5, 0.003375));
}
BENCHMARK(BM_LocalSparsity)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GreedyMinor(benchmark::State& state) {
  xpk::Graph g = xpk::make::grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xpk::clique_minor_greedy(g, 1, 10).order());
}
BENCHMARK(BM_GreedyMinor)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExactMinor(benchmark::State& state) {
  xpk::Graph g = xpk::make::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(xpk::max_clique_minor_exact(g).order());
}
BENCHMARK(BM_ExactMinor)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
