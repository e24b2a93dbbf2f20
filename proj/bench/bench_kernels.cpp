// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "xist/ingest.hpp"
#include "xist/oracle.hpp"
#include "xist/xist.hpp"

namespace {

xist::WeightedGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  xist::oracle::RandomGraphSpec spec;
  spec.n = n;
  spec.edge_probability = p;
  return xist::oracle::random_connected_graph(spec, rng);
}

void BM_XvstParallel(benchmark::State &state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(xist::xvst_basic(g, xist::CutKind::NCut));
}
void BM_XvstSerial(benchmark::State &state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(xist::xvst_basic_serial(g, xist::CutKind::NCut));
}
BENCHMARK(BM_XvstParallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XvstSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_ExactParallel(benchmark::State &state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(xist::oracle::exact_xcut(g, xist::CutKind::NCut));
}
void BM_ExactSerial(benchmark::State &state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(xist::oracle::exact_xcut_serial(g, xist::CutKind::NCut));
}
BENCHMARK(BM_ExactParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_KnnParallel(benchmark::State &state) {
  const auto pts = xist::ingest::sample_gaussian_mixture(
      static_cast<std::size_t>(state.range(0)), 2.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(xist::ingest::knn_eps_graph(pts.points));
}
void BM_KnnSerial(benchmark::State &state) {
  const auto pts = xist::ingest::sample_gaussian_mixture(
      static_cast<std::size_t>(state.range(0)), 2.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(xist::ingest::knn_eps_graph_serial(pts.points));
}
BENCHMARK(BM_KnnParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KnnSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
