#include <benchmark/benchmark.h>

#include "cfps/metrics.hpp"
#include "cfps/neighbor_index.hpp"
#include "cfps/synthetic.hpp"

namespace {

void BM_KnnQuery(benchmark::State& state) {
  const cfps::PointCloud cloud = cfps::gen_sphere(1.0, 8192, 3).cloud;
  const cfps::NeighborIndex index = cfps::build_neighbor_index(cloud);
  const auto k = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(index.knn(cloud.position(i), k));
    i = (i + 1) % cloud.size();
  }
}
BENCHMARK(BM_KnnQuery)->Arg(8)->Arg(16)->Arg(64);

void BM_IndexBuild(benchmark::State& state) {
  const cfps::PointCloud cloud = cfps::gen_sphere(1.0, static_cast<std::size_t>(state.range(0)), 3).cloud;
  for (auto _ : state) benchmark::DoNotOptimize(cfps::build_neighbor_index(cloud));
}
BENCHMARK(BM_IndexBuild)->Range(1024, 16384);

void BM_Chamfer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cfps::PointCloud a = cfps::gen_torus(2.0, 0.5, n, 1).cloud;
  const cfps::PointCloud b = cfps::gen_torus(2.0, 0.5, n / 8, 2).cloud;
  for (auto _ : state) benchmark::DoNotOptimize(cfps::chamfer_distance(a, b));
}
BENCHMARK(BM_Chamfer)->Range(1024, 16384);

}  // namespace
