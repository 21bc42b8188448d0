#include <benchmark/benchmark.h>

#include "cfps/cfps.hpp"
#include "cfps/curvature.hpp"
#include "cfps/fps.hpp"
#include "cfps/synthetic.hpp"

namespace {

cfps::PointCloud torus(std::size_t n) { return cfps::gen_torus(2.0, 0.5, n, 7).cloud; }

void BM_FpsFullRanking(benchmark::State& state) {
  const cfps::PointCloud cloud = torus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfps::fps_full_ranking(cloud));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FpsFullRanking)->RangeMultiplier(2)->Range(512, 8192)->Complexity(benchmark::oNSquared);

void BM_CurvatureEstimate(benchmark::State& state) {
  const cfps::PointCloud cloud = torus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfps::estimate_curvature(cloud));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CurvatureEstimate)->RangeMultiplier(2)->Range(512, 8192)->Complexity();

// Exchange step only, ranking and curvature precomputed.
void BM_CfpsFromRanking(benchmark::State& state) {
  const cfps::PointCloud cloud = torus(4096);
  const cfps::CurvatureField curv = cfps::estimate_curvature(cloud);
  const cfps::FpsRanking ranking = cfps::fps_full_ranking(cloud);
  const double g = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(cfps::cfps_from_ranking(ranking, curv, 512, g));
}
BENCHMARK(BM_CfpsFromRanking)->Arg(0)->Arg(10)->Arg(30)->Arg(100);

}  // namespace
