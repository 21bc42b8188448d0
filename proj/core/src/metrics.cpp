#include "cfps/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cfps/error.hpp"

namespace cfps {
namespace {

// Mean over `from` of the squared distance to the nearest point of `to`.
double mean_nearest_d2(const PointCloud& from, const NeighborIndex& to) {
  double sum = 0.0;
  for (const Vec3& p : from.positions()) sum += to.nearest(p).dist2;
  return sum / static_cast<double>(from.size());
}

double share_within(const PointCloud& from, const NeighborIndex& to, double threshold) {
  std::size_t hits = 0;
  for (const Vec3& p : from.positions())
    if (std::sqrt(to.nearest(p).dist2) <= threshold) ++hits;
  return static_cast<double>(hits) / static_cast<double>(from.size());
}

}  // namespace

double chamfer_distance(const PointCloud& a, const PointCloud& b) {
  const NeighborIndex ia = build_neighbor_index(a);
  const NeighborIndex ib = build_neighbor_index(b);
  return mean_nearest_d2(a, ib) + mean_nearest_d2(b, ia);
}

F1Result f1_score(const PointCloud& pred, const PointCloud& gt, double threshold) {
  if (!(threshold > 0.0)) throw PreconditionError("F1 threshold must be > 0");
  const NeighborIndex ip = build_neighbor_index(pred);
  const NeighborIndex ig = build_neighbor_index(gt);
  F1Result r{0.0, share_within(pred, ig, threshold), share_within(gt, ip, threshold)};
  const double denom = r.precision + r.recall;
  if (denom > 0.0) r.f1 = 2.0 * r.precision * r.recall / denom;
  return r;
}

double default_f1_threshold(const PointCloud& gt) { return 0.01 * bounding_box_diagonal(gt); }

double curvature_retention(const CurvatureField& curv, const SampleSelection& sel) {
  if (sel.parent_n() != curv.size())
    throw PreconditionError("selection parent size " + std::to_string(sel.parent_n()) +
                            " does not match curvature field size " + std::to_string(curv.size()));
  const std::size_t k = sel.size();
  if (k == 0) throw PreconditionError("curvature retention of an empty selection");

  double selected = 0.0;
  for (std::size_t idx : sel.indices()) selected += curv.h_raw[idx];

  std::vector<double> sorted = curv.h_raw;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1), sorted.end(),
                   std::greater<>());
  double best = 0.0;
  for (std::size_t i = 0; i < k; ++i) best += sorted[i];

  if (!(best > 0.0)) return 1.0;
  return std::clamp(selected / best, 0.0, 1.0);
}

}  // namespace cfps
