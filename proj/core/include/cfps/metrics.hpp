#pragma once

#include <optional>

#include "cfps/curvature.hpp"
#include "cfps/neighbor_index.hpp"
#include "cfps/point_cloud.hpp"

namespace cfps {

/// Bi-directional Chamfer distance with squared nearest-neighbor distances,
/// each direction mean-reduced, directions summed.
double chamfer_distance(const PointCloud& a, const PointCloud& b);

struct F1Result {
  double f1;
  double precision;
  double recall;
};

/// Precision: share of pred points whose nearest gt point is within
/// `threshold`. Recall: the converse. Requires threshold > 0.
F1Result f1_score(const PointCloud& pred, const PointCloud& gt, double threshold);

/// 1% of the ground-truth bounding-box diagonal.
double default_f1_threshold(const PointCloud& gt);

/// Mean h_raw over `sel` divided by the mean of the sel.size() largest
/// h_raw values, clipped to [0, 1]. A zero denominator (flat cloud) gives 1.
double curvature_retention(const CurvatureField& curv, const SampleSelection& sel);

struct MetricReport {
  double chamfer;
  double f1;
  double precision;
  double recall;
  double threshold;
  std::optional<double> curvature_retention;
};

}  // namespace cfps
