#include "cfps/reward.hpp"

#include "cfps/error.hpp"
#include "cfps/metrics.hpp"

namespace cfps {

double surrogate_reward(const PointCloud& cloud, const CfpsResult& result, const CurvatureField& curv,
                        double w) {
  if (!(w >= 0.0)) throw PreconditionError("reward weight must be >= 0");
  const double chamfer = chamfer_distance(gather(cloud, result.selection), cloud);
  const double retention = curvature_retention(curv, result.selection);
  return -(chamfer + w * (1.0 - retention));
}

SamplingReward make_surrogate_reward(double w) {
  if (!(w >= 0.0)) throw PreconditionError("reward weight must be >= 0");
  return [w](const PointCloud& cloud, const CfpsResult& result, const CurvatureField& curv) {
    return surrogate_reward(cloud, result, curv, w);
  };
}

}  // namespace cfps
