#pragma once

#include <functional>

#include "cfps/cfps.hpp"
#include "cfps/curvature.hpp"
#include "cfps/point_cloud.hpp"

namespace cfps {

/// Scores one CFPS outcome on one cloud; higher is better. The learner only
/// sees this value, so any downstream loss can be plugged in as -loss.
using SamplingReward =
    std::function<double(const PointCloud& cloud, const CfpsResult& result, const CurvatureField& curv)>;

inline constexpr double kDefaultRewardWeight = 0.5;

/// -[chamfer(selected, cloud) + w * (1 - curvature_retention)]
double surrogate_reward(const PointCloud& cloud, const CfpsResult& result, const CurvatureField& curv,
                        double w = kDefaultRewardWeight);

SamplingReward make_surrogate_reward(double w = kDefaultRewardWeight);

}  // namespace cfps
