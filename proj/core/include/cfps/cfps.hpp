#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cfps/curvature.hpp"
#include "cfps/fps.hpp"
#include "cfps/point_cloud.hpp"

namespace cfps {

enum class CombineMode { Additive, Multiplicative };

CombineMode parse_combine_mode(std::string_view name);
const char* to_string(CombineMode mode);

struct JointRank {
  std::vector<double> j;
  CombineMode mode = CombineMode::Additive;
};

/// Per-point h_norm + soft_rank (additive) or h_norm * soft_rank.
JointRank joint_rank(const CurvatureField& curv, const FpsRanking& ranking,
                     CombineMode mode = CombineMode::Additive);

/// min(floor(g * n), k, n - k). Requires 0 <= g <= 1 and 1 <= k <= n.
std::size_t exchange_count(double g, std::size_t n, std::size_t k);

struct CfpsResult {
  SampleSelection selection;
  std::vector<std::size_t> swapped_out;  // lowest-J core points, ascending J
  std::vector<std::size_t> swapped_in;   // highest-J non-core points, descending J
  double g_used = 0.0;
  std::size_t n_exchange = 0;
};

/// Core/non-core swap on a precomputed ranking. The selection lists the
/// surviving core points in FPS entry order, then swapped_in by descending
/// J. All J ties break by ascending point index.
CfpsResult cfps_from_ranking(const FpsRanking& ranking, const CurvatureField& curv, std::size_t k,
                             double g, CombineMode mode = CombineMode::Additive);

/// Full curvature-informed FPS: ranks the cloud, then swaps.
CfpsResult cfps_sample(const PointCloud& cloud, const CurvatureField& curv, std::size_t k, double g,
                       CombineMode mode = CombineMode::Additive, std::size_t seed_index = 0);

}  // namespace cfps
