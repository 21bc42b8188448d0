#pragma once

#include <cstddef>
#include <vector>

#include "cfps/point_cloud.hpp"

namespace cfps {

/// Full furthest-point entry order over all N points.
struct FpsRanking {
  std::vector<std::size_t> order;    // order[r] = point entering at step r
  std::vector<std::size_t> rank_of;  // inverse of order
  std::vector<double> soft_rank;     // rank_of[i] / (N - 1), 0 when N == 1
  std::size_t seed_index = 0;

  std::size_t size() const noexcept { return order.size(); }
};

/// Greedy furthest point sampling run to completion. Each step picks the
/// unselected point with the largest squared distance to the selected set;
/// ties go to the lowest index. O(N^2).
FpsRanking fps_full_ranking(const PointCloud& cloud, std::size_t seed_index = 0);

/// The first k entrants. Requires 1 <= k <= N.
SampleSelection fps_select(const FpsRanking& ranking, std::size_t k);

std::vector<double> soft_rank(const FpsRanking& ranking);

/// Soft rank from an entry-rank vector: rank_of[i] / (N - 1).
std::vector<double> soft_rank_from_ranks(const std::vector<std::size_t>& rank_of);

}  // namespace cfps
