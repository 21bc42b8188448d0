#include "cfps/fps.hpp"

#include <limits>
#include <string>

#include "cfps/error.hpp"

namespace cfps {

FpsRanking fps_full_ranking(const PointCloud& cloud, std::size_t seed_index) {
  const std::size_t n = cloud.size();
  if (seed_index >= n)
    throw PreconditionError("seed index " + std::to_string(seed_index) + " out of range for N=" +
                            std::to_string(n));

  const auto pts = cloud.positions();
  FpsRanking ranking;
  ranking.seed_index = seed_index;
  ranking.order.reserve(n);
  ranking.rank_of.assign(n, 0);

  std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
  std::vector<bool> taken(n, false);

  std::size_t current = seed_index;
  for (std::size_t step = 0; step < n; ++step) {
    ranking.order.push_back(current);
    ranking.rank_of[current] = step;
    taken[current] = true;
    if (step + 1 == n) break;

    const Vec3& c = pts[current];
    std::size_t best = n;
    double best_d2 = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j]) continue;
      const double d2 = (pts[j] - c).squaredNorm();
      if (d2 < min_d2[j]) min_d2[j] = d2;
      // Strict '>' with ascending j keeps the lowest index on ties.
      if (min_d2[j] > best_d2) {
        best_d2 = min_d2[j];
        best = j;
      }
    }
    current = best;
  }
  ranking.soft_rank = soft_rank_from_ranks(ranking.rank_of);
  return ranking;
}

SampleSelection fps_select(const FpsRanking& ranking, std::size_t k) {
  const std::size_t n = ranking.size();
  if (k < 1 || k > n)
    throw PreconditionError("fps_select needs 1 <= k <= N (k=" + std::to_string(k) +
                            ", N=" + std::to_string(n) + ")");
  return SampleSelection({ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(k)}, n);
}

std::vector<double> soft_rank(const FpsRanking& ranking) { return ranking.soft_rank; }

std::vector<double> soft_rank_from_ranks(const std::vector<std::size_t>& rank_of) {
  const std::size_t n = rank_of.size();
  std::vector<double> s(n, 0.0);
  if (n <= 1) return s;
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<double>(rank_of[i]) / denom;
  return s;
}

}  // namespace cfps
