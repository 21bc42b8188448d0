#include "cfps/cfps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfps/error.hpp"

namespace cfps {

CombineMode parse_combine_mode(std::string_view name) {
  if (name == "additive") return CombineMode::Additive;
  if (name == "multiplicative") return CombineMode::Multiplicative;
  throw PreconditionError("unknown combine mode '" + std::string(name) +
                          "' (expected additive|multiplicative)");
}

const char* to_string(CombineMode mode) {
  return mode == CombineMode::Additive ? "additive" : "multiplicative";
}

JointRank joint_rank(const CurvatureField& curv, const FpsRanking& ranking, CombineMode mode) {
  const std::size_t n = ranking.soft_rank.size();
  if (curv.h_norm.size() != n)
    throw PreconditionError("curvature field has " + std::to_string(curv.h_norm.size()) +
                            " points but ranking has " + std::to_string(n));
  JointRank out;
  out.mode = mode;
  out.j.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.j[i] = mode == CombineMode::Additive ? curv.h_norm[i] + ranking.soft_rank[i]
                                             : curv.h_norm[i] * ranking.soft_rank[i];
  }
  return out;
}

std::size_t exchange_count(double g, std::size_t n, std::size_t k) {
  if (!(g >= 0.0 && g <= 1.0))
    throw PreconditionError("exchange ratio must lie in [0, 1], got " + std::to_string(g));
  if (k < 1 || k > n)
    throw PreconditionError("core size must satisfy 1 <= k <= N (k=" + std::to_string(k) +
                            ", N=" + std::to_string(n) + ")");
  const auto raw = static_cast<std::size_t>(std::floor(g * static_cast<double>(n)));
  return std::min({raw, k, n - k});
}

CfpsResult cfps_from_ranking(const FpsRanking& ranking, const CurvatureField& curv, std::size_t k,
                             double g, CombineMode mode) {
  const std::size_t n = ranking.size();
  const std::size_t n_exchange = exchange_count(g, n, k);
  const JointRank jr = joint_rank(curv, ranking, mode);
  const auto& j = jr.j;

  std::vector<std::size_t> core(ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::size_t> rest(ranking.order.begin() + static_cast<std::ptrdiff_t>(k), ranking.order.end());

  auto lowest_first = [&](std::size_t a, std::size_t b) {
    return j[a] < j[b] || (j[a] == j[b] && a < b);
  };
  auto highest_first = [&](std::size_t a, std::size_t b) {
    return j[a] > j[b] || (j[a] == j[b] && a < b);
  };
  const auto cut = static_cast<std::ptrdiff_t>(n_exchange);
  std::partial_sort(core.begin(), core.begin() + cut, core.end(), lowest_first);
  std::partial_sort(rest.begin(), rest.begin() + cut, rest.end(), highest_first);

  CfpsResult result{SampleSelection({}, n), {}, {}, g, n_exchange};
  result.swapped_out.assign(core.begin(), core.begin() + cut);
  result.swapped_in.assign(rest.begin(), rest.begin() + cut);

  std::vector<bool> removed(n, false);
  for (std::size_t idx : result.swapped_out) removed[idx] = true;
  std::vector<std::size_t> selection;
  selection.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t idx = ranking.order[r];
    if (!removed[idx]) selection.push_back(idx);
  }
  selection.insert(selection.end(), result.swapped_in.begin(), result.swapped_in.end());
  result.selection = SampleSelection(std::move(selection), n);
  return result;
}

CfpsResult cfps_sample(const PointCloud& cloud, const CurvatureField& curv, std::size_t k, double g,
                       CombineMode mode, std::size_t seed_index) {
  if (curv.size() != cloud.size())
    throw PreconditionError("curvature field does not match cloud size");
  if (k < 1 || k > cloud.size())
    throw PreconditionError("cfps needs 1 <= k <= N (k=" + std::to_string(k) + ", N=" +
                            std::to_string(cloud.size()) + ")");
  return cfps_from_ranking(fps_full_ranking(cloud, seed_index), curv, k, g, mode);
}

}  // namespace cfps
