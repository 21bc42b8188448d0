#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cfps/neighbor_index.hpp"
#include "cfps/point_cloud.hpp"

namespace cfps {

inline constexpr std::size_t kDefaultNeighbors = 16;

struct NormalField {
  std::vector<Vec3> normals;  // unit length
  std::size_t k_used = 0;
};

/// Per-point mean-curvature magnitude |H| (1/length) and its per-cloud
/// min-max normalization to [0, 1].
struct CurvatureField {
  std::vector<double> h_raw;
  std::vector<double> h_norm;
  /// 1 where the quadric fit was rank deficient and h_raw was set to 0.
  std::vector<std::uint8_t> degenerate;
  std::size_t k_used = 0;

  std::size_t size() const noexcept { return h_raw.size(); }
};

/// PCA normals: smallest-eigenvalue eigenvector of each k-neighborhood's
/// covariance, oriented away from the neighborhood centroid.
/// Requires 4 <= k <= N. Throws NumericalError naming the point when a
/// neighborhood is fully coincident.
NormalField estimate_normals(const PointCloud& cloud, const NeighborIndex& index,
                             std::size_t k = kDefaultNeighbors);

/// Least-squares fit of the height field w = a u^2 + b uv + c v^2 + d u + e v
/// over the k neighbors, expressed in the tangent frame (u, v, n) of each
/// point; h_raw = |H| of that Monge patch at the origin (a + c when the
/// fitted gradient d, e vanishes). The linear terms absorb the tilt of the
/// PCA normal. Requires 6 <= k <= N. Rank-deficient fits give h_raw = 0 and
/// set `degenerate`. The returned field is already normalized.
CurvatureField estimate_mean_curvature(const PointCloud& cloud, const NormalField& normals,
                                       const NeighborIndex& index,
                                       std::size_t k = kDefaultNeighbors);

/// Mean curvature of a height field z = f(u, v) from its partial derivatives.
double monge_mean_curvature(double f_uu, double f_uv, double f_vv, double f_u, double f_v);

/// h_norm = (h_raw - min) / (max - min), or all zeros when h_raw is constant.
CurvatureField normalize_curvature(CurvatureField field);

/// Builds the index and runs normals + curvature with the same k.
CurvatureField estimate_curvature(const PointCloud& cloud, std::size_t k = kDefaultNeighbors);

/// Orthonormal (u, v) completing n to a right-handed frame. u is the
/// projection of the world axis least aligned with n.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& n);

}  // namespace cfps
