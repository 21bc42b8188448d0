#include "cfps/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "cfps/error.hpp"

namespace cfps {

std::pair<Vec3, Vec3> tangent_frame(const Vec3& n) {
  Eigen::Index axis = 0;
  n.cwiseAbs().minCoeff(&axis);
  const Vec3 e = Vec3::Unit(axis);
  const Vec3 u = (e - n.dot(e) * n).normalized();
  const Vec3 v = n.cross(u);
  return {u, v};
}

double monge_mean_curvature(double f_uu, double f_uv, double f_vv, double f_u, double f_v) {
  const double grad2 = 1.0 + f_u * f_u + f_v * f_v;
  return ((1.0 + f_v * f_v) * f_uu - 2.0 * f_u * f_v * f_uv + (1.0 + f_u * f_u) * f_vv) /
         (2.0 * grad2 * std::sqrt(grad2));
}

NormalField estimate_normals(const PointCloud& cloud, const NeighborIndex& index, std::size_t k) {
  const std::size_t n = cloud.size();
  if (k < 4 || k > n)
    throw PreconditionError("normal estimation needs 4 <= k <= N (k=" + std::to_string(k) +
                            ", N=" + std::to_string(n) + ")");
  if (index.size() != n) throw PreconditionError("neighbor index built over a different cloud");

  NormalField field;
  field.k_used = k;
  field.normals.resize(n);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver;

  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& p = cloud.position(i);
    const auto nbrs = index.knn(p, k);

    Vec3 centroid = Vec3::Zero();
    for (const auto& nb : nbrs) centroid += cloud.position(nb.index);
    centroid /= static_cast<double>(nbrs.size());

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (const auto& nb : nbrs) {
      const Vec3 d = cloud.position(nb.index) - centroid;
      cov.noalias() += d * d.transpose();
    }
    if (!(cov.trace() > 0.0))
      throw NumericalError("degenerate neighborhood at point " + std::to_string(i) +
                           ": all neighbors coincide");

    solver.computeDirect(cov);
    Vec3 normal = solver.eigenvectors().col(0).normalized();
    if (normal.dot(p - centroid) < 0.0) normal = -normal;
    field.normals[i] = normal;
  }
  return field;
}

CurvatureField estimate_mean_curvature(const PointCloud& cloud, const NormalField& normals,
                                       const NeighborIndex& index, std::size_t k) {
  const std::size_t n = cloud.size();
  if (k < 6 || k > n)
    throw PreconditionError("curvature estimation needs 6 <= k <= N (k=" + std::to_string(k) +
                            ", N=" + std::to_string(n) + ")");
  if (normals.normals.size() != n) throw PreconditionError("normal field size does not match cloud");
  if (index.size() != n) throw PreconditionError("neighbor index built over a different cloud");

  CurvatureField field;
  field.k_used = k;
  field.h_raw.assign(n, 0.0);
  field.degenerate.assign(n, 0);

  Eigen::Matrix<double, Eigen::Dynamic, 5> design(k, 5);
  Eigen::VectorXd height(k);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& p = cloud.position(i);
    const Vec3& nrm = normals.normals[i];
    const auto [u, v] = tangent_frame(nrm);
    const auto nbrs = index.knn(p, k);

    for (std::size_t r = 0; r < nbrs.size(); ++r) {
      const auto row = static_cast<Eigen::Index>(r);
      const Vec3 d = cloud.position(nbrs[r].index) - p;
      const double x = d.dot(u), y = d.dot(v);
      design.row(row) << x * x, x * y, y * y, x, y;
      height(row) = d.dot(nrm);
    }

    Eigen::ColPivHouseholderQR<Eigen::Matrix<double, Eigen::Dynamic, 5>> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < 5) {
      field.degenerate[i] = 1;
      continue;
    }
    const Eigen::Matrix<double, 5, 1> coef = qr.solve(height);
    const double h = monge_mean_curvature(2.0 * coef[0], coef[1], 2.0 * coef[2], coef[3], coef[4]);
    if (!std::isfinite(h)) {
      field.degenerate[i] = 1;
      continue;
    }
    field.h_raw[i] = std::abs(h);
  }
  return normalize_curvature(std::move(field));
}

CurvatureField normalize_curvature(CurvatureField field) {
  const auto& h = field.h_raw;
  field.h_norm.assign(h.size(), 0.0);
  if (h.empty()) return field;
  const auto [lo, hi] = std::minmax_element(h.begin(), h.end());
  const double range = *hi - *lo;
  if (range > 0.0) {
    for (std::size_t i = 0; i < h.size(); ++i) field.h_norm[i] = (h[i] - *lo) / range;
  }
  return field;
}

CurvatureField estimate_curvature(const PointCloud& cloud, std::size_t k) {
  const NeighborIndex index = build_neighbor_index(cloud);
  const NormalField normals = estimate_normals(cloud, index, k);
  return estimate_mean_curvature(cloud, normals, index, k);
}

}  // namespace cfps
