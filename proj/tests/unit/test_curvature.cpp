#include <gtest/gtest.h>

#include <array>
#include <numbers>
#include <set>

#include "cfps/curvature.hpp"
#include "cfps/error.hpp"
#include "cfps/synthetic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cfps;

namespace {

std::vector<double> relative_errors(const std::vector<double>& h, double truth) {
  std::vector<double> e;
  for (double v : h) e.push_back(std::abs(v - truth) / truth);
  return e;
}

// Plane points far enough from the boundary that their 16 neighbors
// surround them.
std::vector<std::size_t> interior(const PointCloud& c, double half_side) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (std::abs(c.position(i).x()) < half_side && std::abs(c.position(i).y()) < half_side) out.push_back(i);
  return out;
}

}  // namespace

TEST(Normals, SphereAngularError) {
  const AnalyticCloud s = gen_sphere(1.0, 2048, 11);
  const NeighborIndex idx = build_neighbor_index(s.cloud);
  const NormalField nf = estimate_normals(s.cloud, idx, 16);
  std::size_t good = 0;
  for (std::size_t i = 0; i < s.cloud.size(); ++i) {
    EXPECT_NEAR(nf.normals[i].norm(), 1.0, 1e-6);
    const double c = std::clamp(nf.normals[i].dot(s.cloud.normals()[i]), -1.0, 1.0);
    if (std::acos(c) < 5.0 * std::numbers::pi / 180.0) ++good;
  }
  EXPECT_GE(good, std::size_t(0.95 * 2048));
}

TEST(Normals, PlaneIsVertical) {
  const AnalyticCloud p = gen_plane(2.0, 400, 3);
  const NormalField nf = estimate_normals(p.cloud, build_neighbor_index(p.cloud), 16);
  for (const Vec3& n : nf.normals) EXPECT_NEAR(std::abs(n.z()), 1.0, 1e-6);
}

TEST(Normals, Preconditions) {
  const PointCloud c = test::random_cloud(10, 1);
  const NeighborIndex idx = build_neighbor_index(c);
  EXPECT_THROW(estimate_normals(c, idx, 2), PreconditionError);
  EXPECT_THROW(estimate_normals(c, idx, 11), PreconditionError);
}

TEST(Normals, CoincidentNeighborhoodNamesPoint) {
  std::vector<Vec3> pts(6, Vec3(1, 2, 3));
  pts.emplace_back(10, 0, 0);
  const PointCloud c(pts);
  try {
    estimate_normals(c, build_neighbor_index(c), 4);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("point 0"), std::string::npos) << e.what();
  }
}

TEST(Curvature, SphereMedianError) {
  const AnalyticCloud s = gen_sphere(1.0, 2048, 5);
  const CurvatureField f = estimate_curvature(s.cloud, 16);
  EXPECT_LT(oracle::median(relative_errors(f.h_raw, 1.0)), 0.05);
}

TEST(Curvature, CylinderMedianError) {
  const AnalyticCloud cyl = gen_cylinder(1.0, 4.0, 2048, 5);
  const CurvatureField f = estimate_curvature(cyl.cloud, 16);
  std::vector<double> inner;
  for (std::size_t i = 0; i < cyl.cloud.size(); ++i)
    if (std::abs(cyl.cloud.position(i).z()) < 1.5) inner.push_back(f.h_raw[i]);
  EXPECT_LT(oracle::median(relative_errors(inner, 0.5)), 0.10);
}

TEST(Curvature, PlaneIsFlat) {
  const AnalyticCloud p = gen_plane(2.0, 1024, 5, 0.01);
  const CurvatureField f = estimate_curvature(p.cloud, 16);
  for (std::size_t i : interior(p.cloud, 0.8)) EXPECT_LT(f.h_raw[i], 1e-6);
}

TEST(Curvature, TorusRankCorrelation) {
  const AnalyticCloud t = gen_torus(2.0, 0.5, 2048, 5);
  const CurvatureField f = estimate_curvature(t.cloud, 16);
  EXPECT_GT(oracle::spearman(f.h_raw, t.h_true), 0.9);
}

TEST(Curvature, ScalesInverselyWithSize) {
  const AnalyticCloud s = gen_sphere(1.0, 2048, 8);
  std::vector<Vec3> scaled;
  for (const Vec3& p : s.cloud.positions()) scaled.push_back(3.0 * p);
  const CurvatureField a = estimate_curvature(s.cloud, 16);
  const CurvatureField b = estimate_curvature(PointCloud(scaled), 16);
  std::vector<double> rel;
  for (std::size_t i = 0; i < a.size(); ++i) rel.push_back(std::abs(3.0 * b.h_raw[i] - a.h_raw[i]) / a.h_raw[i]);
  EXPECT_LT(oracle::median(rel), 0.01);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a.h_norm[i], b.h_norm[i], 0.01);
}

TEST(Curvature, FieldInvariants) {
  const AnalyticCloud t = gen_torus(2.0, 0.5, 1024, 9);
  const CurvatureField f = estimate_curvature(t.cloud, 16);
  EXPECT_EQ(f.k_used, 16u);
  for (double h : f.h_raw) {
    EXPECT_TRUE(std::isfinite(h));
    EXPECT_GE(h, 0.0);
  }
  EXPECT_EQ(*std::min_element(f.h_norm.begin(), f.h_norm.end()), 0.0);
  EXPECT_EQ(*std::max_element(f.h_norm.begin(), f.h_norm.end()), 1.0);
  // Normalization is monotone.
  for (std::size_t i = 1; i < f.size(); ++i)
    EXPECT_EQ(f.h_raw[i - 1] < f.h_raw[i], f.h_norm[i - 1] < f.h_norm[i]);
}

TEST(Curvature, Preconditions) {
  const PointCloud c = test::random_cloud(20, 4);
  EXPECT_THROW(estimate_curvature(c, 5), PreconditionError);
  EXPECT_THROW(estimate_curvature(c, 21), PreconditionError);
}

TEST(Curvature, RankDeficientFitIsFlaggedNotFatal) {
  // Collinear neighbors span a single tangent direction.
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) pts.emplace_back(i, 0.0, 0.001 * (i % 2));
  const PointCloud c(pts);
  const NeighborIndex idx = build_neighbor_index(c);
  const NormalField nf = estimate_normals(c, idx, 8);
  const CurvatureField f = estimate_mean_curvature(c, nf, idx, 8);
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(f.degenerate[i], 1);
    EXPECT_EQ(f.h_raw[i], 0.0);
  }
}

TEST(NormalizeCurvature, Examples) {
  CurvatureField f;
  f.h_raw = {0, 1, 2};
  EXPECT_EQ(normalize_curvature(f).h_norm, (std::vector<double>{0, 0.5, 1}));
  f.h_raw = {3, 3};
  EXPECT_EQ(normalize_curvature(f).h_norm, (std::vector<double>{0, 0}));
  f.h_raw = {5};
  EXPECT_EQ(normalize_curvature(f).h_norm, (std::vector<double>{0}));
}

TEST(MongeCurvature, ReducesToTraceWithoutGradient) {
  EXPECT_DOUBLE_EQ(monge_mean_curvature(2.0, 0.3, 4.0, 0.0, 0.0), 3.0);
  // Tilted plane: zero curvature regardless of slope.
  EXPECT_DOUBLE_EQ(monge_mean_curvature(0.0, 0.0, 0.0, 0.7, -0.2), 0.0);
}

TEST(TangentFrame, Orthonormal) {
  for (const Vec3& n : {Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(1, 1, 1).normalized(), Vec3(-0.2, 0.9, 0.1).normalized()}) {
    const auto [u, v] = tangent_frame(n);
    EXPECT_NEAR(u.norm(), 1.0, 1e-12);
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    EXPECT_NEAR(u.dot(n), 0.0, 1e-12);
    EXPECT_NEAR(v.dot(n), 0.0, 1e-12);
    EXPECT_NEAR(u.dot(v), 0.0, 1e-12);
  }
}

// ---------------------------------------------------------------- shapes

TEST(Synthetic, ClosedForms) {
  EXPECT_EQ(gen_sphere(2.0, 64, 1).h_true, std::vector<double>(64, 0.5));
  EXPECT_EQ(gen_cylinder(0.25, 1.0, 64, 1).h_true, std::vector<double>(64, 2.0));
  EXPECT_DOUBLE_EQ(torus_mean_curvature(2.0, 0.5, 0.0), 1.2);
  EXPECT_DOUBLE_EQ(torus_mean_curvature(2.0, 0.5, std::numbers::pi / 2), 1.0);
  EXPECT_EQ(gen_plane(1.0, 50, 1, 0.1).h_true, std::vector<double>(50, 0.0));
}

TEST(Synthetic, PointsLieOnSurfaces) {
  const AnalyticCloud sphere = gen_sphere(1.5, 200, 2);
  for (const Vec3& p : sphere.cloud.positions()) EXPECT_NEAR(p.norm(), 1.5, 1e-12);
  const AnalyticCloud cyl = gen_cylinder(0.7, 2.0, 200, 2);
  for (const Vec3& p : cyl.cloud.positions()) {
    EXPECT_NEAR(p.head<2>().norm(), 0.7, 1e-12);
    EXPECT_LE(std::abs(p.z()), 1.0);
  }
  const AnalyticCloud torus = gen_torus(2.0, 0.5, 200, 2);
  for (const Vec3& p : torus.cloud.positions())
    EXPECT_NEAR(std::hypot(p.head<2>().norm() - 2.0, p.z()), 0.5, 1e-12);
  const AnalyticCloud plane = gen_plane(2.0, 200, 2, 0.05);
  for (const Vec3& p : plane.cloud.positions()) EXPECT_EQ(p.z(), 0.0);
}

TEST(Synthetic, Deterministic) {
  const auto a = gen_torus(2.0, 0.5, 300, 17);
  const auto b = gen_torus(2.0, 0.5, 300, 17);
  const auto c = gen_torus(2.0, 0.5, 300, 18);
  EXPECT_TRUE(std::equal(a.cloud.positions().begin(), a.cloud.positions().end(), b.cloud.positions().begin()));
  EXPECT_FALSE(std::equal(a.cloud.positions().begin(), a.cloud.positions().end(), c.cloud.positions().begin()));
  EXPECT_EQ(a.h_true, b.h_true);
}

TEST(Synthetic, TorusCurvatureVaries) {
  const auto t = gen_torus(2.0, 0.5, 500, 1);
  EXPECT_GT(*std::max_element(t.h_true.begin(), t.h_true.end()),
            *std::min_element(t.h_true.begin(), t.h_true.end()));
}

TEST(Synthetic, UnjitteredPlaneIsExactGrid) {
  const auto p = gen_plane(2.0, 16, 99, 0.0);
  std::set<double> xs, ys;
  for (const Vec3& q : p.cloud.positions()) {
    xs.insert(q.x());
    ys.insert(q.y());
  }
  EXPECT_EQ(xs.size(), 4u);
  EXPECT_EQ(ys.size(), 4u);
}

TEST(Synthetic, SphereOctantsBalanced) {
  const std::size_t n = 8000;
  const auto s = gen_sphere(1.0, n, 31);
  std::array<int, 8> counts{};
  for (const Vec3& p : s.cloud.positions()) counts[(p.x() > 0) + 2 * (p.y() > 0) + 4 * (p.z() > 0)]++;
  const double mean = n / 8.0, sigma = std::sqrt(n * (1.0 / 8) * (7.0 / 8));
  for (int c : counts) EXPECT_LT(std::abs(c - mean), 3 * sigma);
}

TEST(Synthetic, TorusIsAreaUniform) {
  // Area density in theta is proportional to R + r cos(theta); the outer
  // half (cos > 0) therefore holds (pi R + 2r) / (2 pi R) of the points.
  const double R = 2.0, r = 0.5;
  const std::size_t n = 20000;
  const auto t = gen_torus(R, r, n, 4);
  std::size_t outer = 0;
  for (const Vec3& p : t.cloud.positions()) outer += p.head<2>().norm() > R;
  const double expect = (std::numbers::pi * R + 2 * r) / (2 * std::numbers::pi * R);
  const double sigma = std::sqrt(expect * (1 - expect) / n);
  EXPECT_NEAR(double(outer) / n, expect, 4 * sigma);
}

TEST(Synthetic, Preconditions) {
  EXPECT_THROW(gen_sphere(1.0, 7, 1), PreconditionError);
  EXPECT_THROW(gen_sphere(-1.0, 64, 1), PreconditionError);
  EXPECT_THROW(gen_torus(0.5, 2.0, 64, 1), PreconditionError);
  EXPECT_THROW(gen_cylinder(1.0, 0.0, 64, 1), PreconditionError);
  EXPECT_THROW(gen_plane(1.0, 64, 1, -0.1), PreconditionError);
}
