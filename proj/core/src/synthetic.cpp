#include "cfps/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cfps/beta.hpp"
#include "cfps/error.hpp"

namespace cfps {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

AnalyticCloud gen_sphere(double radius, std::size_t n, std::uint64_t seed) {
  require(radius > 0.0, "sphere radius must be > 0");
  require(n >= 8, "sphere needs n >= 8");
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec3> pts, nrm;
  pts.reserve(n);
  nrm.reserve(n);
  while (pts.size() < n) {
    const Vec3 d(normal(rng), normal(rng), normal(rng));
    const double len = d.norm();
    if (!(len > 1e-12)) continue;
    const Vec3 u = d / len;
    nrm.push_back(u);
    pts.push_back(radius * u);
  }
  return {PointCloud(std::move(pts), std::move(nrm), "sphere"), std::vector<double>(n, 1.0 / radius),
          "sphere", {{"radius", radius}, {"n", static_cast<double>(n)}, {"seed", static_cast<double>(seed)}}};
}

AnalyticCloud gen_cylinder(double radius, double height, std::size_t n, std::uint64_t seed) {
  require(radius > 0.0 && height > 0.0, "cylinder radius and height must be > 0");
  require(n >= 1, "cylinder needs n >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> axial(-0.5 * height, 0.5 * height);
  std::vector<Vec3> pts, nrm;
  pts.reserve(n);
  nrm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = angle(rng);
    const double z = axial(rng);
    const Vec3 radial(std::cos(t), std::sin(t), 0.0);
    nrm.push_back(radial);
    pts.emplace_back(radius * radial.x(), radius * radial.y(), z);
  }
  return {PointCloud(std::move(pts), std::move(nrm), "cylinder"),
          std::vector<double>(n, 1.0 / (2.0 * radius)),
          "cylinder",
          {{"radius", radius}, {"height", height}, {"n", static_cast<double>(n)}, {"seed", static_cast<double>(seed)}}};
}

double torus_mean_curvature(double major_radius, double minor_radius, double theta) {
  const double c = std::cos(theta);
  return std::abs((major_radius + 2.0 * minor_radius * c) /
                  (2.0 * minor_radius * (major_radius + minor_radius * c)));
}

AnalyticCloud gen_torus(double major_radius, double minor_radius, std::size_t n, std::uint64_t seed) {
  require(major_radius > minor_radius && minor_radius > 0.0, "torus needs R > r > 0");
  require(n >= 1, "torus needs n >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec3> pts, nrm;
  std::vector<double> h;
  pts.reserve(n);
  nrm.reserve(n);
  h.reserve(n);
  const double max_density = major_radius + minor_radius;
  while (pts.size() < n) {
    const double theta = angle(rng);
    const double phi = angle(rng);
    const double ring = major_radius + minor_radius * std::cos(theta);
    if (unit(rng) * max_density > ring) continue;
    const Vec3 normal(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), std::sin(theta));
    pts.emplace_back(ring * std::cos(phi), ring * std::sin(phi), minor_radius * std::sin(theta));
    nrm.push_back(normal);
    h.push_back(torus_mean_curvature(major_radius, minor_radius, theta));
  }
  return {PointCloud(std::move(pts), std::move(nrm), "torus"), std::move(h), "torus",
          {{"major_radius", major_radius},
           {"minor_radius", minor_radius},
           {"n", static_cast<double>(n)},
           {"seed", static_cast<double>(seed)}}};
}

AnalyticCloud gen_plane(double side, std::size_t n, std::uint64_t seed, double jitter) {
  require(side > 0.0, "plane side must be > 0");
  require(jitter >= 0.0, "plane jitter must be >= 0");
  require(n >= 1, "plane needs n >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);
  const auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const double spacing = m > 1 ? side / static_cast<double>(m - 1) : 0.0;
  const double origin = m > 1 ? -0.5 * side : 0.0;
  std::vector<Vec3> pts, nrm;
  pts.reserve(n);
  nrm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = origin + static_cast<double>(i % m) * spacing;
    double y = origin + static_cast<double>(i / m) * spacing;
    if (jitter > 0.0) {
      x += jitter * offset(rng);
      y += jitter * offset(rng);
    }
    pts.emplace_back(x, y, 0.0);
    nrm.emplace_back(0.0, 0.0, 1.0);
  }
  return {PointCloud(std::move(pts), std::move(nrm), "plane"), std::vector<double>(n, 0.0), "plane",
          {{"side", side}, {"n", static_cast<double>(n)}, {"seed", static_cast<double>(seed)}, {"jitter", jitter}}};
}

}  // namespace cfps
