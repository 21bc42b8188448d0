#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfps/point_cloud.hpp"

namespace cfps {

/// Seeded sample of an analytic surface with exact |H| per point. The cloud
/// carries the analytic unit normals.
struct AnalyticCloud {
  PointCloud cloud;
  std::vector<double> h_true;
  std::string shape;
  std::map<std::string, double> params;
};

/// Uniform on the sphere via normalized Gaussian directions. H = 1/radius.
AnalyticCloud gen_sphere(double radius, std::size_t n, std::uint64_t seed);

/// Uniform-area lateral surface, z in [-height/2, height/2], no caps.
/// H = 1/(2 radius).
AnalyticCloud gen_cylinder(double radius, double height, std::size_t n, std::uint64_t seed);

/// Area-uniform torus (rejection on the R + r cos(theta) density).
/// |H| = |R + 2r cos(theta)| / (2r (R + r cos(theta))).
AnalyticCloud gen_torus(double major_radius, double minor_radius, std::size_t n, std::uint64_t seed);

/// Mean curvature magnitude of a torus at tube angle theta.
double torus_mean_curvature(double major_radius, double minor_radius, double theta);

/// Row-major ceil(sqrt(n))^2 grid spanning [-side/2, side/2]^2 in z = 0,
/// truncated to n points, each x/y jittered uniformly by up to +-jitter.
AnalyticCloud gen_plane(double side, std::size_t n, std::uint64_t seed, double jitter = 0.0);

}  // namespace cfps
