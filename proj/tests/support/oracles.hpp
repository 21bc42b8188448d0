#pragma once

// Exhaustive reference implementations. Deliberately naive: no shared code
// with the library beyond the PointCloud container.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cfps/point_cloud.hpp"

namespace cfps::oracle {

inline double dist2(const Vec3& a, const Vec3& b) { return (a - b).squaredNorm(); }

/// k smallest distances to q, ties by ascending index.
inline std::vector<std::pair<double, std::size_t>> knn(std::span<const Vec3> pts, const Vec3& q,
                                                       std::size_t k) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t i = 0; i < pts.size(); ++i) all.emplace_back(dist2(pts[i], q), i);
  std::sort(all.begin(), all.end());
  all.resize(std::min(k, all.size()));
  return all;
}

/// FPS entry order, recomputing every min-distance from scratch each step.
inline std::vector<std::size_t> fps_order(std::span<const Vec3> pts, std::size_t seed) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order{seed};
  std::vector<bool> taken(n, false);
  taken[seed] = true;
  while (order.size() < n) {
    std::size_t best = n;
    double best_d = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j]) continue;
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t s : order) d = std::min(d, dist2(pts[j], pts[s]));
      if (d > best_d) {  // strict: first (lowest) index wins ties
        best_d = d;
        best = j;
      }
    }
    order.push_back(best);
    taken[best] = true;
  }
  return order;
}

inline double covering_radius(std::span<const Vec3> pts, const std::vector<std::size_t>& sel) {
  double worst = 0.0;
  for (const Vec3& p : pts) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t s : sel) d = std::min(d, dist2(p, pts[s]));
    worst = std::max(worst, d);
  }
  return std::sqrt(worst);
}

inline double nearest_d2(const Vec3& p, std::span<const Vec3> to) {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec3& q : to) d = std::min(d, dist2(q, p));
  return d;
}

inline double chamfer(std::span<const Vec3> a, std::span<const Vec3> b) {
  double sa = 0.0;
  for (const Vec3& p : a) sa += nearest_d2(p, b);
  double sb = 0.0;
  for (const Vec3& q : b) sb += nearest_d2(q, a);
  return sa / static_cast<double>(a.size()) + sb / static_cast<double>(b.size());
}

struct F1 {
  double f1, precision, recall;
};

inline F1 f1(std::span<const Vec3> pred, std::span<const Vec3> gt, double threshold) {
  std::size_t hp = 0, hg = 0;
  for (const Vec3& p : pred)
    if (std::sqrt(nearest_d2(p, gt)) <= threshold) ++hp;
  for (const Vec3& q : gt)
    if (std::sqrt(nearest_d2(q, pred)) <= threshold) ++hg;
  F1 r{0.0, double(hp) / double(pred.size()), double(hg) / double(gt.size())};
  if (r.precision + r.recall > 0) r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

/// Core/non-core swap by full sorting.
struct Swap {
  std::vector<std::size_t> out;  // ascending J
  std::vector<std::size_t> in;   // descending J
};

inline Swap cfps_swap(const std::vector<std::size_t>& order, const std::vector<double>& j, std::size_t k,
                      std::size_t n_exchange) {
  std::vector<std::size_t> core(order.begin(), order.begin() + std::ptrdiff_t(k));
  std::vector<std::size_t> rest(order.begin() + std::ptrdiff_t(k), order.end());
  std::sort(core.begin(), core.end(), [&](auto a, auto b) { return std::make_pair(j[a], a) < std::make_pair(j[b], b); });
  std::sort(rest.begin(), rest.end(), [&](auto a, auto b) {
    return j[a] > j[b] || (j[a] == j[b] && a < b);
  });
  return {{core.begin(), core.begin() + std::ptrdiff_t(n_exchange)},
          {rest.begin(), rest.begin() + std::ptrdiff_t(n_exchange)}};
}

/// Spearman correlation with average ranks for ties.
inline std::vector<double> average_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t e = i;
    while (e + 1 < idx.size() && x[idx[e + 1]] == x[idx[i]]) ++e;
    for (std::size_t t = i; t <= e; ++t) r[idx[t]] = 0.5 * double(i + e);
    i = e + 1;
  }
  return r;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = double(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Central finite differences of f at x.
inline Eigen::VectorXd numeric_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                        const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    xp[i] = x[i] + h;
    const double fp = f(xp);
    xp[i] = x[i] - h;
    const double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2 * h);
  }
  return g;
}

/// Beta(a, b) log-density by direct evaluation with std::lgamma.
inline double beta_log_pdf(double a, double b, double g) {
  return (a - 1) * std::log(g) + (b - 1) * std::log1p(-g) - (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

}  // namespace cfps::oracle
