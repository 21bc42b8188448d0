#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cfps/point_cloud.hpp"

namespace cfps {

struct Neighbor {
  std::size_t index;
  double dist2;  // squared Euclidean distance to the query

  friend bool operator<(const Neighbor& a, const Neighbor& b) {
    return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
  }
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Balanced k-d tree over a fixed set of points.
///
/// Queries are exact: results equal a brute-force ranking by squared
/// distance with ties broken by ascending point index. The tree keeps its
/// own copy of the positions and is immutable after construction, so it
/// can be shared between threads.
class NeighborIndex {
 public:
  explicit NeighborIndex(std::span<const Vec3> points);

  std::size_t size() const noexcept { return points_.size(); }

  /// min(k, N) nearest neighbors sorted by (distance, index).
  std::vector<Neighbor> knn(const Vec3& query, std::size_t k) const;
  std::vector<std::size_t> knn_indices(const Vec3& query, std::size_t k) const;

  /// Single nearest neighbor (lowest index on ties).
  Neighbor nearest(const Vec3& query) const;

 private:
  struct Node {
    std::size_t begin;
    std::size_t end;
    int axis;  // -1 for leaves
    double split;
    std::size_t left;
    std::size_t right;
  };

  std::size_t build(std::size_t begin, std::size_t end);
  void search(std::size_t node, const Vec3& query, std::size_t k,
              std::vector<Neighbor>& heap) const;

  std::vector<Vec3> points_;
  std::vector<std::size_t> perm_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

NeighborIndex build_neighbor_index(const PointCloud& cloud);

}  // namespace cfps
