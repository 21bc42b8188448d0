#include "cfps/neighbor_index.hpp"

#include <algorithm>
#include <numeric>

#include "cfps/error.hpp"

namespace cfps {
namespace {

constexpr std::size_t kLeafSize = 8;

}  // namespace

NeighborIndex::NeighborIndex(std::span<const Vec3> points)
    : points_(points.begin(), points.end()), perm_(points.size()) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  nodes_.reserve(2 * (points_.size() / kLeafSize + 1));
  if (!points_.empty()) root_ = build(0, points_.size());
}

std::size_t NeighborIndex::build(std::size_t begin, std::size_t end) {
  const std::size_t id = nodes_.size();
  nodes_.push_back({begin, end, -1, 0.0, 0, 0});
  if (end - begin <= kLeafSize) return id;

  Vec3 lo = points_[perm_[begin]];
  Vec3 hi = lo;
  for (std::size_t i = begin; i < end; ++i) {
    lo = lo.cwiseMin(points_[perm_[i]]);
    hi = hi.cwiseMax(points_[perm_[i]]);
  }
  int axis = 0;
  (hi - lo).maxCoeff(&axis);
  if (hi[axis] == lo[axis]) return id;  // all coincident: keep as a leaf

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(perm_.begin() + static_cast<std::ptrdiff_t>(begin),
                   perm_.begin() + static_cast<std::ptrdiff_t>(mid),
                   perm_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) {
                     const double ca = points_[a][axis], cb = points_[b][axis];
                     return ca < cb || (ca == cb && a < b);
                   });
  const double split = points_[perm_[mid]][axis];
  // Left holds coordinates <= split, right holds >= split.
  const std::size_t left = build(begin, mid);
  const std::size_t right = build(mid, end);
  nodes_[id].axis = axis;
  nodes_[id].split = split;
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void NeighborIndex::search(std::size_t node_id, const Vec3& query, std::size_t k,
                           std::vector<Neighbor>& heap) const {
  const Node& node = nodes_[node_id];
  if (node.axis < 0) {
    for (std::size_t i = node.begin; i < node.end; ++i) {
      const std::size_t idx = perm_[i];
      const Neighbor cand{idx, (points_[idx] - query).squaredNorm()};
      if (heap.size() < k) {
        heap.push_back(cand);
        std::push_heap(heap.begin(), heap.end());
      } else if (cand < heap.front()) {
        std::pop_heap(heap.begin(), heap.end());
        heap.back() = cand;
        std::push_heap(heap.begin(), heap.end());
      }
    }
    return;
  }

  const double diff = query[node.axis] - node.split;
  const std::size_t near = diff < 0.0 ? node.left : node.right;
  const std::size_t far = diff < 0.0 ? node.right : node.left;
  search(near, query, k, heap);
  // Equal distance is still explored: a tie may carry a lower index.
  if (heap.size() < k || diff * diff <= heap.front().dist2) search(far, query, k, heap);
}

std::vector<Neighbor> NeighborIndex::knn(const Vec3& query, std::size_t k) const {
  k = std::min(k, points_.size());
  std::vector<Neighbor> heap;
  if (k == 0) return heap;
  heap.reserve(k + 1);
  search(root_, query, k, heap);
  std::sort_heap(heap.begin(), heap.end());
  return heap;
}

std::vector<std::size_t> NeighborIndex::knn_indices(const Vec3& query, std::size_t k) const {
  const auto found = knn(query, k);
  std::vector<std::size_t> out(found.size());
  std::transform(found.begin(), found.end(), out.begin(), [](const Neighbor& n) { return n.index; });
  return out;
}

Neighbor NeighborIndex::nearest(const Vec3& query) const {
  if (points_.empty()) throw PreconditionError("nearest() on an empty index");
  return knn(query, 1).front();
}

NeighborIndex build_neighbor_index(const PointCloud& cloud) {
  return NeighborIndex(cloud.positions());
}

}  // namespace cfps
