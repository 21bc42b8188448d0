#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace cfps {

using Vec3 = Eigen::Vector3d;

/// N >= 1 finite positions with optional unit normals. Immutable once built.
class PointCloud {
 public:
  /// Throws PreconditionError if the cloud is empty, a coordinate is not
  /// finite, or normals are present but mis-sized / not unit length.
  explicit PointCloud(std::vector<Vec3> positions,
                      std::optional<std::vector<Vec3>> normals = std::nullopt,
                      std::string id = {});

  std::size_t size() const noexcept { return positions_.size(); }
  std::span<const Vec3> positions() const noexcept { return positions_; }
  const Vec3& position(std::size_t i) const { return positions_[i]; }

  bool has_normals() const noexcept { return normals_.has_value(); }
  /// Throws PreconditionError when the cloud has no normals.
  std::span<const Vec3> normals() const;

  const std::string& id() const noexcept { return id_; }

  PointCloud with_id(std::string id) const;
  PointCloud without_normals() const;

 private:
  std::vector<Vec3> positions_;
  std::optional<std::vector<Vec3>> normals_;
  std::string id_;
};

/// K distinct indices into a parent cloud of size parent_n.
class SampleSelection {
 public:
  SampleSelection(std::vector<std::size_t> indices, std::size_t parent_n);

  static SampleSelection identity(std::size_t n);

  std::span<const std::size_t> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t parent_n() const noexcept { return parent_n_; }

  /// Indices in [0, parent_n) not in this selection, ascending.
  std::vector<std::size_t> complement() const;

 private:
  std::vector<std::size_t> indices_;
  std::size_t parent_n_;
};

/// Positions (and normals) of `cloud` at `sel`, in selection order.
PointCloud gather(const PointCloud& cloud, const SampleSelection& sel);

/// Axis-aligned bounding box diagonal length.
double bounding_box_diagonal(const PointCloud& cloud);

/// Translates the centroid to the origin and scales so the farthest point
/// lies on the unit sphere. Normals are kept.
PointCloud normalize_to_unit_sphere(const PointCloud& cloud);

}  // namespace cfps
