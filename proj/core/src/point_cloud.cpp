#include "cfps/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfps/error.hpp"

namespace cfps {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::UnsupportedFormat: return "unsupported format";
    case ParseErrorKind::NonNumericToken: return "non-numeric token";
    case ParseErrorKind::ColumnCount: return "inconsistent column count";
    case ParseErrorKind::CountMismatch: return "vertex count mismatch";
    case ParseErrorKind::ZeroPoints: return "zero points";
    case ParseErrorKind::InvalidValue: return "invalid value";
  }
  return "parse error";
}

namespace {

std::string describe_line(std::size_t line) {
  return line == 0 ? std::string("EOF") : "line " + std::to_string(line);
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : Error(std::string(to_string(kind)) + " at " + describe_line(line) + ": " + detail),
      kind_(kind),
      line_(line) {}

PointCloud::PointCloud(std::vector<Vec3> positions, std::optional<std::vector<Vec3>> normals,
                       std::string id)
    : positions_(std::move(positions)), normals_(std::move(normals)), id_(std::move(id)) {
  if (positions_.empty()) throw PreconditionError("point cloud must contain at least one point");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!positions_[i].allFinite())
      throw PreconditionError("non-finite coordinate at point " + std::to_string(i));
  }
  if (normals_) {
    if (normals_->size() != positions_.size())
      throw PreconditionError("normal count " + std::to_string(normals_->size()) +
                              " does not match point count " + std::to_string(positions_.size()));
    for (std::size_t i = 0; i < normals_->size(); ++i) {
      const double norm = (*normals_)[i].norm();
      if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6)
        throw PreconditionError("normal at point " + std::to_string(i) + " is not unit length");
    }
  }
}

std::span<const Vec3> PointCloud::normals() const {
  if (!normals_) throw PreconditionError("cloud '" + id_ + "' has no normals");
  return *normals_;
}

PointCloud PointCloud::with_id(std::string id) const {
  PointCloud copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

PointCloud PointCloud::without_normals() const {
  PointCloud copy = *this;
  copy.normals_.reset();
  return copy;
}

SampleSelection::SampleSelection(std::vector<std::size_t> indices, std::size_t parent_n)
    : indices_(std::move(indices)), parent_n_(parent_n) {
  if (indices_.size() > parent_n_)
    throw PreconditionError("selection larger than parent cloud");
  std::vector<bool> seen(parent_n_, false);
  for (std::size_t idx : indices_) {
    if (idx >= parent_n_)
      throw PreconditionError("selection index " + std::to_string(idx) + " out of range [0, " +
                              std::to_string(parent_n_) + ")");
    if (seen[idx]) throw PreconditionError("duplicate selection index " + std::to_string(idx));
    seen[idx] = true;
  }
}

SampleSelection SampleSelection::identity(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return SampleSelection(std::move(idx), n);
}

std::vector<std::size_t> SampleSelection::complement() const {
  std::vector<bool> taken(parent_n_, false);
  for (std::size_t idx : indices_) taken[idx] = true;
  std::vector<std::size_t> rest;
  rest.reserve(parent_n_ - indices_.size());
  for (std::size_t i = 0; i < parent_n_; ++i)
    if (!taken[i]) rest.push_back(i);
  return rest;
}

PointCloud gather(const PointCloud& cloud, const SampleSelection& sel) {
  if (sel.parent_n() != cloud.size())
    throw PreconditionError("selection parent size " + std::to_string(sel.parent_n()) +
                            " does not match cloud size " + std::to_string(cloud.size()));
  std::vector<Vec3> positions;
  positions.reserve(sel.size());
  for (std::size_t idx : sel.indices()) positions.push_back(cloud.position(idx));

  std::optional<std::vector<Vec3>> normals;
  if (cloud.has_normals()) {
    const auto src = cloud.normals();
    normals.emplace();
    normals->reserve(sel.size());
    for (std::size_t idx : sel.indices()) normals->push_back(src[idx]);
  }
  return PointCloud(std::move(positions), std::move(normals), cloud.id());
}

double bounding_box_diagonal(const PointCloud& cloud) {
  Vec3 lo = cloud.position(0);
  Vec3 hi = lo;
  for (const Vec3& p : cloud.positions()) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

PointCloud normalize_to_unit_sphere(const PointCloud& cloud) {
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : cloud.positions()) centroid += p;
  centroid /= static_cast<double>(cloud.size());

  double radius = 0.0;
  for (const Vec3& p : cloud.positions()) radius = std::max(radius, (p - centroid).norm());
  const double scale = radius > 0.0 ? 1.0 / radius : 1.0;

  std::vector<Vec3> positions;
  positions.reserve(cloud.size());
  for (const Vec3& p : cloud.positions()) positions.push_back((p - centroid) * scale);

  std::optional<std::vector<Vec3>> normals;
  if (cloud.has_normals()) {
    const auto n = cloud.normals();
    normals.emplace(n.begin(), n.end());
  }
  return PointCloud(std::move(positions), std::move(normals), cloud.id());
}

}  // namespace cfps
