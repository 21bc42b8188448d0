#pragma once

#include <filesystem>
#include <string_view>

#include "cfps/point_cloud.hpp"

namespace cfps {

enum class CloudFormat { PlyAscii, Xyz, Auto };

/// Parses "ply", "xyz" or "auto" (case-sensitive). Throws PreconditionError.
CloudFormat parse_cloud_format(std::string_view name);

/// Auto resolves by extension: .ply -> PlyAscii, anything else -> Xyz.
CloudFormat resolve_format(const std::filesystem::path& path, CloudFormat format);

/// Reads an ASCII PLY or XYZ file. The cloud id is the filename stem.
///
/// PLY: a `vertex` element with scalar x/y/z properties and optionally
/// nx/ny/nz; other scalar properties are skipped. Normals are rescaled to
/// unit length. XYZ: exactly three numeric columns per line, blank lines and
/// `#` comments skipped.
///
/// Throws ParseError (with a 1-based line number, 0 for EOF) or IoError.
PointCloud load_cloud(const std::filesystem::path& path, CloudFormat format = CloudFormat::Auto);

/// Writes with 17 significant digits so load(save(c)) reproduces positions.
/// XYZ cannot carry normals: saving a cloud with normals as XYZ throws
/// PreconditionError. Use PointCloud::without_normals() to drop them.
void save_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                CloudFormat format = CloudFormat::Auto);

}  // namespace cfps
