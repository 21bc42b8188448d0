#include "cfps/cloud_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfps/error.hpp"

namespace cfps {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

double parse_number(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(ParseErrorKind::NonNumericToken, line_no,
                     "cannot parse '" + std::string(token) + "' as a number");
  if (!std::isfinite(value))
    throw ParseError(ParseErrorKind::InvalidValue, line_no, "non-finite coordinate");
  return value;
}

bool is_blank(std::string_view line) { return split_ws(line).empty(); }

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no_;
    return true;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

bool is_scalar_type(std::string_view t) {
  static constexpr std::string_view kTypes[] = {
      "char",  "uchar",  "short",   "ushort",  "int",   "uint",    "float",   "double",
      "int8",  "uint8",  "int16",   "uint16",  "int32", "uint32",  "float32", "float64"};
  for (auto k : kTypes)
    if (k == t) return true;
  return false;
}

Vec3 checked_normal(const Vec3& raw, std::size_t line_no) {
  const double norm = raw.norm();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw ParseError(ParseErrorKind::InvalidValue, line_no, "zero-length normal");
  return raw / norm;
}

PointCloud read_ply(std::istream& in, std::string id) {
  LineReader reader(in);
  std::string line;

  if (!reader.next(line) || split_ws(line) != std::vector<std::string_view>{"ply"})
    throw ParseError(ParseErrorKind::MalformedHeader, reader.line_no() == 0 ? 0 : 1,
                     "expected 'ply' magic");

  std::optional<std::size_t> vertex_count;
  bool in_vertex = false;
  bool saw_format = false;
  std::vector<std::string> properties;

  for (;;) {
    if (!reader.next(line))
      throw ParseError(ParseErrorKind::MalformedHeader, 0, "missing end_header");
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::size_t ln = reader.line_no();
    if (tok[0] == "end_header") break;
    if (tok[0] == "comment" || tok[0] == "obj_info") continue;
    if (tok[0] == "format") {
      if (tok.size() != 3)
        throw ParseError(ParseErrorKind::MalformedHeader, ln, "bad format line");
      if (tok[1] != "ascii")
        throw ParseError(ParseErrorKind::UnsupportedFormat, ln,
                         "binary PLY ('" + std::string(tok[1]) + "') is not supported; convert to ascii");
      saw_format = true;
    } else if (tok[0] == "element") {
      if (tok.size() != 3)
        throw ParseError(ParseErrorKind::MalformedHeader, ln, "bad element line");
      if (tok[1] != "vertex")
        throw ParseError(ParseErrorKind::MalformedHeader, ln,
                         "unsupported element '" + std::string(tok[1]) + "' (only vertex)");
      if (vertex_count)
        throw ParseError(ParseErrorKind::MalformedHeader, ln, "duplicate vertex element");
      std::size_t count = 0;
      auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), count);
      if (ec != std::errc() || ptr != tok[2].data() + tok[2].size())
        throw ParseError(ParseErrorKind::MalformedHeader, ln, "bad vertex count");
      vertex_count = count;
      in_vertex = true;
    } else if (tok[0] == "property") {
      if (!in_vertex)
        throw ParseError(ParseErrorKind::MalformedHeader, ln, "property before element");
      if (tok.size() != 3 || !is_scalar_type(tok[1]))
        throw ParseError(ParseErrorKind::MalformedHeader, ln, "only scalar properties are supported");
      properties.emplace_back(tok[2]);
    } else {
      throw ParseError(ParseErrorKind::MalformedHeader, ln,
                       "unknown header keyword '" + std::string(tok[0]) + "'");
    }
  }
  const std::size_t header_end = reader.line_no();
  if (!saw_format) throw ParseError(ParseErrorKind::MalformedHeader, header_end, "missing format line");
  if (!vertex_count) throw ParseError(ParseErrorKind::MalformedHeader, header_end, "missing vertex element");
  if (*vertex_count == 0) throw ParseError(ParseErrorKind::ZeroPoints, header_end, "vertex count is 0");

  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < properties.size(); ++i)
      if (properties[i] == name) return i;
    return std::nullopt;
  };
  const auto cx = column("x"), cy = column("y"), cz = column("z");
  if (!cx || !cy || !cz)
    throw ParseError(ParseErrorKind::MalformedHeader, header_end, "vertex lacks x/y/z properties");
  const auto nx = column("nx"), ny = column("ny"), nz = column("nz");
  const int normal_props = int(nx.has_value()) + int(ny.has_value()) + int(nz.has_value());
  if (normal_props != 0 && normal_props != 3)
    throw ParseError(ParseErrorKind::MalformedHeader, header_end, "partial normal properties");
  const bool has_normals = normal_props == 3;

  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  positions.reserve(*vertex_count);
  if (has_normals) normals.reserve(*vertex_count);

  while (positions.size() < *vertex_count) {
    if (!reader.next(line))
      throw ParseError(ParseErrorKind::CountMismatch, 0,
                       "header declares " + std::to_string(*vertex_count) + " vertices, found " +
                           std::to_string(positions.size()));
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::size_t ln = reader.line_no();
    if (tok.size() != properties.size())
      throw ParseError(ParseErrorKind::ColumnCount, ln,
                       "expected " + std::to_string(properties.size()) + " values, found " +
                           std::to_string(tok.size()));
    std::vector<double> row(tok.size());
    for (std::size_t i = 0; i < tok.size(); ++i) row[i] = parse_number(tok[i], ln);
    positions.emplace_back(row[*cx], row[*cy], row[*cz]);
    if (has_normals) normals.push_back(checked_normal(Vec3(row[*nx], row[*ny], row[*nz]), ln));
  }
  while (reader.next(line)) {
    if (!is_blank(line))
      throw ParseError(ParseErrorKind::CountMismatch, reader.line_no(),
                       "more vertex rows than the declared " + std::to_string(*vertex_count));
  }

  std::optional<std::vector<Vec3>> maybe_normals;
  if (has_normals) maybe_normals = std::move(normals);
  return PointCloud(std::move(positions), std::move(maybe_normals), std::move(id));
}

PointCloud read_xyz(std::istream& in, std::string id) {
  LineReader reader(in);
  std::string line;
  std::vector<Vec3> positions;
  while (reader.next(line)) {
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::size_t ln = reader.line_no();
    if (tok.size() != 3)
      throw ParseError(ParseErrorKind::ColumnCount, ln,
                       "expected 3 columns (x y z), found " + std::to_string(tok.size()));
    positions.emplace_back(parse_number(tok[0], ln), parse_number(tok[1], ln),
                           parse_number(tok[2], ln));
  }
  if (positions.empty()) throw ParseError(ParseErrorKind::ZeroPoints, 0, "file contains no points");
  return PointCloud(std::move(positions), std::nullopt, std::move(id));
}

}  // namespace

CloudFormat parse_cloud_format(std::string_view name) {
  if (name == "ply" || name == "ply-ascii") return CloudFormat::PlyAscii;
  if (name == "xyz") return CloudFormat::Xyz;
  if (name == "auto") return CloudFormat::Auto;
  throw PreconditionError("unknown cloud format '" + std::string(name) + "'");
}

CloudFormat resolve_format(const std::filesystem::path& path, CloudFormat format) {
  if (format != CloudFormat::Auto) return format;
  auto ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".ply" ? CloudFormat::PlyAscii : CloudFormat::Xyz;
}

PointCloud load_cloud(const std::filesystem::path& path, CloudFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  auto id = path.stem().string();
  return resolve_format(path, format) == CloudFormat::PlyAscii ? read_ply(in, std::move(id))
                                                               : read_xyz(in, std::move(id));
}

void save_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format) {
  const CloudFormat fmt = resolve_format(path, format);
  if (fmt == CloudFormat::Xyz && cloud.has_normals())
    throw PreconditionError("xyz format carries positions only; drop normals before saving");

  std::ostringstream out;
  out.precision(17);
  const auto pos = cloud.positions();
  if (fmt == CloudFormat::PlyAscii) {
    out << "ply\nformat ascii 1.0\nelement vertex " << cloud.size() << "\n"
        << "property double x\nproperty double y\nproperty double z\n";
    if (cloud.has_normals()) out << "property double nx\nproperty double ny\nproperty double nz\n";
    out << "end_header\n";
    const auto normals = cloud.has_normals() ? cloud.normals() : std::span<const Vec3>{};
    for (std::size_t i = 0; i < pos.size(); ++i) {
      out << pos[i].x() << ' ' << pos[i].y() << ' ' << pos[i].z();
      if (!normals.empty()) out << ' ' << normals[i].x() << ' ' << normals[i].y() << ' ' << normals[i].z();
      out << '\n';
    }
  } else {
    for (const Vec3& p : pos) out << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  const std::string text = out.str();
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace cfps
