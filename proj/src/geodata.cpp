#include "conicmap/geodata.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "conicmap/errors.hpp"
#include "json.hpp"

namespace conicmap::geo {

namespace {

using nlohmann::json;

constexpr double kDegree = kPi / 180.0;
constexpr double kMaxVertexSpacing = 0.25;
constexpr double kOnCutDegrees = 1e-12 / kDegree;

struct LineColumn {
  std::size_t line = 1;
  std::size_t column = 1;
};

LineColumn locate(std::string_view text, std::size_t byte) {
  LineColumn lc;
  // byte is the 1-based offset of the offending character
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

class GeoJsonWalker {
 public:
  GeoJsonLines result;

  void walk_root(const json& node) {
    if (!node.is_object())
      throw ValidationError("GeoJSON: top-level value is not an object");
    walk(node, "feature 0");
  }

 private:
  int feature_count_ = 0;

  void walk(const json& node, const std::string& name) {
    const auto type_it = node.find("type");
    if (type_it == node.end() || !type_it->is_string()) {
      ++result.ignored;
      return;
    }
    const std::string type = type_it->get<std::string>();
    if (type == "FeatureCollection") {
      const auto features = node.find("features");
      if (features == node.end() || !features->is_array())
        throw ValidationError("GeoJSON: FeatureCollection without a features array");
      for (const json& feature : *features) walk_feature(feature);
    } else if (type == "Feature") {
      walk_feature(node);
    } else if (type == "GeometryCollection") {
      const auto geometries = node.find("geometries");
      if (geometries == node.end() || !geometries->is_array())
        throw ValidationError("GeoJSON: " + name + ": GeometryCollection without geometries");
      for (const json& g : *geometries) walk(g, name);
    } else if (type == "LineString") {
      result.lines.push_back({name, read_line(coordinates(node, name), name)});
    } else if (type == "MultiLineString") {
      const json& parts = coordinates(node, name);
      for (std::size_t i = 0; i < parts.size(); ++i)
        result.lines.push_back({name + " part " + std::to_string(i),
                                read_line(parts[i], name)});
    } else {
      ++result.ignored;
    }
  }

  void walk_feature(const json& feature) {
    ++feature_count_;
    std::string name = "feature " + std::to_string(feature_count_);
    if (!feature.is_object())
      throw ValidationError("GeoJSON: " + name + " is not an object");
    const auto props = feature.find("properties");
    if (props != feature.end() && props->is_object()) {
      const auto n = props->find("name");
      if (n != props->end() && n->is_string()) name = n->get<std::string>();
    }
    if (feature.value("type", "") != "Feature") {
      walk(feature, name);
      return;
    }
    const auto geometry = feature.find("geometry");
    if (geometry == feature.end() || geometry->is_null()) {
      ++result.ignored;
      return;
    }
    walk(*geometry, name);
  }

  static const json& coordinates(const json& node, const std::string& name) {
    const auto it = node.find("coordinates");
    if (it == node.end() || !it->is_array())
      throw ValidationError("GeoJSON: " + name + ": missing coordinates array");
    return *it;
  }

  static std::vector<LonLat> read_line(const json& positions, const std::string& name) {
    if (!positions.is_array() || positions.size() < 2)
      throw ValidationError("GeoJSON: " + name + ": a line needs at least two positions");
    std::vector<LonLat> out;
    out.reserve(positions.size());
    for (const json& pos : positions) {
      if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number())
        throw ValidationError("GeoJSON: " + name + ": malformed position");
      const double lon = pos[0].get<double>();
      const double lat = pos[1].get<double>();
      if (!std::isfinite(lon) || lon < -180.0 || lon > 180.0 || !std::isfinite(lat) ||
          !(lat > -90.0 && lat < 90.0))
        throw ValidationError(fmt::format(
            "GeoJSON: {}: coordinate ({}, {}) out of range", name, lon, lat));
      out.push_back({lon, lat});
    }
    return out;
  }
};

std::vector<double> densified(double from, double to) {
  const auto steps = static_cast<int>(
      std::max(1.0, std::ceil(std::abs(to - from) / kMaxVertexSpacing - 1e-9)));
  std::vector<double> out(static_cast<std::size_t>(steps) + 1);
  for (int j = 0; j <= steps; ++j)
    out[static_cast<std::size_t>(j)] = from + (to - from) * j / steps;
  out.back() = to;
  return out;
}

std::string format_number(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  return fmt::format("{:.{}g}", v, digits);
}

// Vertex in (degrees from the central meridian, height).
struct Developed {
  double offset;
  double rho;
};

std::vector<std::vector<Developed>> split_at_cut(const std::vector<Developed>& line) {
  std::vector<std::vector<Developed>> pieces(1);
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (i > 0) {
      const Developed& a = line[i - 1];
      const Developed& b = line[i];
      if (std::abs(b.offset - a.offset) > 180.0) {
        const double edge = a.offset >= 0.0 ? 180.0 : -180.0;
        const double b_unwrapped = b.offset + 2.0 * edge;
        const double t = (edge - a.offset) / (b_unwrapped - a.offset);
        const double rho = a.rho + t * (b.rho - a.rho);
        pieces.back().push_back({edge, rho});
        pieces.emplace_back();
        pieces.back().push_back({-edge, rho});
      }
    }
    pieces.back().push_back(line[i]);
  }
  return pieces;
}

std::vector<std::vector<Developed>> clip_to_band(const std::vector<Developed>& line,
                                                 double lo, double hi) {
  constexpr double tol = 1e-12;
  const auto inside = [&](const Developed& v) { return v.rho >= lo - tol && v.rho <= hi + tol; };
  const auto at = [](const Developed& a, const Developed& b, double rho) {
    const double t = (rho - a.rho) / (b.rho - a.rho);
    return Developed{a.offset + t * (b.offset - a.offset), rho};
  };

  std::vector<std::vector<Developed>> out;
  std::vector<Developed> current;
  const auto flush = [&] {
    if (current.size() >= 2) out.push_back(current);
    current.clear();
  };
  if (line.size() == 1 && inside(line[0])) return out;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const Developed& a = line[i - 1];
    const Developed& b = line[i];
    const bool ia = inside(a);
    const bool ib = inside(b);
    if (ia && ib) {
      if (current.empty()) current.push_back(a);
      current.push_back(b);
    } else if (ia) {
      if (current.empty()) current.push_back(a);
      current.push_back(at(a, b, b.rho < lo ? lo : hi));
      flush();
    } else if (ib) {
      current.push_back(at(a, b, a.rho < lo ? lo : hi));
      current.push_back(b);
    } else if ((a.rho < lo && b.rho > hi) || (a.rho > hi && b.rho < lo)) {
      current.push_back(at(a, b, a.rho < lo ? lo : hi));
      current.push_back(at(a, b, a.rho < lo ? hi : lo));
      flush();
    }
  }
  flush();
  for (auto& piece : out)
    for (auto& v : piece) v.rho = std::clamp(v.rho, lo, hi);
  return out;
}

}  // namespace

GeoJsonLines parse_geojson_lines(std::string_view document) {
  json root;
  try {
    root = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    const LineColumn lc = locate(document, e.byte);
    throw ParseError("GeoJSON: malformed JSON", lc.line, lc.column);
  }
  GeoJsonWalker walker;
  walker.walk_root(root);
  return std::move(walker.result);
}

std::vector<GeoPolyline> graticule(double lon_step, double lat_step,
                                   const SphericalAnnulus& annulus) {
  if (!(lon_step > 0.0) || !(lat_step > 0.0))
    throw DomainError("graticule: steps must be positive");
  const double count = 360.0 / lon_step;
  if (std::abs(count - std::round(count)) > 1e-9)
    throw DomainError("graticule: the longitude step must divide 360");
  const int n_meridians = static_cast<int>(std::round(count));

  const double lat_lo = std::asin(annulus.rho1()) / kDegree;
  const double lat_hi = std::asin(annulus.rho2()) / kDegree;

  std::vector<GeoPolyline> out;
  const std::vector<double> lats = densified(lat_lo, lat_hi);
  for (int i = 0; i < n_meridians; ++i) {
    const double lon = -180.0 + i * lon_step;
    GeoPolyline m{"meridian " + format_number(lon, 10), {}};
    for (double lat : lats) m.points.push_back({lon, lat});
    out.push_back(std::move(m));
  }

  std::vector<double> parallels{lat_lo};
  for (double k = std::floor(lat_lo / lat_step) + 1.0; k * lat_step < lat_hi - 1e-9; k += 1.0)
    if (k * lat_step > lat_lo + 1e-9) parallels.push_back(k * lat_step);
  parallels.push_back(lat_hi);

  const std::vector<double> lons = densified(-180.0, 180.0);
  for (double lat : parallels) {
    GeoPolyline p{"parallel " + format_number(lat, 10), {}};
    for (double lon : lons) p.points.push_back({lon, lat});
    out.push_back(std::move(p));
  }
  return out;
}

ProjectedLines project_polylines(const MeridianProfile& profile,
                                 const std::vector<GeoPolyline>& lines,
                                 double cut_longitude, const std::string& stroke) {
  // central meridian in (-180, 180]; lon = +-180 then keep their sides
  double central = std::remainder(cut_longitude / kDegree + 180.0, 360.0);
  if (central <= -180.0) central += 360.0;
  ProjectedLines result;
  for (const GeoPolyline& line : lines) {
    std::vector<Developed> developed;
    developed.reserve(line.points.size());
    for (const LonLat& p : line.points) {
      double offset = p.lon - central;
      while (offset > 180.0) offset -= 360.0;
      while (offset < -180.0) offset += 360.0;
      developed.push_back({offset, std::sin(p.lat * kDegree)});
    }
    std::vector<std::vector<Developed>> pieces;
    const bool on_cut = std::all_of(developed.begin(), developed.end(), [](const Developed& v) {
      return std::abs(v.offset) >= 180.0 - kOnCutDegrees;
    });
    if (on_cut) {
      // one copy on each edge of the sector
      for (double edge : {-180.0, 180.0}) {
        pieces.push_back(developed);
        for (Developed& v : pieces.back()) v.offset = edge;
      }
    } else {
      pieces = split_at_cut(developed);
    }
    bool kept = false;
    for (const auto& piece : pieces) {
      for (const auto& clipped : clip_to_band(piece, profile.rho1(), profile.rho2())) {
        PlanarPath path{line.name, {}, stroke};
        path.points.reserve(clipped.size());
        for (const Developed& v : clipped) {
          const PlanarPoint q = project_offset(profile, v.offset * kDegree, v.rho);
          path.points.push_back({q.re(), q.im()});
        }
        result.paths.push_back(std::move(path));
        kept = true;
      }
    }
    if (!kept) ++result.dropped;
  }
  return result;
}

void CurveTable::validate() const {
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw ValidationError("CurveTable: ragged row");
    for (double v : row)
      if (!std::isfinite(v)) throw ValidationError("CurveTable: non-finite entry");
  }
}

std::string format_csv(const CurveTable& table) {
  table.validate();
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i], 17);
    }
    out += '\n';
  }
  return out;
}

CurveTable parse_csv(std::string_view text) {
  CurveTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    std::vector<std::string_view> cells;
    for (std::size_t start = 0;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (line_no == 1) {
      for (auto c : cells) table.columns.emplace_back(c);
      continue;
    }
    std::vector<double> row;
    for (std::size_t col = 0; col < cells.size(); ++col) {
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(cells[col].data(), cells[col].data() + cells[col].size(), v);
      if (ec != std::errc{} || ptr != cells[col].data() + cells[col].size())
        throw ParseError("CSV: not a number", line_no, col + 1);
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return buffer.str();
}

void write_csv(const CurveTable& table, const std::filesystem::path& path) {
  write_text_file(path, format_csv(table));
}

std::string format_svg(const std::vector<PlanarPath>& paths, const SvgStyle& style) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& path : paths)
    for (const Point2& p : path.points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, -p.y);
      max_y = std::max(max_y, -p.y);
    }
  double vx = 0.0, vy = 0.0, vw = 1.0, vh = 1.0;
  if (min_x <= max_x) {
    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double margin = 0.02 * extent;
    vx = min_x - margin;
    vy = min_y - margin;
    vw = max_x - min_x + 2.0 * margin;
    vh = max_y - min_y + 2.0 * margin;
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n",
      format_number(vx, 10), format_number(vy, 10), format_number(vw, 10),
      format_number(vh, 10));
  if (!style.background.empty())
    out += fmt::format(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
        format_number(vx, 10), format_number(vy, 10), format_number(vw, 10),
        format_number(vh, 10), style.background);
  out += fmt::format(
      "  <g fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\">\n",
      style.stroke, format_number(style.stroke_width, 10));
  for (const auto& path : paths) {
    if (path.points.empty()) continue;
    std::string d;
    for (std::size_t i = 0; i < path.points.size(); ++i) {
      d += i == 0 ? "M" : " L";
      d += format_number(path.points[i].x, 10);
      d += ' ';
      d += format_number(-path.points[i].y, 10);
    }
    if (path.stroke.empty())
      out += fmt::format("    <path d=\"{}\"/>\n", d);
    else
      out += fmt::format("    <path stroke=\"{}\" d=\"{}\"/>\n", path.stroke, d);
  }
  out += "  </g>\n</svg>\n";
  return out;
}

void write_svg(const std::vector<PlanarPath>& paths, const SvgStyle& style,
               const std::filesystem::path& path) {
  write_text_file(path, format_svg(paths, style));
}

}  // namespace conicmap::geo
