#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "conicmap/projections.hpp"
#include "conicmap/sphere.hpp"

namespace conicmap::geo {

/// Longitude and latitude in degrees.
struct LonLat {
  double lon;
  double lat;
};

/// Polyline in geographic coordinates: at least two vertices with
/// lon in [-180, 180] and lat in (-90, 90).
struct GeoPolyline {
  std::string name;
  std::vector<LonLat> points;
};

struct GeoJsonLines {
  std::vector<GeoPolyline> lines;
  /// Geometries of types other than LineString / MultiLineString.
  int ignored = 0;
};

/// Extracts LineString and MultiLineString geometries from a GeoJSON text
/// (bare geometry, Feature, FeatureCollection or GeometryCollection).
/// Throws ParseError for malformed JSON and ValidationError, naming the
/// feature, for out-of-range or malformed coordinates.
GeoJsonLines parse_geojson_lines(std::string_view document);

/// Meridians every lon_step degrees starting at -180, and parallels at the
/// multiples of lat_step strictly inside the latitude band of the annulus
/// plus both boundary parallels. Vertices are at most 0.25 degrees apart.
///
/// Throws DomainError for non-positive steps or a lon_step that does not
/// divide 360.
std::vector<GeoPolyline> graticule(double lon_step, double lat_step,
                                   const SphericalAnnulus& annulus);

struct Point2 {
  double x;
  double y;
};

struct PlanarPath {
  std::string name;
  std::vector<Point2> points;
  /// SVG stroke colour; empty inherits the document default.
  std::string stroke;
};

struct ProjectedLines {
  std::vector<PlanarPath> paths;
  /// Input polylines with no vertex left after clipping.
  int dropped = 0;
};

/// Projects polylines onto the developed map plane. Segments crossing the
/// cut meridian are split at the sector edges, and a polyline lying on the
/// cut meridian is drawn on both edges. Parts outside the profile's annulus
/// are clipped by linear interpolation in (longitude, height).
ProjectedLines project_polylines(const MeridianProfile& profile,
                                 const std::vector<GeoPolyline>& lines,
                                 double cut_longitude = kPi,
                                 const std::string& stroke = {});

/// Rectangular table of finite numbers with a header.
struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws ValidationError if ragged or non-finite.
  void validate() const;
};

/// Header row then one row per record, comma separated, 17 significant
/// digits, '.' decimal separator, LF line endings.
std::string format_csv(const CurveTable& table);
CurveTable parse_csv(std::string_view text);
void write_csv(const CurveTable& table, const std::filesystem::path& path);

struct SvgStyle {
  std::string stroke = "#1b3a6b";
  /// Stroke width in user units.
  double stroke_width = 0.002;
  std::string background;  // empty: transparent
};

/// Standalone SVG 1.1 document, one path element per polyline. The map y
/// axis is flipped so north points up. The viewBox fits the geometry
/// with a 2% margin.
std::string format_svg(const std::vector<PlanarPath>& paths, const SvgStyle& style);
void write_svg(const std::vector<PlanarPath>& paths, const SvgStyle& style,
               const std::filesystem::path& path);

/// Writes text to a file, throwing IoError naming the path on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace conicmap::geo
