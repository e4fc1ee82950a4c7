#include "conicmap/cli.hpp"

#include <fmt/format.h>

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "conicmap/cone.hpp"
#include "conicmap/distortion.hpp"
#include "conicmap/errors.hpp"
#include "conicmap/geodata.hpp"
#include "conicmap/sphere.hpp"

namespace conicmap::cli {

namespace {

constexpr double kDegree = kPi / 180.0;

/// Failure to read or parse a user-supplied input file.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string degree_minutes(double radians) {
  const double deg = std::abs(radians) / kDegree;
  double whole = std::floor(deg);
  double minutes = (deg - whole) * 60.0;
  if (minutes >= 59.995) {
    whole += 1.0;
    minutes = 0.0;
  }
  return fmt::format("{}{}°{:05.2f}'", radians < 0 ? "-" : "", whole, minutes);
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    geo::write_text_file(path, text);
}

struct Target {
  const char* name;
  double published;
  double tolerance;
};

// Published values and the acceptance tolerances. Fixed on purpose.
constexpr Target kModA{"Mod(A(rho1,rho2))", 0.0737271, 1e-6};
constexpr Target kModB{"Mod(B)", 0.0739411, 1e-6};
constexpr Target kDilatation{"Teichmuller dilatation Mod(B)/Mod(A)", 1.0029, 1e-4};
constexpr Target kA0Root{"a0 = sin(alpha0), root", 0.821529, 1e-5};
constexpr Target kA0Scan{"a0 = sin(alpha0), scan", 0.821529, 1e-5};
constexpr Target kA0Agreement{"|a0 root - a0 scan|", 0.0, 1e-9};
constexpr Target kDeltaMin{"delta_min", 0.0086263354, 1e-5};
constexpr Target kIntersection{"Lambert cone upper intersection", 0.890819, 1e-4};

Target distortion_target(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::Central: return {"delta Central", 0.0171839, 1e-4};
    case ProjectionKind::DelisleMO: return {"delta DelisleMO", 0.00862621, 1e-4};
    case ProjectionKind::DelisleEquidistant: return {"delta DelisleEquidistant", 0.00921812, 1e-3};
    case ProjectionKind::Orthogonal: return {"delta Orthogonal", 0.00866925, 1e-4};
    case ProjectionKind::Teichmuller: return {"delta Teichmuller", 0.0115244, 5e-4};
    case ProjectionKind::Lambert: return {"delta Lambert", 0.00862633, 1e-5};
  }
  throw InvalidKind("unknown projection kind");
}

ReproductionRow row(const Target& t, double computed, std::string note = {}) {
  const bool pass = std::isfinite(computed) && std::abs(computed - t.published) <= t.tolerance;
  return {t.name, t.published, computed, t.tolerance, pass, std::move(note)};
}

}  // namespace

ProjectionParams RunConfig::params() const {
  ProjectionParams p;
  const double unit = degrees ? kDegree : 1.0;
  p.rho1 = lat1 ? std::sin(*lat1 * unit) : rho1;
  p.rho2 = lat2 ? std::sin(*lat2 * unit) : rho2;
  if (alpha) p.alpha_override = *alpha * unit;
  p.anchor = anchor;
  p.validate();
  return p;
}

double RunConfig::cut_radians() const {
  if (!cut) return kPi;
  return *cut * (degrees ? kDegree : 1.0);
}

std::vector<ReproductionRow> reproduction_rows(const ProjectionParams& params) {
  params.validate();
  const double rho1 = params.rho1;
  const double rho2 = params.rho2;
  std::vector<ReproductionRow> rows;

  const double mod_a = annulus_modulus(SphericalAnnulus(rho1, rho2));
  const Cone through = cone_through_parallels(rho1, rho2);
  const double s1 = std::sqrt((1 - rho1) * (1 + rho1)) / through.sin_alpha();
  const double s2 = std::sqrt((1 - rho2) * (1 + rho2)) / through.sin_alpha();
  const double mod_b = cone_annulus_modulus(ConicalAnnulus(through, s2, s1));
  rows.push_back(row(kModA, mod_a));
  rows.push_back(row(kModB, mod_b));
  rows.push_back(row(kDilatation, mod_b / mod_a));

  const double a_root = optimal_sin_alpha_by_root(rho1, rho2);
  const double a_scan = optimal_sin_alpha_by_scan(rho1, rho2);
  rows.push_back(row(kA0Root, a_root,
                     fmt::format("alpha0 = {:.6f} rad = {}; published as "
                                 "0.9640 = 55°14' (rounded)",
                                 std::asin(a_root), degree_minutes(std::asin(a_root)))));
  rows.push_back(row(kA0Scan, a_scan));
  rows.push_back(row(kA0Agreement, std::abs(a_root - a_scan)));
  rows.push_back(row(kDeltaMin, delta_distortion_sin(rho1, rho2, a_root, rho1)));

  for (const ComparisonRow& c : compare_all(params)) {
    std::string note;
    if (c.kind == ProjectionKind::DelisleEquidistant)
      note = fmt::format("anchor: {} parallel", to_string(params.anchor));
    rows.push_back(row(distortion_target(c.kind), c.report.delta, note));
  }

  const Cone lambert = cone_touching_parallel(std::asin(a_root), rho1);
  const IntersectionHeights h = sphere_cone_intersections(lambert);
  rows.push_back(row(kIntersection, h.high,
                     fmt::format("lower intersection {:.6f}; upper circle is {} rho2 = {}",
                                 h.low, h.high > rho2 ? "above" : "below", rho2)));
  return rows;
}

int cmd_optimize(const RunConfig& config, std::ostream& out) {
  const ProjectionParams p = config.params();
  const double a_root = optimal_sin_alpha_by_root(p.rho1, p.rho2);
  const double a_scan = optimal_sin_alpha_by_scan(p.rho1, p.rho2);
  const double alpha0 = std::asin(a_root);
  const double delta = delta_distortion_sin(p.rho1, p.rho2, a_root, p.rho1);

  std::string report;
  report += fmt::format("rho1 = {:.10g}\nrho2 = {:.10g}\n", p.rho1, p.rho2);
  report += fmt::format("a0 = {:.10g}\n", a_root);
  report += fmt::format("a0 (scan) = {:.10g}\n", a_scan);
  report += fmt::format("alpha0 = {:.10g} rad = {}\n", alpha0, degree_minutes(alpha0));
  report += fmt::format("delta_min = {:.10g}\n", delta);

  if (!config.scan) {
    out << report;
    return kSuccess;
  }
  const int n = config.samples > 0 ? config.samples : 2001;
  if (n < 2) throw DomainError("--samples must be at least 2");
  geo::CurveTable table{{"a", "delta"}, {}};
  for (int i = 0; i < n; ++i) {
    const double a = static_cast<double>(i + 1) / (n + 1);
    table.rows.push_back({a, delta_distortion_sin(p.rho1, p.rho2, a, p.rho1)});
  }
  const std::string& path = !config.csv.empty() ? config.csv : config.out;
  out << report;
  emit(geo::format_csv(table), path, out);
  return kSuccess;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const ProjectionParams p = config.params();
  const auto rows = compare_all(p);
  out << fmt::format("{:<20} {:>16} {:>16} {:>16}\n", "projection", "delta",
                     "sup stretch", "inf stretch");
  std::string csv = "kind,delta,sup_stretch,inf_stretch,arg_sup_rho,arg_inf_rho\n";
  for (const ComparisonRow& r : rows) {
    const DistortionReport& d = r.report;
    out << fmt::format("{:<20} {:>16.10g} {:>16.10g} {:>16.10g}\n", to_string(r.kind),
                       d.delta, std::exp(d.sup_log), std::exp(d.inf_log));
    csv += fmt::format("{},{},{},{},{},{}\n", to_string(r.kind), number(d.delta),
                       number(std::exp(d.sup_log)), number(std::exp(d.inf_log)),
                       number(d.arg_sup), number(d.arg_inf));
  }
  if (!config.csv.empty()) geo::write_text_file(config.csv, csv);
  return kSuccess;
}

int cmd_curves(const RunConfig& config, std::ostream& out) {
  const ProjectionParams p = config.params();
  const int n = config.samples > 0 ? config.samples : 1001;
  if (n < 2) throw DomainError("--samples must be at least 2");

  std::vector<MeridianProfile> profiles;
  geo::CurveTable table;
  table.columns.push_back("rho");
  for (ProjectionKind kind : kAllKinds) {
    profiles.push_back(make_profile(kind, p));
    table.columns.push_back("sigma_" + std::string(to_string(kind)));
  }
  for (int i = 0; i < n; ++i) {
    const double rho =
        i == n - 1 ? p.rho2 : p.rho1 + (p.rho2 - p.rho1) * static_cast<double>(i) / (n - 1);
    std::vector<double> r{rho};
    for (const MeridianProfile& profile : profiles) r.push_back(stretch_at(profile, rho).sigma);
    table.rows.push_back(std::move(r));
  }
  emit(geo::format_csv(table), !config.out.empty() ? config.out : config.csv, out);
  return kSuccess;
}

int cmd_project(const RunConfig& config, std::ostream& out) {
  const ProjectionParams p = config.params();
  const MeridianProfile profile = make_profile(parse_kind(config.kind), p);
  const double cut = config.cut_radians();

  const auto grid = geo::graticule(config.lon_step, config.lat_step,
                                   SphericalAnnulus(p.rho1, p.rho2));
  std::vector<geo::PlanarPath> paths = geo::project_polylines(profile, grid, cut).paths;

  if (!config.coastlines.empty()) {
    geo::GeoJsonLines coast;
    try {
      coast = geo::parse_geojson_lines(geo::read_text_file(config.coastlines));
    } catch (const ParseError& e) {
      throw InputError(config.coastlines + ": " + e.what());
    } catch (const ValidationError& e) {
      throw InputError(config.coastlines + ": " + e.what());
    } catch (const IoError& e) {
      throw InputError(e.what());
    }
    auto projected = geo::project_polylines(profile, coast.lines, cut, "#8a4b08");
    for (auto& path : projected.paths) paths.push_back(std::move(path));
  }
  emit(geo::format_svg(paths, geo::SvgStyle{}), config.out, out);
  return kSuccess;
}

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
  const auto rows = reproduction_rows(config.params());
  bool all = true;
  out << fmt::format("{:<40} {:>14} {:>20} {:>10} {:>8}  {}\n", "target", "published",
                     "computed", "abs error", "status", "tolerance");
  for (const ReproductionRow& r : rows) {
    all = all && r.pass;
    out << fmt::format("{:<40} {:>14.10g} {:>20.12g} {:>10.2e} {:>8}  {:g}\n", r.target,
                       r.published, r.computed, std::abs(r.computed - r.published),
                       r.pass ? "PASS" : "FAIL", r.tolerance);
    if (!r.note.empty()) out << "    note: " << r.note << '\n';
  }
  out << (all ? "all targets reproduced\n" : "some targets FAILED\n");
  return all ? kSuccess : kReproductionFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Lambert conformal conical projection and distortion analysis", "conicmap"};
  app.require_subcommand(1);

  std::string anchor_name = "lower";
  const std::map<std::string, EquidistantAnchor> anchors{
      {"lower", EquidistantAnchor::Lower},
      {"upper", EquidistantAnchor::Upper},
      {"middle", EquidistantAnchor::Middle}};

  const auto add_common = [&](CLI::App* sub) {
    auto* r1 = sub->add_option("--rho1", config.rho1, "height of the lower parallel");
    auto* r2 = sub->add_option("--rho2", config.rho2, "height of the upper parallel");
    sub->add_option("--lat1", config.lat1, "latitude of the lower parallel")->excludes(r1);
    sub->add_option("--lat2", config.lat2, "latitude of the upper parallel")->excludes(r2);
    sub->add_flag("--degrees", config.degrees, "angles are in degrees rather than radians");
    sub->add_option("--alpha", config.alpha, "half-apex angle of the Lambert cone");
    sub->add_option("--kind", config.kind, "projection kind")->capture_default_str();
    sub->add_option("--cut", config.cut, "longitude of the cut meridian (default pi)");
    sub->add_option("--samples", config.samples, "number of samples");
    sub->add_option("--out", config.out, "output file (default stdout)");
    sub->add_option("--csv", config.csv, "CSV output file");
    sub->add_option("--anchor", anchor_name, "equidistant anchor parallel: lower, upper, middle")
        ->transform(CLI::IsMember({"lower", "upper", "middle"}, CLI::ignore_case));
  };

  auto* optimize = app.add_subcommand("optimize", "optimal apex angle and minimal distortion");
  add_common(optimize);
  optimize->add_flag("--scan", config.scan, "emit the distortion curve over a in (0, 1)");
  auto* table = app.add_subcommand("table", "distortion of the six projections");
  add_common(table);
  auto* curves = app.add_subcommand("curves", "bi-Lipschitz constants as CSV");
  add_common(curves);
  auto* project = app.add_subcommand("project", "render a projected map as SVG");
  add_common(project);
  project->add_option("--coastlines", config.coastlines, "GeoJSON file with line geometries");
  project->add_option("--lon-step", config.lon_step, "graticule meridian spacing, degrees");
  project->add_option("--lat-step", config.lat_step, "graticule parallel spacing, degrees");
  auto* reproduce = app.add_subcommand("reproduce", "recompute the published values");
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadParameters;
  }
  config.anchor = anchors.at(anchor_name);

  try {
    if (*optimize) return cmd_optimize(config, out);
    if (*table) return cmd_table(config, out);
    if (*curves) return cmd_curves(config, out);
    if (*project) return cmd_project(config, out);
    return cmd_reproduce(config, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputParseFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  }
}

}  // namespace conicmap::cli
