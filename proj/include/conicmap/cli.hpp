#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conicmap/projections.hpp"

namespace conicmap::cli {

enum ExitCode : int {
  kSuccess = 0,
  kReproductionFailure = 1,
  kBadParameters = 2,
  kInputParseFailure = 3,
};

/// Options shared by every subcommand. Defaults are the canonical
/// parameters of the Russian Empire map.
struct RunConfig {
  double rho1 = kCanonicalRho1;
  double rho2 = kCanonicalRho2;
  /// Latitudes override rho1/rho2 when set; degrees if `degrees`, else radians.
  std::optional<double> lat1;
  std::optional<double> lat2;
  bool degrees = false;
  std::optional<double> alpha;
  std::string kind = "lambert";
  /// Cut longitude, radians unless `degrees`.
  std::optional<double> cut;
  /// 0 selects the subcommand's default.
  int samples = 0;
  std::string out;
  std::string csv;
  std::string coastlines;
  bool scan = false;
  EquidistantAnchor anchor = EquidistantAnchor::Lower;
  double lon_step = 10.0;
  double lat_step = 5.0;

  /// Resolved projection parameters; throws DomainError when invalid.
  ProjectionParams params() const;
  double cut_radians() const;
};

/// One line of the reproduction report.
struct ReproductionRow {
  std::string target;
  double published;
  double computed;
  double tolerance;
  bool pass;
  std::string note;
};

/// Every published numerical target, recomputed for the given annulus.
std::vector<ReproductionRow> reproduction_rows(const ProjectionParams& params);

int cmd_optimize(const RunConfig& config, std::ostream& out);
int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_curves(const RunConfig& config, std::ostream& out);
int cmd_project(const RunConfig& config, std::ostream& out);
int cmd_reproduce(const RunConfig& config, std::ostream& out);

/// Parses the command line and dispatches. Library errors are reported on
/// `err` and mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conicmap::cli
