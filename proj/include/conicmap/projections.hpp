#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conicmap/cone.hpp"
#include "conicmap/conformal.hpp"
#include "conicmap/stretch.hpp"

namespace conicmap {

/// The six conical projections, in the order of the published comparison.
enum class ProjectionKind {
  Central,
  DelisleMO,
  DelisleEquidistant,
  Orthogonal,
  Teichmuller,
  Lambert,
};

inline constexpr std::array<ProjectionKind, 6> kAllKinds = {
    ProjectionKind::Central,     ProjectionKind::DelisleMO,
    ProjectionKind::DelisleEquidistant, ProjectionKind::Orthogonal,
    ProjectionKind::Teichmuller, ProjectionKind::Lambert};

std::string_view to_string(ProjectionKind kind);
/// Accepts the names produced by to_string, case-insensitively, plus the
/// short forms "delisle" and "equidistant". Throws InvalidKind.
ProjectionKind parse_kind(std::string_view name);

/// Which parallel an equidistant conical projection keeps at its true radius.
enum class EquidistantAnchor { Lower, Upper, Middle };

std::string_view to_string(EquidistantAnchor anchor);

inline constexpr double kCanonicalRho1 = 0.737277;
inline constexpr double kCanonicalRho2 = 0.887011;
/// sin(67.5 deg), the northern parallel quoted in the text of the comparison.
inline constexpr double kAlternateRho2 = 0.92388;

struct ProjectionParams {
  double rho1 = kCanonicalRho1;
  double rho2 = kCanonicalRho2;
  /// Half-apex angle for the Lambert kind; by default the optimal angle.
  std::optional<double> alpha_override;
  EquidistantAnchor anchor = EquidistantAnchor::Lower;

  /// Throws DomainError unless -1 < rho1 < rho2 < 1.
  void validate() const;
};

/// A conical projection of the annulus A(rho1, rho2) that sends meridians to
/// generators and parallels to circles about the apex, encoded by the slant
/// distance s(eps) of the image of the parallel at colatitude eps.
class MeridianProfile {
 public:
  /// Equidistant profile s(eps) = slant_at_lower - (eps_lo - eps) on an
  /// arbitrary cone, for the annulus between heights rho1 < rho2.
  static MeridianProfile equidistant(const Cone& cone, double rho1,
                                     double rho2, double slant_at_lower);

  ProjectionKind kind() const noexcept { return kind_; }
  const Cone& cone() const noexcept { return cone_; }
  /// Colatitude of the lower parallel (the larger colatitude).
  double eps_lo() const noexcept { return eps_lo_; }
  /// Colatitude of the upper parallel.
  double eps_hi() const noexcept { return eps_hi_; }
  double rho1() const noexcept { return rho1_; }
  double rho2() const noexcept { return rho2_; }

  double slant(double eps) const;
  double slant_derivative(double eps) const;
  double slant_at_height(double rho) const;

  /// Meridian scaling factor of the Delisle family, the dilatation of the
  /// Teichmueller map; 1 otherwise.
  double coefficient() const noexcept { return coefficient_; }

 private:
  friend MeridianProfile make_profile(ProjectionKind, const ProjectionParams&);

  MeridianProfile(ProjectionKind kind, const Cone& cone, double rho1,
                  double rho2);

  ProjectionKind kind_;
  Cone cone_;
  double rho1_;
  double rho2_;
  double eps_lo_;
  double eps_hi_;
  // kind-specific constants
  double coefficient_ = 1.0;
  double offset_ = 0.0;
  std::optional<LambertChart> chart_;
};

/// Builds the profile of `kind` on its default cone: the Lambert kind on
/// cone_touching_parallel(alpha0, rho1), the other kinds on
/// cone_through_parallels(rho1, rho2).
MeridianProfile make_profile(ProjectionKind kind, const ProjectionParams& params);

/// Position on the developed map plane. The apex is the origin, the central
/// meridian (opposite the cut) runs along the negative y-axis, and a
/// parallel sweep covers an arc of angle 2 pi sin(alpha).
///
/// Throws OutOfAnnulus if p is outside the annulus by more than 1e-9 in
/// height, OnCutMeridian if p lies on the cut meridian.
PlanarPoint project_point(const MeridianProfile& profile, const SphericalPoint& p,
                          double cut_longitude = kPi);

/// Developed position from the offset to the central meridian, psi in
/// [-pi, pi], and the height. No cut check.
PlanarPoint project_offset(const MeridianProfile& profile, double offset,
                           double rho);

/// Principal stretches at height rho: h_meridian = |s'(eps)| and
/// h_parallel = s(eps) sin(alpha) / sin(eps). Throws OutOfAnnulus.
StretchSample stretch_at(const MeridianProfile& profile, double rho);

struct ComparisonRow {
  ProjectionKind kind;
  DistortionReport report;
};

/// Distortion of all six projections, in kAllKinds order.
std::vector<ComparisonRow> compare_all(const ProjectionParams& params,
                                       int n_grid = 4097);

}  // namespace conicmap
