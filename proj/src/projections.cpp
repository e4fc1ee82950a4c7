#include "conicmap/projections.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "conicmap/distortion.hpp"
#include "conicmap/errors.hpp"

namespace conicmap {

namespace {

double parallel_radius(double rho) {
  return std::sqrt((1.0 - rho) * (1.0 + rho));
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

StretchSample make_stretch_sample(double rho, double h_meridian,
                                  double h_parallel) {
  const double sigma = std::max({h_meridian, h_parallel, 1.0 / h_meridian,
                                 1.0 / h_parallel});
  return {rho, h_meridian, h_parallel, sigma};
}

std::string_view to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::Central: return "Central";
    case ProjectionKind::DelisleMO: return "DelisleMO";
    case ProjectionKind::DelisleEquidistant: return "DelisleEquidistant";
    case ProjectionKind::Orthogonal: return "Orthogonal";
    case ProjectionKind::Teichmuller: return "Teichmuller";
    case ProjectionKind::Lambert: return "Lambert";
  }
  throw InvalidKind("unknown projection kind");
}

ProjectionKind parse_kind(std::string_view name) {
  const std::string key = lowercase(name);
  for (ProjectionKind kind : kAllKinds)
    if (lowercase(to_string(kind)) == key) return kind;
  if (key == "delisle") return ProjectionKind::DelisleMO;
  if (key == "equidistant") return ProjectionKind::DelisleEquidistant;
  throw InvalidKind("unknown projection kind '" + std::string(name) + "'");
}

std::string_view to_string(EquidistantAnchor anchor) {
  switch (anchor) {
    case EquidistantAnchor::Lower: return "lower";
    case EquidistantAnchor::Upper: return "upper";
    case EquidistantAnchor::Middle: return "middle";
  }
  return "lower";
}

void ProjectionParams::validate() const {
  if (!(rho1 > -1.0 && rho2 < 1.0 && rho1 < rho2))
    throw DomainError("projection parameters: need -1 < rho1 < rho2 < 1 (got rho1 = " +
                      std::to_string(rho1) + ", rho2 = " + std::to_string(rho2) + ")");
  if (alpha_override && !(*alpha_override > 0.0 && *alpha_override < kPi / 2.0))
    throw DomainError("projection parameters: alpha must lie in (0, pi/2)");
}

MeridianProfile::MeridianProfile(ProjectionKind kind, const Cone& cone,
                                 double rho1, double rho2)
    : kind_(kind),
      cone_(cone),
      rho1_(rho1),
      rho2_(rho2),
      eps_lo_(std::acos(rho1)),
      eps_hi_(std::acos(rho2)) {}

MeridianProfile MeridianProfile::equidistant(const Cone& cone, double rho1,
                                             double rho2,
                                             double slant_at_lower) {
  static_cast<void>(SphericalAnnulus(rho1, rho2));
  MeridianProfile p(ProjectionKind::DelisleEquidistant, cone, rho1, rho2);
  p.offset_ = slant_at_lower - p.eps_lo_;
  return p;
}

double MeridianProfile::slant(double eps) const {
  const double sa = cone_.sin_alpha();
  switch (kind_) {
    case ProjectionKind::Central: {
      const double d = std::cos(eps) + std::sin(eps) / cone_.tan_alpha();
      return cone_.apex_z() * std::sin(eps) / (sa * d);
    }
    case ProjectionKind::Orthogonal:
      return std::sin(eps) * sa - cone_.cos_alpha() * (std::cos(eps) - cone_.apex_z());
    case ProjectionKind::DelisleMO:
      return offset_ + coefficient_ * eps;
    case ProjectionKind::DelisleEquidistant:
      return offset_ + eps;
    case ProjectionKind::Teichmuller:
      return offset_ * std::exp(coefficient_ * sa *
                                (std::atanh(rho1_) - std::atanh(std::cos(eps))));
    case ProjectionKind::Lambert:
      return lambert_slant_distance(*chart_, eps);
  }
  throw InvalidKind("unknown projection kind");
}

double MeridianProfile::slant_derivative(double eps) const {
  const double sa = cone_.sin_alpha();
  switch (kind_) {
    case ProjectionKind::Central: {
      const double d = std::cos(eps) + std::sin(eps) / cone_.tan_alpha();
      return cone_.apex_z() / (sa * d * d);
    }
    case ProjectionKind::Orthogonal:
      return std::cos(eps) * sa + cone_.cos_alpha() * std::sin(eps);
    case ProjectionKind::DelisleMO:
      return coefficient_;
    case ProjectionKind::DelisleEquidistant:
      return 1.0;
    case ProjectionKind::Teichmuller:
      return coefficient_ * sa * slant(eps) / std::sin(eps);
    case ProjectionKind::Lambert:
      return sa * slant(eps) / std::sin(eps);
  }
  throw InvalidKind("unknown projection kind");
}

double MeridianProfile::slant_at_height(double rho) const {
  return slant(std::acos(rho));
}

MeridianProfile make_profile(ProjectionKind kind, const ProjectionParams& params) {
  params.validate();
  const double rho1 = params.rho1;
  const double rho2 = params.rho2;

  if (kind == ProjectionKind::Lambert) {
    const double alpha = params.alpha_override
                             ? *params.alpha_override
                             : optimal_alpha_by_root(rho1, rho2);
    LambertChart chart(alpha, rho1);
    MeridianProfile p(kind, chart.cone(), rho1, rho2);
    p.chart_ = chart;
    return p;
  }
  if (params.alpha_override)
    throw DomainError(std::string(to_string(kind)) +
                      ": the apex angle is fixed by the two parallels");

  const Cone cone = cone_through_parallels(rho1, rho2);
  MeridianProfile p(kind, cone, rho1, rho2);
  const double s1 = parallel_radius(rho1) / cone.sin_alpha();
  const double s2 = parallel_radius(rho2) / cone.sin_alpha();
  const double e1 = p.eps_lo_;
  const double e2 = p.eps_hi_;

  switch (kind) {
    case ProjectionKind::Central:
    case ProjectionKind::Orthogonal:
      break;
    case ProjectionKind::DelisleMO:
      p.coefficient_ = (s1 - s2) / (e1 - e2);
      p.offset_ = s2 - p.coefficient_ * e2;
      break;
    case ProjectionKind::DelisleEquidistant:
      switch (params.anchor) {
        case EquidistantAnchor::Lower: p.offset_ = s1 - e1; break;
        case EquidistantAnchor::Upper: p.offset_ = s2 - e2; break;
        case EquidistantAnchor::Middle: p.offset_ = 0.5 * (s1 + s2) - 0.5 * (e1 + e2); break;
      }
      break;
    case ProjectionKind::Teichmuller: {
      const double mod_a = annulus_modulus(SphericalAnnulus(rho1, rho2));
      const double mod_b = cone_annulus_modulus(ConicalAnnulus(cone, s2, s1));
      p.coefficient_ = mod_b / mod_a;
      p.offset_ = s1;
      break;
    }
    case ProjectionKind::Lambert:
      break;
  }
  return p;
}

PlanarPoint project_offset(const MeridianProfile& profile, double offset,
                           double rho) {
  const double psi = offset * profile.cone().sin_alpha();
  const double s = profile.slant_at_height(rho);
  return {{s * std::sin(psi), -s * std::cos(psi)}, Plane::Map};
}

PlanarPoint project_point(const MeridianProfile& profile, const SphericalPoint& p,
                          double cut_longitude) {
  const double rho = p.rho();
  if (rho < profile.rho1() - 1e-9 || rho > profile.rho2() + 1e-9)
    throw OutOfAnnulus("project_point: height " + std::to_string(rho) +
                       " is outside the projected annulus");
  // offset from the central meridian, in (-pi, pi]
  double offset = normalize_angle(p.theta() - cut_longitude);  // [0, 2pi)
  if (offset < 1e-12 || offset > kTwoPi - 1e-12)
    throw OnCutMeridian("project_point: the point lies on the cut meridian");
  offset -= kPi;
  return project_offset(profile, offset,
                        std::clamp(rho, profile.rho1(), profile.rho2()));
}

StretchSample stretch_at(const MeridianProfile& profile, double rho) {
  if (!(rho >= profile.rho1() - 1e-9 && rho <= profile.rho2() + 1e-9))
    throw OutOfAnnulus("stretch_at: height " + std::to_string(rho) +
                       " is outside the projected annulus");
  const double eps = std::acos(std::clamp(rho, profile.rho1(), profile.rho2()));
  const double h_m = std::abs(profile.slant_derivative(eps));
  const double h_p = profile.slant(eps) * profile.cone().sin_alpha() / std::sin(eps);
  return make_stretch_sample(rho, h_m, h_p);
}

std::vector<ComparisonRow> compare_all(const ProjectionParams& params, int n_grid) {
  std::vector<ComparisonRow> rows;
  rows.reserve(kAllKinds.size());
  for (ProjectionKind kind : kAllKinds)
    rows.push_back({kind, profile_distortion(make_profile(kind, params), n_grid)});
  return rows;
}

}  // namespace conicmap
