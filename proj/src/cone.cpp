#include "conicmap/cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conicmap/errors.hpp"

namespace conicmap {

namespace {

bool valid_half_angle(double alpha) {
  return alpha > 0.0 && alpha < kPi / 2.0;
}

}  // namespace

double apex_offset(double alpha, double rho) {
  if (!valid_half_angle(alpha))
    throw DomainError("apex_offset: alpha must lie in (0, pi/2)");
  if (!(rho > -1.0 && rho < 1.0))
    throw DomainError("apex_offset: rho must lie in (-1, 1)");
  return std::sqrt((1.0 - rho) * (1.0 + rho)) / std::tan(alpha);
}

Cone::Cone(double alpha, double apex_z) {
  if (!valid_half_angle(alpha))
    throw DomainError("Cone: half-apex angle must lie in (0, pi/2)");
  if (!std::isfinite(apex_z))
    throw DomainError("Cone: apex height is not finite");
  alpha_ = alpha;
  apex_z_ = apex_z;
  sin_alpha_ = std::sin(alpha);
  cos_alpha_ = std::cos(alpha);
}

ConePoint Cone::point(double slant, double theta) const {
  if (!(slant > 0.0) || !std::isfinite(slant))
    throw DomainError("Cone::point: slant distance must be positive");
  const double t = normalize_angle(theta);
  const double r = slant * sin_alpha_;
  return {slant, t,
          {r * std::cos(t), r * std::sin(t), apex_z_ - slant * cos_alpha_}};
}

double Cone::slant_at_height(double z) const {
  if (!(z < apex_z_))
    throw DomainError("Cone::slant_at_height: height is not below the apex");
  return (apex_z_ - z) / cos_alpha_;
}

double Cone::surface_z(double x, double y) const {
  return apex_z_ - std::hypot(x, y) / tan_alpha();
}

ConicalAnnulus::ConicalAnnulus(const Cone& cone, double s_inner,
                               double s_outer)
    : cone_(cone), s_inner_(s_inner), s_outer_(s_outer) {
  if (!(s_inner > 0.0 && s_inner < s_outer) || !std::isfinite(s_outer))
    throw DomainError("ConicalAnnulus: need 0 < s_inner < s_outer");
}

Cone cone_touching_parallel(double alpha, double rho0) {
  if (!valid_half_angle(alpha))
    throw DomainError("cone_touching_parallel: alpha must lie in (0, pi/2)");
  if (!(rho0 > -1.0 && rho0 < 1.0))
    throw DomainError("cone_touching_parallel: rho0 must lie in (-1, 1)");

  const double apex = rho0 + apex_offset(alpha, rho0);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double as = apex * s;
  if (!(as < 1.0))
    throw ConditionViolation(
        "cone_touching_parallel: (h + rho0) sin(alpha) = " +
        std::to_string(as) + " >= 1, the cone does not cut the sphere twice");

  const double lower = as * s - c * std::sqrt((1.0 - as) * (1.0 + as));
  if (std::abs(lower - rho0) > 1e-10)
    throw ConditionViolation(
        "cone_touching_parallel: the parallel at rho0 is the upper "
        "intersection (sin(alpha) < rho0)");
  return Cone(alpha, apex);
}

Cone cone_through_parallels(double rho1, double rho2) {
  if (!(rho1 > -1.0 && rho2 < 1.0 && rho1 < rho2))
    throw DomainError("cone_through_parallels: need -1 < rho1 < rho2 < 1");
  const double r1 = std::sqrt((1.0 - rho1) * (1.0 + rho1));
  const double r2 = std::sqrt((1.0 - rho2) * (1.0 + rho2));
  const double dr = r1 - r2;
  const double dz = rho2 - rho1;
  if (!(dr > 0.0))
    throw UnsupportedGeometry(
        "cone_through_parallels: the parallels do not determine a cone with "
        "its apex above the north pole (rho1 + rho2 <= 0)");
  const double alpha = std::atan2(dr, dz);
  return Cone(alpha, rho1 + r1 * dz / dr);
}

IntersectionHeights sphere_cone_intersections(const Cone& c) {
  const double apex = c.apex_z();
  const double s = c.sin_alpha();
  const double co = c.cos_alpha();
  const double as = apex * s;
  const double disc = (1.0 - as) * (1.0 + as);
  if (disc < -1e-12)
    throw NoIntersection("sphere_cone_intersections: the cone misses the sphere");
  if (disc <= 1e-12)
    throw TangentIntersection(
        "sphere_cone_intersections: the cone is tangent to the sphere");
  if (!(apex > 1.0))
    throw UnsupportedGeometry(
        "sphere_cone_intersections: apex inside the sphere, the cone meets it "
        "in a single circle");

  // z^2 - 2 b z + q = 0 with b = A s^2, q = A^2 s^2 - c^2.
  const double b = as * s;
  const double q = as * as - co * co;
  const double root = co * std::sqrt(disc);
  const double big = b >= 0.0 ? b + root : b - root;
  const double other = q / big;
  IntersectionHeights h{std::min(big, other), std::max(big, other)};
  if (!(h.low > -1.0 && h.high < 1.0))
    throw NoIntersection("sphere_cone_intersections: roots outside [-1, 1]");
  return h;
}

PlanarPoint develop(const Cone& c, const ConePoint& p) {
  return {std::polar(p.slant, p.theta * c.sin_alpha()), Plane::Sector};
}

ConePoint undevelop(const Cone& c, const PlanarPoint& zeta) {
  double angle = std::arg(zeta.value);
  if (angle < 0.0) angle += kTwoPi;
  return c.point(std::abs(zeta.value), angle / c.sin_alpha());
}

double cone_annulus_modulus(const ConicalAnnulus& b) {
  return std::log(b.s_outer() / b.s_inner()) /
         (kTwoPi * b.cone().sin_alpha());
}

}  // namespace conicmap
