#pragma once

#include "conicmap/sphere.hpp"

namespace conicmap {

/// h(alpha, rho) = sqrt(1 - rho^2) / tan(alpha): height of the apex above the
/// parallel at rho for a cone of half-apex angle alpha through that parallel.
double apex_offset(double alpha, double rho);

/// Point of a cone: distance from the apex along the surface, the spherical
/// longitude of its generator, and its position in R^3.
struct ConePoint {
  double slant;
  double theta;
  Vec3 position;
};

/// Circular cone about the z-axis with the apex at (0, 0, apex_z), opening
/// downward, with half-apex angle alpha in (0, pi/2).
class Cone {
 public:
  Cone(double alpha, double apex_z);

  double alpha() const noexcept { return alpha_; }
  double apex_z() const noexcept { return apex_z_; }
  double sin_alpha() const noexcept { return sin_alpha_; }
  double cos_alpha() const noexcept { return cos_alpha_; }
  double tan_alpha() const noexcept { return sin_alpha_ / cos_alpha_; }

  /// Point at the given slant distance on the generator of longitude theta.
  /// Throws DomainError unless slant > 0.
  ConePoint point(double slant, double theta) const;

  /// Slant distance of the circle of the cone at height z (z < apex_z).
  double slant_at_height(double z) const;

  /// Z = apex_z - sqrt(X^2 + Y^2) / tan(alpha).
  double surface_z(double x, double y) const;

 private:
  double alpha_;
  double apex_z_;
  double sin_alpha_;
  double cos_alpha_;
};

/// Open conical annulus between two circles centred at the apex.
class ConicalAnnulus {
 public:
  ConicalAnnulus(const Cone& cone, double s_inner, double s_outer);

  const Cone& cone() const noexcept { return cone_; }
  double s_inner() const noexcept { return s_inner_; }
  double s_outer() const noexcept { return s_outer_; }

 private:
  Cone cone_;
  double s_inner_;
  double s_outer_;
};

struct IntersectionHeights {
  double low;
  double high;
};

/// The cone C(alpha, rho0 + h(alpha, rho0)) whose lower intersection with
/// the sphere is the parallel at rho0.
///
/// Throws ConditionViolation if (h + rho0) sin(alpha) >= 1 (the cone misses
/// or touches the sphere), or if rho0 would be the upper rather than the lower
/// intersection (sin(alpha) < rho0).
Cone cone_touching_parallel(double alpha, double rho0);

/// The cone meeting the sphere along the parallels at rho1 < rho2.
/// Throws UnsupportedGeometry when rho1 + rho2 <= 0 (cylinder or apex below
/// the south pole side).
Cone cone_through_parallels(double rho1, double rho2);

/// Heights of the two circles where the downward cone meets the unit sphere.
///
/// With A = apex_z and s = sin(alpha), c = cos(alpha), the heights are the
/// roots of z^2 - 2 A s^2 z + (A^2 s^2 - c^2) = 0, whose reduced
/// discriminant is 1 - (A s)^2. Throws NoIntersection if the discriminant is
/// below -1e-12, TangentIntersection if it is within 1e-12 of zero, and
/// UnsupportedGeometry if the apex is inside the sphere (the nappe then meets
/// the sphere only once).
IntersectionHeights sphere_cone_intersections(const Cone& c);

/// Isometric development onto the sector plane: zeta = slant e^{i theta sin(alpha)}.
PlanarPoint develop(const Cone& c, const ConePoint& p);

/// Inverse of develop for points of the sector 0 <= arg < 2 pi sin(alpha).
ConePoint undevelop(const Cone& c, const PlanarPoint& zeta);

/// log(s_outer / s_inner) / (2 pi sin(alpha)).
double cone_annulus_modulus(const ConicalAnnulus& b);

}  // namespace conicmap
