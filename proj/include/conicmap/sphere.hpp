#pragma once

#include <complex>
#include <numbers>

namespace conicmap {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

/// Reduces an angle to [0, 2pi).
double normalize_angle(double theta);

/// Point of the unit sphere in (longitude, height) coordinates. The poles are
/// outside the chart.
class SphericalPoint {
 public:
  /// Throws DomainError unless -1 < rho < 1 and theta is finite. theta is
  /// reduced to [0, 2pi).
  SphericalPoint(double theta, double rho);

  /// From a nonzero vector of R^3 (normalized internally).
  static SphericalPoint from_vector(const Vec3& v);

  double theta() const noexcept { return theta_; }
  double rho() const noexcept { return rho_; }
  /// Spherical distance from the north pole, arccos(rho).
  double colatitude() const;
  double latitude() const;
  Vec3 embed() const;

 private:
  double theta_;
  double rho_;
};

/// Open annulus between the parallels at heights rho1 < rho2.
class SphericalAnnulus {
 public:
  SphericalAnnulus(double rho1, double rho2);

  double rho1() const noexcept { return rho1_; }
  double rho2() const noexcept { return rho2_; }
  bool contains(double rho, double tolerance = 0.0) const {
    return rho >= rho1_ - tolerance && rho <= rho2_ + tolerance;
  }

 private:
  double rho1_;
  double rho2_;
};

/// Which complex plane a planar point belongs to.
enum class Plane { W, Z, Sector, Map };

struct PlanarPoint {
  std::complex<double> value;
  Plane plane = Plane::W;

  double re() const { return value.real(); }
  double im() const { return value.imag(); }
};

/// Polar stereographic projection from the north pole,
/// w = sqrt((1+rho)/(1-rho)) e^{i theta}.
PlanarPoint stereographic_project(const SphericalPoint& p);

/// Inverse of stereographic_project. Throws DomainError for w = 0, non-finite
/// w, or |w| so large that the height rounds to 1.
SphericalPoint stereographic_unproject(std::complex<double> w);

/// Great-circle distance in radians, in [0, pi].
double spherical_distance(const SphericalPoint& p, const SphericalPoint& q);

/// Midpoint of the shorter great-circle arc. Throws DomainError for
/// (numerically) antipodal input.
SphericalPoint spherical_midpoint(const SphericalPoint& p,
                                  const SphericalPoint& q);

/// Conformal modulus of A(rho1, rho2), computed through the stereographic
/// image (a round annulus).
double annulus_modulus(const SphericalAnnulus& a);

}  // namespace conicmap
