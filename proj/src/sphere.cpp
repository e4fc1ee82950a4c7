#include "conicmap/sphere.hpp"

#include <cmath>

#include "conicmap/errors.hpp"

namespace conicmap {

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

SphericalPoint::SphericalPoint(double theta, double rho) {
  if (!std::isfinite(theta))
    throw DomainError("SphericalPoint: longitude is not finite");
  if (!(rho > -1.0 && rho < 1.0))
    throw DomainError("SphericalPoint: height must lie in (-1, 1), got " +
                      std::to_string(rho));
  theta_ = normalize_angle(theta);
  rho_ = rho;
}

SphericalPoint SphericalPoint::from_vector(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n))
    throw DomainError("SphericalPoint: cannot normalize a zero vector");
  return SphericalPoint(std::atan2(v.y, v.x), v.z / n);
}

double SphericalPoint::colatitude() const { return std::acos(rho_); }

double SphericalPoint::latitude() const { return std::asin(rho_); }

Vec3 SphericalPoint::embed() const {
  // sqrt(1 - rho^2) written to keep accuracy near the poles
  const double r = std::sqrt((1.0 - rho_) * (1.0 + rho_));
  return {r * std::cos(theta_), r * std::sin(theta_), rho_};
}

SphericalAnnulus::SphericalAnnulus(double rho1, double rho2) {
  if (!(rho1 > -1.0 && rho2 < 1.0 && rho1 < rho2))
    throw DomainError("SphericalAnnulus: need -1 < rho1 < rho2 < 1");
  rho1_ = rho1;
  rho2_ = rho2;
}

PlanarPoint stereographic_project(const SphericalPoint& p) {
  // log|w| = atanh(rho)
  const double modulus = std::exp(std::atanh(p.rho()));
  return {std::polar(modulus, p.theta()), Plane::W};
}

SphericalPoint stereographic_unproject(std::complex<double> w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw DomainError("stereographic_unproject: w is not finite");
  const double modulus = std::abs(w);
  if (modulus == 0.0)
    throw DomainError("stereographic_unproject: w = 0 is the south pole");
  // (|w|^2 - 1) / (|w|^2 + 1) = tanh(log|w|)
  const double rho = std::tanh(std::log(modulus));
  if (!(rho > -1.0 && rho < 1.0))
    throw DomainError("stereographic_unproject: |w| maps onto a pole");
  return SphericalPoint(std::arg(w), rho);
}

double spherical_distance(const SphericalPoint& p, const SphericalPoint& q) {
  const Vec3 a = p.embed();
  const Vec3 b = q.embed();
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

SphericalPoint spherical_midpoint(const SphericalPoint& p,
                                  const SphericalPoint& q) {
  const Vec3 sum = p.embed() + q.embed();
  if (norm(sum) < 1e-12)
    throw DomainError("spherical_midpoint: antipodal points");
  return SphericalPoint::from_vector(sum);
}

double annulus_modulus(const SphericalAnnulus& a) {
  const double r1 = a.rho1();
  const double r2 = a.rho2();
  // log((1-r1)/(1+r1)) + log((1+r2)/(1-r2)) = 2 (atanh r2 - atanh r1)
  return (std::atanh(r2) - std::atanh(r1)) / kTwoPi;
}

}  // namespace conicmap
