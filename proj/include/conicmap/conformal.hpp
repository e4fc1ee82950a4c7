#pragma once

#include <complex>

#include "conicmap/cone.hpp"
#include "conicmap/sphere.hpp"

namespace conicmap {

/// Normalized data of the conformal map from the twice-punctured sphere onto
/// the punctured cone C(alpha, rho0 + h(alpha, rho0)) that is the identity on
/// the parallel at rho0.
///
/// The map factors through the z-plane:
///   phi1(z) = develop^{-1}(z^{sin(alpha)})                 z-plane -> cone
///   phi2(z) = stereographic^{-1}(r_norm sqrt(q) / z)       z-plane -> sphere
/// with q = (1 + rho0) / (1 - rho0) and
/// r_norm = (sqrt(1 - rho0^2) / sin(alpha))^{1 / sin(alpha)}, so that both
/// send the circle |z| = r_norm onto the parallel at rho0.
class LambertChart {
 public:
  /// Throws as cone_touching_parallel does.
  LambertChart(double alpha, double rho0);

  double alpha() const noexcept { return cone_.alpha(); }
  double sin_alpha() const noexcept { return cone_.sin_alpha(); }
  double rho0() const noexcept { return rho0_; }
  double r_norm() const noexcept { return std::exp(log_r_norm_); }
  double log_r_norm() const noexcept { return log_r_norm_; }
  const Cone& cone() const noexcept { return cone_; }

  /// log|z| of the circle phi2 sends onto the parallel at height rho.
  double log_radius_for_height(double rho) const;
  /// R = r_norm sqrt((1 - rho)/(1 + rho)) sqrt(q).
  double radius_for_height(double rho) const;

 private:
  double rho0_;
  Cone cone_;
  double log_r_norm_;
};

/// Throws DomainError for z = 0 (the apex).
ConePoint phi1(const LambertChart& chart, const PlanarPoint& z);

/// Throws DomainError for z = 0. Reverses the angular orientation: the
/// point with argument Theta lands on longitude -Theta.
SphericalPoint phi2(const LambertChart& chart, const PlanarPoint& z);

PlanarPoint phi2_inverse(const LambertChart& chart, const SphericalPoint& p);

/// The Lambert conformal conical projection phi1 o conj o phi2^{-1}. The
/// conjugation undoes the orientation flip of phi2, so the returned point
/// has the same longitude as p.
ConePoint lambert_map(const LambertChart& chart, const SphericalPoint& p);

/// Slant distance of the image of the parallel at colatitude epsilon,
///   sqrt(1 - rho0^2)/sin(a) ((1 + rho0)/(1 - rho0))^{sin(a)/2} tan(eps/2)^{sin(a)}.
/// Throws DomainError unless 0 < epsilon < pi.
double lambert_slant_distance(const LambertChart& chart, double epsilon);

/// log L(rho, alpha, rho0), evaluated entirely in log space.
double log_lipschitz_L(double rho, double alpha, double rho0);

/// Infinitesimal Lipschitz constant of the normalized Lambert map at height rho:
///   L^2 = (1-rho0)^{1-sin a} (1+rho0)^{1+sin a} / ((1-rho)^{1-sin a} (1+rho)^{1+sin a}).
/// alpha = pi/2 is admitted as the stereographic limit.
double lipschitz_L(double rho, double alpha, double rho0);

/// Ratio of the pulled-back cone metric to the pulled-back sphere metric on
/// the z-plane, as a function of R = |z|. Equals L^2 at the height of
/// the circle |z| = R. Throws DomainError unless R > 0.
double lambda_ratio(double radius, const LambertChart& chart);

}  // namespace conicmap
