#include "conicmap/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conicmap/errors.hpp"

namespace conicmap {

namespace {

void require_height(double rho, const char* what) {
  if (!(rho > -1.0 && rho < 1.0))
    throw DomainError(std::string(what) + ": height must lie in (-1, 1)");
}

void require_nonzero(const PlanarPoint& z, const char* what) {
  if (!std::isfinite(z.value.real()) || !std::isfinite(z.value.imag()) ||
      std::abs(z.value) == 0.0)
    throw DomainError(std::string(what) +
                      ": z must be finite and nonzero (puncture)");
}

// log of sqrt(1 - rho^2)
double log_parallel_radius(double rho) {
  return 0.5 * (std::log1p(-rho) + std::log1p(rho));
}

}  // namespace

LambertChart::LambertChart(double alpha, double rho0)
    : rho0_(rho0), cone_(cone_touching_parallel(alpha, rho0)) {
  log_r_norm_ =
      (log_parallel_radius(rho0) - std::log(cone_.sin_alpha())) /
      cone_.sin_alpha();
}

double LambertChart::log_radius_for_height(double rho) const {
  require_height(rho, "LambertChart::radius_for_height");
  // log sqrt((1-rho)/(1+rho)) = -atanh(rho)
  return log_r_norm_ - std::atanh(rho) + std::atanh(rho0_);
}

double LambertChart::radius_for_height(double rho) const {
  return std::exp(log_radius_for_height(rho));
}

ConePoint phi1(const LambertChart& chart, const PlanarPoint& z) {
  require_nonzero(z, "phi1");
  const double slant = std::exp(chart.sin_alpha() * std::log(std::abs(z.value)));
  return chart.cone().point(slant, std::arg(z.value));
}

SphericalPoint phi2(const LambertChart& chart, const PlanarPoint& z) {
  require_nonzero(z, "phi2");
  // w = r_norm sqrt(q) / z; log|w| = atanh(rho)
  const double log_w = chart.log_r_norm() + std::atanh(chart.rho0()) -
                       std::log(std::abs(z.value));
  const double rho = std::tanh(log_w);
  if (!(rho > -1.0 && rho < 1.0))
    throw DomainError("phi2: |z| maps onto a pole");
  return SphericalPoint(-std::arg(z.value), rho);
}

PlanarPoint phi2_inverse(const LambertChart& chart, const SphericalPoint& p) {
  const double log_z = chart.log_radius_for_height(p.rho());
  return {std::polar(std::exp(log_z), -p.theta()), Plane::Z};
}

ConePoint lambert_map(const LambertChart& chart, const SphericalPoint& p) {
  const PlanarPoint z = phi2_inverse(chart, p);
  return phi1(chart, {std::conj(z.value), Plane::Z});
}

double lambert_slant_distance(const LambertChart& chart, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < kPi))
    throw DomainError("lambert_slant_distance: colatitude must lie in (0, pi)");
  const double sa = chart.sin_alpha();
  const double rho0 = chart.rho0();
  const double log_dist = log_parallel_radius(rho0) - std::log(sa) +
                          0.5 * sa * (std::log1p(rho0) - std::log1p(-rho0)) +
                          sa * std::log(std::tan(0.5 * epsilon));
  return std::exp(log_dist);
}

double log_lipschitz_L(double rho, double alpha, double rho0) {
  require_height(rho, "lipschitz_L");
  require_height(rho0, "lipschitz_L");
  if (!(alpha > 0.0 && alpha <= kPi / 2.0))
    throw DomainError("lipschitz_L: alpha must lie in (0, pi/2]");
  const double sa = alpha == kPi / 2.0 ? 1.0 : std::sin(alpha);
  const double log_lambda = (1.0 - sa) * std::log1p(-rho0) +
                            (1.0 + sa) * std::log1p(rho0) -
                            (1.0 - sa) * std::log1p(-rho) -
                            (1.0 + sa) * std::log1p(rho);
  return 0.5 * log_lambda;
}

double lipschitz_L(double rho, double alpha, double rho0) {
  return std::exp(log_lipschitz_L(rho, alpha, rho0));
}

double lambda_ratio(double radius, const LambertChart& chart) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw DomainError("lambda_ratio: radius must be positive");
  const double sa = chart.sin_alpha();
  const double log_r = std::log(radius);
  // log(r_norm^2 q) with log q = 2 atanh(rho0)
  const double log_c2 = 2.0 * chart.log_r_norm() + 2.0 * std::atanh(chart.rho0());
  const double hi = std::max(log_c2, 2.0 * log_r);
  const double lo = std::min(log_c2, 2.0 * log_r);
  const double log_sum = hi + std::log1p(std::exp(lo - hi));
  // (R^{s-1} s)^2 (r_norm^2 q + R^2)^2 / (4 r_norm^2 q)
  const double log_lambda = 2.0 * ((sa - 1.0) * log_r + std::log(sa)) +
                            2.0 * log_sum - std::log(4.0) - log_c2;
  return std::exp(log_lambda);
}

}  // namespace conicmap
