#pragma once

#include <vector>

#include "conicmap/projections.hpp"
#include "conicmap/stretch.hpp"

namespace conicmap {

/// log F(x, y, z) where
///   F(x, y, z) = (1+z)^{1+y} (1-z)^{1-y} / ((1+x)^{1+y} (1-x)^{1-y}).
/// All arguments in (-1, 1); throws DomainError otherwise.
double log_f_function(double x, double y, double z);
double f_function(double x, double y, double z);

/// Distortion log(sup L / inf L) of the Lambert map with half-apex angle
/// alpha, normalized at rho0, over A(rho1, rho2). Closed form: the sup of the
/// convex L^2 is at an endpoint; the inf is at rho = sin(alpha) clamped to
/// [rho1, rho2].
double delta_distortion(double rho1, double rho2, double alpha, double rho0);

/// Same as delta_distortion, parametrized by a = sin(alpha) in (-1, 1).
double delta_distortion_sin(double rho1, double rho2, double a, double rho0);

/// Root a0 of F(rho2, a, rho1) = 1 by bisection on a. This is sin(alpha0).
double optimal_sin_alpha_by_root(double rho1, double rho2);
double optimal_alpha_by_root(double rho1, double rho2);

/// Minimizer of a -> delta(rho1, rho2, arcsin a, rho1) by golden-section
/// search. This is sin(alpha0).
double optimal_sin_alpha_by_scan(double rho1, double rho2);
double optimal_alpha_by_scan(double rho1, double rho2);

/// Stretch of the optimal Lambert map sampled at n >= 2 heights clustered
/// toward both ends of [rho1, rho2].
std::vector<StretchSample> sigma_curve(double rho1, double rho2, int n);

/// Sup and inf of the log-stretch of a profile over both principal
/// directions, from a grid of n_grid >= 64 colatitudes clustered at both
/// ends, refined by golden-section search around interior grid extrema.
/// Ties resolve toward the smaller height. Throws NonPositiveStretch.
DistortionReport profile_distortion(const MeridianProfile& profile,
                                    int n_grid = 4097);

}  // namespace conicmap
