#include "conicmap/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conicmap/conformal.hpp"
#include "conicmap/errors.hpp"
#include "conicmap/numeric.hpp"

namespace conicmap {

namespace {

void require_open_unit(double v, const char* name) {
  if (!(v > -1.0 && v < 1.0))
    throw DomainError(std::string(name) + " must lie in (-1, 1)");
}

void require_pair(double rho1, double rho2) {
  if (!(rho1 > -1.0 && rho2 < 1.0 && rho1 < rho2))
    throw DomainError("need -1 < rho1 < rho2 < 1");
}

// Chebyshev-Lobatto nodes on [lo, hi], ascending.
double clustered_node(double lo, double hi, int i, int n) {
  const double t = std::cos(kPi * static_cast<double>(i) / (n - 1));
  if (i == 0) return lo;
  if (i == n - 1) return hi;
  return 0.5 * (lo + hi) - 0.5 * (hi - lo) * t;
}

}  // namespace

double log_f_function(double x, double y, double z) {
  require_open_unit(x, "x");
  require_open_unit(y, "y");
  require_open_unit(z, "z");
  return (1.0 + y) * (std::log1p(z) - std::log1p(x)) +
         (1.0 - y) * (std::log1p(-z) - std::log1p(-x));
}

double f_function(double x, double y, double z) {
  return std::exp(log_f_function(x, y, z));
}

double delta_distortion_sin(double rho1, double rho2, double a, double rho0) {
  require_pair(rho1, rho2);
  require_open_unit(a, "sin(alpha)");
  require_open_unit(rho0, "rho0");
  // log Lambda(rho) = log F(rho, a, rho0)
  const auto log_lambda = [&](double rho) { return log_f_function(rho, a, rho0); };
  const double sup = std::max(log_lambda(rho1), log_lambda(rho2));
  const double inf = log_lambda(std::clamp(a, rho1, rho2));
  return 0.5 * (sup - inf);
}

double delta_distortion(double rho1, double rho2, double alpha, double rho0) {
  if (!(alpha > 0.0 && alpha < kPi / 2.0))
    throw DomainError("delta_distortion: alpha must lie in (0, pi/2)");
  return delta_distortion_sin(rho1, rho2, std::sin(alpha), rho0);
}

double optimal_sin_alpha_by_root(double rho1, double rho2) {
  require_pair(rho1, rho2);
  // log F(rho2, a, rho1) decreases strictly from 2 log((1-rho1)/(1-rho2)) > 0
  // to 2 log((1+rho1)/(1+rho2)) < 0.
  const auto g = [&](double a) { return log_f_function(rho2, a, rho1); };
  // Bisect to the last representable bracket. |F - 1| < 1e-14 alone leaves
  // an error of 1e-14 / |d log F / da| in a, large for thin annuli.
  return numeric::bisect(g, -1.0 + 1e-12, 1.0 - 1e-12, 0.0);
}

double optimal_alpha_by_root(double rho1, double rho2) {
  return std::asin(optimal_sin_alpha_by_root(rho1, rho2));
}

double optimal_sin_alpha_by_scan(double rho1, double rho2) {
  require_pair(rho1, rho2);
  const auto delta = [&](double a) {
    return delta_distortion_sin(rho1, rho2, a, rho1);
  };
  return numeric::golden_section_minimize(delta, -1.0 + 1e-9, 1.0 - 1e-9, 1e-12).x;
}

double optimal_alpha_by_scan(double rho1, double rho2) {
  return std::asin(optimal_sin_alpha_by_scan(rho1, rho2));
}

std::vector<StretchSample> sigma_curve(double rho1, double rho2, int n) {
  require_pair(rho1, rho2);
  if (n < 2) throw DomainError("sigma_curve: need at least two samples");
  const double alpha0 = optimal_alpha_by_root(rho1, rho2);
  std::vector<StretchSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double rho = clustered_node(rho1, rho2, i, n);
    const double l = lipschitz_L(rho, alpha0, rho1);
    out.push_back(make_stretch_sample(rho, l, l));
  }
  return out;
}

DistortionReport profile_distortion(const MeridianProfile& profile, int n_grid) {
  if (n_grid < 64) throw DomainError("profile_distortion: n_grid must be >= 64");
  const double sa = profile.cone().sin_alpha();

  const auto log_hm = [&](double eps) {
    const double d = profile.slant_derivative(eps);
    if (!(d > 0.0) || !std::isfinite(d))
      throw NonPositiveStretch("profile_distortion: meridian stretch vanishes");
    return std::log(d);
  };
  const auto log_hp = [&](double eps) {
    const double s = profile.slant(eps);
    if (!(s > 0.0) || !std::isfinite(s))
      throw NonPositiveStretch("profile_distortion: slant distance is not positive");
    return std::log(s * sa / std::sin(eps));
  };

  // Ascending heights: eps runs from eps_lo down to eps_hi.
  const double e_lo = profile.eps_lo();
  const double e_hi = profile.eps_hi();
  std::vector<double> eps(static_cast<std::size_t>(n_grid));
  std::vector<double> hm(eps.size());
  std::vector<double> hp(eps.size());
  for (int i = 0; i < n_grid; ++i) {
    const auto k = static_cast<std::size_t>(i);
    eps[k] = clustered_node(e_lo, e_hi, i, n_grid);
    hm[k] = log_hm(eps[k]);
    hp[k] = log_hp(eps[k]);
  }

  struct Pick {
    std::size_t index;
    bool meridian;
    double value;
  };
  Pick sup{0, true, -HUGE_VAL};
  Pick inf{0, true, HUGE_VAL};
  for (std::size_t k = 0; k < eps.size(); ++k) {
    for (const bool meridian : {true, false}) {
      const double v = meridian ? hm[k] : hp[k];
      if (v > sup.value) sup = {k, meridian, v};
      if (v < inf.value) inf = {k, meridian, v};
    }
  }

  const auto refine = [&](const Pick& pick, bool maximize) {
    if (pick.index == 0 || pick.index + 1 == eps.size())
      return std::pair{pick.value, eps[pick.index]};
    const double a = std::min(eps[pick.index - 1], eps[pick.index + 1]);
    const double b = std::max(eps[pick.index - 1], eps[pick.index + 1]);
    const auto f = [&](double e) { return pick.meridian ? log_hm(e) : log_hp(e); };
    const numeric::Extremum x = maximize
                                    ? numeric::golden_section_maximize(f, a, b, 1e-12)
                                    : numeric::golden_section_minimize(f, a, b, 1e-12);
    const bool better = maximize ? x.value > pick.value : x.value < pick.value;
    return better ? std::pair{x.value, x.x} : std::pair{pick.value, eps[pick.index]};
  };

  const auto [sup_log, sup_eps] = refine(sup, true);
  const auto [inf_log, inf_eps] = refine(inf, false);
  return {sup_log, inf_log, sup_log - inf_log, std::cos(sup_eps), std::cos(inf_eps)};
}

}  // namespace conicmap
