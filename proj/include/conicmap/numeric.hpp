#pragma once

#include <cmath>
#include <cstddef>

#include "conicmap/errors.hpp"

namespace conicmap::numeric {

/// Bisection for a function that changes sign on [lo, hi].
///
/// Terminates when |f(mid)| <= ftol, or when the bracket can no longer be
/// split in double precision. Returns the midpoint of the final bracket.
/// Throws DomainError if f(lo) and f(hi) have the same strict sign.
template <class Function>
double bisect(Function&& f, double lo, double hi, double ftol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw DomainError("bisect: the interval does not bracket a root");
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return mid;
    const double fmid = f(mid);
    if (std::abs(fmid) <= ftol) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Stops once the bracket is narrower than `width`.
template <class Function>
Extremum golden_section_minimize(Function&& f, double lo, double hi,
                                 double width) {
  // 1/phi and 1/phi^2
  constexpr double inv_phi = 0.6180339887498948482;
  constexpr double inv_phi2 = 0.3819660112501051518;

  double a = lo;
  double b = hi;
  double c = a + inv_phi2 * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 500 && (b - a) > width; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = a + inv_phi2 * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (!(c > a && c < b) || !(d > a && d < b)) break;
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  if (fc <= fx && fc <= fd) return {c, fc};
  if (fd < fx) return {d, fd};
  return {x, fx};
}

template <class Function>
Extremum golden_section_maximize(Function&& f, double lo, double hi,
                                 double width) {
  const Extremum e =
      golden_section_minimize([&](double x) { return -f(x); }, lo, hi, width);
  return {e.x, -e.value};
}

}  // namespace conicmap::numeric
