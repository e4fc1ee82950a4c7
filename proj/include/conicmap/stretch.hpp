#pragma once

namespace conicmap {

/// Principal stretches of a rotationally symmetric map at one parallel.
struct StretchSample {
  double rho;
  double h_meridian;
  double h_parallel;
  /// max(h_m, h_p, 1/h_m, 1/h_p)
  double sigma;
};

StretchSample make_stretch_sample(double rho, double h_meridian,
                                  double h_parallel);

/// Extremes of the log-stretch over an annulus and both principal
/// directions. delta = sup_log - inf_log. arg_sup and arg_inf are heights.
struct DistortionReport {
  double sup_log;
  double inf_log;
  double delta;
  double arg_sup;
  double arg_inf;
};

}  // namespace conicmap
