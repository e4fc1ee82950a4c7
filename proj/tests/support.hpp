#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace conicmap::testing {

/// Seeded generator so property tests are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// Frozen high-precision values (tests/oracles/frozen_values.py, mpmath, 40
/// digits), for rho1 = 0.737277 and rho2 = 0.887011.
namespace frozen {
inline constexpr double kStereoModulus = 2.571493836395092592;
inline constexpr double kModA = 0.073727327931285042706;
inline constexpr double kModAAltRho2 = 0.10669860688176591113;
inline constexpr double kModZeroHalf = 0.087424788141514944499;
inline constexpr double kThroughAlpha = 0.95993101996733097266;
inline constexpr double kThroughSinAlpha = 0.8191520049246969742;
inline constexpr double kThroughApex = 1.2103306825819672671;
inline constexpr double kS1 = 0.8247438462185459928;
inline constexpr double kS2 = 0.56369060930966737879;
inline constexpr double kModB = 0.073941305937544443978;
inline constexpr double kDilatation = 1.002902288910549314;
inline constexpr double kA0 = 0.82152942070464415925;
inline constexpr double kAlpha0 = 0.96408827058982823745;
inline constexpr double kA0AltRho2 = 0.84781630081195563514;
inline constexpr double kDeltaMin = 0.0086263925204056783675;
inline constexpr double kSigmaMax = 1.0086637070638202399;
inline constexpr double kLambertApex = 1.2061571777681794066;
inline constexpr double kLambertHigh = 0.89081950274916494151;
inline constexpr double kLambertSlantRho1 = 0.82235712824473013251;
inline constexpr double kApexRoundedA0 = 1.206157916374851068;
inline constexpr double kSlantRoundedA0 = 0.82235754937345840628;
inline constexpr double kEps1 = 0.74176543063949997612;
inline constexpr double kEps2 = 0.47996518301563131702;
inline constexpr double kDelisleC = 0.99714663862326332197;
}  // namespace frozen

}  // namespace conicmap::testing
