#include <algorithm>
#include <cmath>

#include "conicmap/errors.hpp"
#include "conicmap/sphere.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace conicmap;
using conicmap::testing::Rng;
namespace frozen = conicmap::testing::frozen;

TEST_CASE("spherical points") {
  SUBCASE("embedding has unit norm") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      const SphericalPoint p(rng.uniform(-10, 10), rng.uniform(-0.999999, 0.999999));
      CHECK(std::abs(norm(p.embed()) - 1.0) < 1e-12);
      CHECK(p.theta() >= 0.0);
      CHECK(p.theta() < kTwoPi);
    }
  }
  SUBCASE("poles are outside the chart") {
    CHECK_THROWS_AS(SphericalPoint(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(SphericalPoint(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(SphericalPoint(NAN, 0.0), DomainError);
  }
  SUBCASE("colatitude and latitude") {
    const SphericalPoint p(0.0, 0.5);
    CHECK(p.colatitude() == doctest::Approx(std::acos(0.5)));
    CHECK(p.latitude() == doctest::Approx(M_PI / 6));
  }
}

TEST_CASE("stereographic projection") {
  SUBCASE("equator maps to the unit circle") {
    const PlanarPoint w = stereographic_project(SphericalPoint(0.0, 0.0));
    CHECK(w.re() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(w.im()) < 1e-15);
  }
  SUBCASE("canonical lower parallel") {
    const PlanarPoint w = stereographic_project(SphericalPoint(M_PI / 2, 0.737277));
    CHECK(std::abs(w.re()) < 1e-15);
    CHECK(std::abs(w.im() - frozen::kStereoModulus) < 1e-12);
  }
  SUBCASE("south pole limit") {
    const PlanarPoint w = stereographic_project(SphericalPoint(0.0, -1.0 + 1e-12));
    CHECK(std::abs(w.value) < 1e-5);
  }
}

TEST_CASE("stereographic inverse") {
  SUBCASE("examples") {
    const SphericalPoint p = stereographic_unproject({1.0, 0.0});
    CHECK(p.theta() == 0.0);
    CHECK(std::abs(p.rho()) < 1e-16);

    const SphericalPoint q = stereographic_unproject({0.0, frozen::kStereoModulus});
    CHECK(q.theta() == doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(std::abs(q.rho() - 0.737277) < 1e-15);

    const SphericalPoint n = stereographic_unproject({1e6, 0.0});
    CHECK((1.0 - n.rho()) == doctest::Approx(2e-12).epsilon(1e-3));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(stereographic_unproject({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(stereographic_unproject({INFINITY, 0.0}), DomainError);
    CHECK_THROWS_AS(stereographic_unproject({1e300, 0.0}), DomainError);
  }
  SUBCASE("round trip on 10^4 random points") {
    Rng rng(12);
    for (int i = 0; i < 10000; ++i) {
      const SphericalPoint p(rng.uniform(0, kTwoPi), rng.uniform(-0.999, 0.999));
      const SphericalPoint q = stereographic_unproject(stereographic_project(p).value);
      CHECK(std::abs(q.rho() - p.rho()) < 1e-12);
      const double dtheta = std::remainder(q.theta() - p.theta(), kTwoPi);
      CHECK(std::abs(dtheta) < 1e-12);
    }
  }
}

TEST_CASE("stereographic projection is conformal") {
  // Planar over spherical displacement equals (1 + |w|^2) / 2 in every
  // direction (pull-back metric 4 |dw|^2 / (1 + |w|^2)^2).
  Rng rng(13);
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const double theta = rng.uniform(0, kTwoPi);
    const double eps = rng.uniform(0.3, 2.8);
    const auto at = [](double t, double e) { return SphericalPoint(t, std::cos(e)); };
    const SphericalPoint p = at(theta, eps);
    const std::complex<double> w = stereographic_project(p).value;
    const double expected = (1.0 + std::norm(w)) / 2.0;
    for (double dir : {0.0, 0.7, M_PI / 2, 2.1}) {
      const double dt = h * std::sin(dir) / std::sin(eps);
      const double de = h * std::cos(dir);
      const SphericalPoint fwd = at(theta + dt, eps + de);
      const SphericalPoint bwd = at(theta - dt, eps - de);
      const double planar =
          std::abs(stereographic_project(fwd).value - stereographic_project(bwd).value);
      const double spherical = norm(fwd.embed() - bwd.embed());
      CHECK(testing::rel_diff(planar / spherical, expected) < 1e-6);
    }
  }
}

TEST_CASE("spherical distance") {
  const SphericalPoint a(0.0, 0.0);
  CHECK(spherical_distance(a, a) == 0.0);
  CHECK(spherical_distance(SphericalPoint(0.0, 0.3), SphericalPoint(M_PI, -0.3)) ==
        doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(spherical_distance(a, SphericalPoint(M_PI / 2, 0.0)) ==
        doctest::Approx(M_PI / 2).epsilon(1e-15));
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const SphericalPoint p(rng.uniform(0, 7), rng.uniform(-0.99, 0.99));
    const SphericalPoint q(rng.uniform(0, 7), rng.uniform(-0.99, 0.99));
    CHECK(spherical_distance(p, q) == spherical_distance(q, p));
  }
}

TEST_CASE("spherical midpoint") {
  const SphericalPoint a(0.0, 0.0);
  const SphericalPoint same = spherical_midpoint(a, a);
  CHECK(same.theta() == 0.0);
  CHECK(std::abs(same.rho()) < 1e-16);

  const SphericalPoint m = spherical_midpoint(a, SphericalPoint(M_PI / 2, 0.0));
  CHECK(m.theta() == doctest::Approx(M_PI / 4).epsilon(1e-15));
  CHECK(std::abs(m.rho()) < 1e-16);

  const SphericalPoint far(M_PI, 1.0 - 1e-9);
  const SphericalPoint n = spherical_midpoint(a, far);
  CHECK(std::abs(spherical_distance(n, a) - spherical_distance(n, far)) < 1e-12);

  CHECK_THROWS_AS(spherical_midpoint(SphericalPoint(0.0, 0.2), SphericalPoint(M_PI, -0.2)),
                  DomainError);
}

TEST_CASE("midpoints of two sides exceed half the third side") {
  // Positive curvature: DE > AC/2 for D, E the midpoints of AB and BC.
  Rng rng(15);
  int triangles = 0;
  while (triangles < 10000) {
    const SphericalPoint a(rng.uniform(0, kTwoPi), rng.uniform(-0.999, 0.999));
    const SphericalPoint b(rng.uniform(0, kTwoPi), rng.uniform(-0.999, 0.999));
    const SphericalPoint c(rng.uniform(0, kTwoPi), rng.uniform(-0.999, 0.999));
    const double ab = spherical_distance(a, b);
    const double bc = spherical_distance(b, c);
    const double ac = spherical_distance(a, c);
    const auto ok = [](double s) { return s > 0.1 && s < 2.5; };
    if (!ok(ab) || !ok(bc) || !ok(ac)) continue;
    ++triangles;
    const double de = spherical_distance(spherical_midpoint(a, b), spherical_midpoint(b, c));
    REQUIRE(de > ac / 2.0);
  }
}

TEST_CASE("annulus modulus") {
  CHECK(std::abs(annulus_modulus(SphericalAnnulus(0.737277, 0.887011)) - 0.0737271) < 1e-6);
  CHECK(std::abs(annulus_modulus(SphericalAnnulus(0.737277, 0.887011)) - frozen::kModA) < 1e-15);
  CHECK(std::abs(annulus_modulus(SphericalAnnulus(0.0, 0.5)) - frozen::kModZeroHalf) < 1e-15);
  CHECK(annulus_modulus(SphericalAnnulus(-0.3, 0.3)) < annulus_modulus(SphericalAnnulus(-0.4, 0.4)));
  CHECK_THROWS_AS(SphericalAnnulus(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(SphericalAnnulus(0.6, 0.5), DomainError);
  CHECK_THROWS_AS(SphericalAnnulus(-1.0, 0.5), DomainError);

  Rng rng(16);
  for (int i = 0; i < 1000; ++i) {
    double r[3] = {rng.uniform(-0.99, 0.99), rng.uniform(-0.99, 0.99), rng.uniform(-0.99, 0.99)};
    std::sort(r, r + 3);
    if (r[1] - r[0] < 1e-6 || r[2] - r[1] < 1e-6) continue;
    const double m01 = annulus_modulus(SphericalAnnulus(r[0], r[1]));
    const double m12 = annulus_modulus(SphericalAnnulus(r[1], r[2]));
    const double m02 = annulus_modulus(SphericalAnnulus(r[0], r[2]));
    CHECK(m01 > 0.0);
    CHECK(std::abs(m01 + m12 - m02) < 1e-12);
    // strictly monotone in each endpoint
    CHECK(m02 > m12);
    CHECK(m02 > m01);
  }
}
