#include <algorithm>
#include <cmath>

#include "conicmap/distortion.hpp"
#include "conicmap/errors.hpp"
#include "conicmap/projections.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace conicmap;
using conicmap::testing::Rng;
namespace frozen = conicmap::testing::frozen;

namespace {

ProjectionParams pair_params(double r1, double r2) {
  ProjectionParams p;
  p.rho1 = r1;
  p.rho2 = r2;
  return p;
}

// rho1 < rho2 with rho1 + rho2 > 0, so the cone through both exists.
ProjectionParams random_params(Rng& rng) {
  for (;;) {
    double r1 = rng.uniform(-0.9, 0.99);
    double r2 = rng.uniform(-0.9, 0.99);
    if (r1 > r2) std::swap(r1, r2);
    if (r2 - r1 > 1e-2 && r1 + r2 > 1e-2) return pair_params(r1, r2);
  }
}

}  // namespace

TEST_CASE("projection kinds") {
  for (ProjectionKind k : kAllKinds) CHECK(parse_kind(to_string(k)) == k);
  CHECK(parse_kind("LAMBERT") == ProjectionKind::Lambert);
  CHECK(parse_kind("teichmuller") == ProjectionKind::Teichmuller);
  CHECK(parse_kind("equidistant") == ProjectionKind::DelisleEquidistant);
  CHECK_THROWS_AS(parse_kind("mercator"), InvalidKind);
  CHECK_THROWS_AS(parse_kind(""), InvalidKind);
}

TEST_CASE("profile parameters") {
  const ProjectionParams params;
  CHECK(std::abs(make_profile(ProjectionKind::Central, params).slant(frozen::kEps1) - frozen::kS1) < 1e-12);
  CHECK(std::abs(std::acos(0.737277) - frozen::kEps1) < 1e-15);
  CHECK(std::abs(std::acos(0.887011) - frozen::kEps2) < 1e-15);

  const MeridianProfile delisle = make_profile(ProjectionKind::DelisleMO, params);
  CHECK(std::abs(delisle.coefficient() - 0.997143) < 1e-5);
  CHECK(std::abs(delisle.coefficient() - frozen::kDelisleC) < 1e-12);

  const MeridianProfile teich = make_profile(ProjectionKind::Teichmuller, params);
  CHECK(std::abs(teich.coefficient() - 1.0029) < 1e-4);
  CHECK(std::abs(teich.coefficient() - frozen::kDilatation) < 1e-12);

  const MeridianProfile lambert = make_profile(ProjectionKind::Lambert, params);
  CHECK(std::abs(lambert.cone().sin_alpha() - frozen::kA0) < 1e-12);
  CHECK(std::abs(lambert.slant(frozen::kEps1) - frozen::kLambertSlantRho1) < 1e-12);

  ProjectionParams forced = params;
  forced.alpha_override = std::asin(0.821529);
  CHECK(std::abs(make_profile(ProjectionKind::Lambert, forced).slant(frozen::kEps1) -
                 frozen::kSlantRoundedA0) < 1e-12);
  CHECK_THROWS_AS(make_profile(ProjectionKind::Central, forced), DomainError);

  CHECK_THROWS_AS(make_profile(ProjectionKind::Central, pair_params(-0.5, 0.3)), UnsupportedGeometry);
  CHECK_THROWS_AS(make_profile(ProjectionKind::Lambert, pair_params(0.5, 0.3)), DomainError);
  forced.alpha_override = kPi / 2;
  CHECK_THROWS_AS(make_profile(ProjectionKind::Lambert, forced), DomainError);
}

TEST_CASE("boundary parallels are preserved") {
  Rng rng(51);
  for (int i = 0; i < 1000; ++i) {
    const ProjectionParams params = random_params(rng);
    for (ProjectionKind k : {ProjectionKind::Central, ProjectionKind::Orthogonal,
                             ProjectionKind::DelisleMO, ProjectionKind::Teichmuller}) {
      const MeridianProfile p = make_profile(k, params);
      const double sa = p.cone().sin_alpha();
      const double s1 = std::sqrt(1 - params.rho1 * params.rho1) / sa;
      const double s2 = std::sqrt(1 - params.rho2 * params.rho2) / sa;
      CHECK(std::abs(p.slant_at_height(params.rho1) - s1) <= 1e-12 * std::max(1.0, s1));
      CHECK(std::abs(p.slant_at_height(params.rho2) - s2) <= 1e-12 * std::max(1.0, s1));
    }
    const MeridianProfile eq = make_profile(ProjectionKind::DelisleEquidistant, params);
    const double s1 = std::sqrt(1 - params.rho1 * params.rho1) / eq.cone().sin_alpha();
    CHECK(std::abs(eq.slant_at_height(params.rho1) - s1) <= 1e-12 * std::max(1.0, s1));
    const MeridianProfile lam = make_profile(ProjectionKind::Lambert, params);
    const double l1 = std::sqrt(1 - params.rho1 * params.rho1) / lam.cone().sin_alpha();
    CHECK(std::abs(lam.slant_at_height(params.rho1) - l1) <= 1e-12 * std::max(1.0, l1));
  }
}

TEST_CASE("central and orthogonal projections differ inside the annulus") {
  const ProjectionParams params;
  const MeridianProfile c = make_profile(ProjectionKind::Central, params);
  const MeridianProfile o = make_profile(ProjectionKind::Orthogonal, params);
  const double quarter = 0.25 * frozen::kEps1 + 0.75 * frozen::kEps2;
  CHECK(std::abs(c.slant(quarter) - o.slant(quarter)) > 1e-4);
}

TEST_CASE("slant derivatives match finite differences") {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const ProjectionParams params = random_params(rng);
    for (ProjectionKind k : kAllKinds) {
      const MeridianProfile p = make_profile(k, params);
      for (int j = 0; j < 10; ++j) {
        const double eps = rng.uniform(p.eps_hi(), p.eps_lo());
        const double h = 1e-5 * std::min(1.0, std::min(eps, kPi - eps));
        const double fd = (p.slant(eps + h) - p.slant(eps - h)) / (2 * h);
        CHECK(testing::rel_diff(fd, p.slant_derivative(eps)) < 1e-8);
        CHECK(p.slant_derivative(eps) > 0.0);
      }
    }
  }
}

TEST_CASE("Teichmuller profile") {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const ProjectionParams params = random_params(rng);
    const MeridianProfile p = make_profile(ProjectionKind::Teichmuller, params);
    const double sa = p.cone().sin_alpha();
    const double k = p.coefficient();
    const double ratio = annulus_modulus(SphericalAnnulus(params.rho1, params.rho2));
    const Cone through = cone_through_parallels(params.rho1, params.rho2);
    const double s1 = std::sqrt(1 - params.rho1 * params.rho1) / sa;
    const double s2 = std::sqrt(1 - params.rho2 * params.rho2) / sa;
    CHECK(testing::rel_diff(k, cone_annulus_modulus(ConicalAnnulus(through, s2, s1)) / ratio) < 1e-13);
    // s2 / s1 = exp(-2 pi sin(alpha) Mod(B))
    CHECK(testing::rel_diff(s2 / s1, std::exp(-kTwoPi * sa * k * ratio)) < 1e-12);
    for (int j = 0; j < 10; ++j) {
      const double rho = rng.uniform(params.rho1, params.rho2);
      const StretchSample st = stretch_at(p, rho);
      CHECK(testing::rel_diff(st.h_meridian / st.h_parallel, k) < 1e-9);
    }
  }
}

TEST_CASE("stretch values") {
  const ProjectionParams params;
  const StretchSample lam = stretch_at(make_profile(ProjectionKind::Lambert, params), 0.737277);
  CHECK(lam.h_meridian == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lam.h_parallel == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lam.sigma == doctest::Approx(1.0).epsilon(1e-12));

  const MeridianProfile delisle = make_profile(ProjectionKind::DelisleMO, params);
  CHECK(stretch_at(delisle, 0.8).h_meridian == delisle.coefficient());
  CHECK(stretch_at(make_profile(ProjectionKind::Orthogonal, params), 0.737277).h_parallel ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(stretch_at(delisle, 0.5), OutOfAnnulus);
  CHECK_NOTHROW(stretch_at(delisle, 0.887011 + 1e-10));

  SUBCASE("Lambert is conformal") {
    Rng rng(54);
    for (int i = 0; i < 100; ++i) {
      const ProjectionParams p = random_params(rng);
      const MeridianProfile prof = make_profile(ProjectionKind::Lambert, p);
      for (int j = 0; j < 10; ++j) {
        const double rho = rng.uniform(p.rho1, p.rho2);
        const StretchSample st = stretch_at(prof, rho);
        CHECK(testing::rel_diff(st.h_meridian, st.h_parallel) <= 1e-9);
        const double L = lipschitz_L(rho, prof.cone().alpha(), p.rho1);
        CHECK(testing::rel_diff(st.h_meridian, L) <= 1e-9);
      }
    }
  }
}

TEST_CASE("map stretches match finite differences of the planar map") {
  // Planar displacement over spherical arc length along each principal direction.
  Rng rng(55);
  for (int i = 0; i < 50; ++i) {
    const ProjectionParams params = i == 0 ? ProjectionParams{} : random_params(rng);
    for (ProjectionKind k : kAllKinds) {
      const MeridianProfile p = make_profile(k, params);
      for (int j = 0; j < 20; ++j) {
        const double eps = rng.uniform(p.eps_hi(), p.eps_lo());
        const double offset = rng.uniform(-3.0, 3.0);
        const double hm = 1e-5 * std::min(1.0, eps);
        const double lo = std::max(-1.0, std::cos(eps + hm));
        const double hi = std::cos(eps - hm);
        const double meridian =
            std::abs(project_offset(p, offset, hi).value - project_offset(p, offset, lo).value) /
            (2 * hm);
        const double hp = 1e-6;
        const double rho = std::cos(eps);
        const double parallel = std::abs(project_offset(p, offset + hp, rho).value -
                                         project_offset(p, offset - hp, rho).value) /
                                (2 * hp * std::sin(eps));
        const StretchSample st = stretch_at(p, rho);
        CHECK(testing::rel_diff(meridian, st.h_meridian) <= 1e-6);
        CHECK(testing::rel_diff(parallel, st.h_parallel) <= 1e-6);
      }
    }
  }
}

TEST_CASE("projecting points") {
  const ProjectionParams params;
  const MeridianProfile p = make_profile(ProjectionKind::Lambert, params);
  const double sa = p.cone().sin_alpha();

  SUBCASE("central meridian is the negative y axis") {
    const PlanarPoint z = project_point(p, SphericalPoint(0.0, 0.8));
    CHECK(std::abs(z.re()) < 1e-15);
    CHECK(z.im() == doctest::Approx(-p.slant_at_height(0.8)).epsilon(1e-14));
    CHECK(z.plane == Plane::Map);
  }
  SUBCASE("mirror symmetry about the central meridian") {
    Rng rng(56);
    for (int i = 0; i < 1000; ++i) {
      const double d = rng.uniform(0.0, 3.1);
      const double rho = rng.uniform(0.737277, 0.887011);
      const PlanarPoint a = project_point(p, SphericalPoint(d, rho));
      const PlanarPoint b = project_point(p, SphericalPoint(-d, rho));
      CHECK(std::abs(a.re() + b.re()) < 1e-14);
      CHECK(std::abs(a.im() - b.im()) < 1e-14);
      CHECK(std::abs(std::abs(a.value) - p.slant_at_height(rho)) < 1e-14);
    }
  }
  SUBCASE("a full sweep covers an angle of 2 pi sin(alpha)") {
    const int n = 10000;
    double swept = 0.0;
    std::complex<double> prev = project_point(p, SphericalPoint(kPi + 1e-9, 0.8)).value;
    for (int i = 1; i <= n; ++i) {
      const double theta = kPi + 1e-9 + (kTwoPi - 2e-9) * i / n;
      const std::complex<double> cur = project_point(p, SphericalPoint(theta, 0.8)).value;
      swept += std::arg(cur / prev);
      prev = cur;
    }
    CHECK(std::abs(swept - kTwoPi * sa) < 1e-7);
  }
  SUBCASE("custom cut") {
    const PlanarPoint z = project_point(p, SphericalPoint(kPi, 0.8), 0.0);
    CHECK(std::abs(z.re()) < 1e-15);
    CHECK_THROWS_AS(project_point(p, SphericalPoint(0.0, 0.8), 0.0), OnCutMeridian);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(project_point(p, SphericalPoint(kPi, 0.8)), OnCutMeridian);
    CHECK_THROWS_AS(project_point(p, SphericalPoint(kPi + 1e-13, 0.8)), OnCutMeridian);
    CHECK_THROWS_AS(project_point(p, SphericalPoint(0.0, 0.5)), OutOfAnnulus);
    CHECK_THROWS_AS(project_point(p, SphericalPoint(0.0, 0.95)), OutOfAnnulus);
    CHECK_NOTHROW(project_point(p, SphericalPoint(0.0, 0.737277 - 1e-10)));
  }
}

TEST_CASE("six-projection comparison") {
  const auto rows = compare_all(ProjectionParams{});
  REQUIRE(rows.size() == 6);
  struct Expected {
    ProjectionKind kind;
    double published;
    double tolerance;
    double oracle;
  };
  const Expected expected[] = {
      {ProjectionKind::Central, 0.0171839, 1e-4, 0.017184001},
      {ProjectionKind::DelisleMO, 0.00862621, 1e-4, 0.0086262705},
      {ProjectionKind::DelisleEquidistant, 0.00921812, 1e-3, 0.0092181859},
      {ProjectionKind::Orthogonal, 0.00866925, 1e-4, 0.0086693076},
      {ProjectionKind::Teichmuller, 0.0115244, 5e-4, 0.0115244779},
      {ProjectionKind::Lambert, 0.00862633, 1e-5, 0.0086263925},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(to_string(rows[i].kind));
    CHECK(rows[i].kind == expected[i].kind);
    CHECK(std::abs(rows[i].report.delta - expected[i].published) <= expected[i].tolerance);
    CHECK(std::abs(rows[i].report.delta - expected[i].oracle) <= 1e-9);
    CHECK(rows[i].report.delta > 0.0);
  }
  const auto again = compare_all(ProjectionParams{});
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].report.delta == rows[i].report.delta);
}

TEST_CASE("equidistant anchors") {
  ProjectionParams params;
  params.anchor = EquidistantAnchor::Upper;
  const MeridianProfile upper = make_profile(ProjectionKind::DelisleEquidistant, params);
  CHECK(std::abs(upper.slant(frozen::kEps2) - frozen::kS2) < 1e-12);
  CHECK(std::abs(profile_distortion(upper).delta - 0.0090277) < 1e-6);
  params.anchor = EquidistantAnchor::Middle;
  const MeridianProfile middle = make_profile(ProjectionKind::DelisleEquidistant, params);
  CHECK(std::abs(profile_distortion(middle).delta - 0.0091226) < 1e-6);
}
