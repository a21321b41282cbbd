#include <cmath>
#include <random>

#include "busemann/bodies.hpp"
#include "busemann/errors.hpp"
#include "busemann/functionals.hpp"
#include "busemann/random_bodies.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace busemann;

namespace {

Direction unit(std::vector<double> v) { return Direction::normalized(std::move(v)); }

// Arc length of {u on the great circle xi^perp : <u, a> >= h} on S^2.
double cap_section_oracle(double c, double h) {
  const double top = std::sqrt(std::max(0.0, 1.0 - c * c));
  if (h >= top) return 0.0;
  return 2.0 * std::acos(h / top);
}

}  // namespace

TEST_SUITE("bodies") {
  TEST_CASE("zone measures against direct integration") {
    for (int m : {2, 3, 4, 5}) {
      for (auto [p, q] : {std::pair{-0.4, 0.7}, std::pair{0.2, 1.0}, std::pair{-1.0, 1.0}}) {
        // t = cos(theta) removes the endpoint singularity of (1 - t^2)^{(m-2)/2}
        const double exact = oracle::sphere_area(m - 1) *
                             oracle::simpson([m](double th) { return std::pow(std::sin(th), m - 1); },
                                             std::acos(q), std::acos(p));
        CAPTURE(m);
        CHECK(zone_measure(m, p, q) == doctest::Approx(exact).epsilon(1e-9));
      }
    }
    CHECK(zone_measure(0, -0.5, 0.5) == 0.0);
    CHECK(zone_measure(0, 0.5, 2.0) == 1.0);
    CHECK(sine_power_integral(3, oracle::pi) == doctest::Approx(4.0 / 3.0));
  }

  TEST_CASE("cone base measure agrees with quadrature") {
    const ConeBase cap = ConeBase::cap(unit({0.2, -0.4, 0.9}), 0.35);
    CHECK(cap.measure() == doctest::Approx(2 * oracle::pi * 0.65));
    CHECK(cap.quadrature_measure(200) == doctest::Approx(cap.measure()).epsilon(2e-3));
    const ConeBase bands(4, {Zone{Direction::axis(4, 0), 0.5, 1.0}, Zone{Direction::axis(4, 0), -0.3, 0.1}});
    CHECK(bands.quadrature_measure(120) == doctest::Approx(bands.measure()).epsilon(2e-3));
    CHECK(ConeBase::full(3).measure() == doctest::Approx(4 * oracle::pi));
  }

  TEST_CASE("cap sections in S^2 match the arc formula") {
    const Direction a = unit({1.0, 2.0, -2.0});
    const ConeBase cap = ConeBase::cap(a, 0.3);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
      const Direction xi = random_direction(3, rng);
      const double c = dot(xi.coords(), a.coords());
      CHECK(cap.section_measure(xi.coords()) == doctest::Approx(cap_section_oracle(c, 0.3)).epsilon(1e-12));
      CHECK(cap.section_measure_zonal(c) == doctest::Approx(cap_section_oracle(c, 0.3)).epsilon(1e-12));
    }
  }

  TEST_CASE("symmetrized base doubles the measure and is symmetric") {
    const ConeBase cap = ConeBase::cap(Direction::axis(3, 1), 0.6);
    const ConeBase both = cap.symmetrized();
    CHECK(both.measure() == doctest::Approx(2 * cap.measure()));
    const std::vector<double> u = {0.0, 0.9, std::sqrt(1 - 0.81)};
    const std::vector<double> v = {0.0, -0.9, -std::sqrt(1 - 0.81)};
    CHECK(both.contains(u));
    CHECK(both.contains(v));
    CHECK_FALSE(cap.contains(v));
  }

  TEST_CASE("complementary cone halves every section") {
    for (int n : {3, 4, 5}) {
      const StarBody body = make_complementary_cone(n, 0.4, Direction::axis(n, 0));
      const ConeBase& base = body.cone()->base;
      CHECK(base.measure() == doctest::Approx(0.5 * oracle::sphere_area(n - 1)).epsilon(1e-12));
      std::mt19937_64 rng(static_cast<unsigned>(n));
      for (int i = 0; i < 30; ++i) {
        const Direction xi = random_direction(n, rng);
        CHECK(base.section_measure(xi.coords()) == doctest::Approx(0.5 * oracle::sphere_area(n - 2)).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("radial functions of the closed-form shapes") {
    const StarBody ell = make_ellipsoid({1.0, 2.0, 0.5});
    const Direction u = unit({1.0, 1.0, 1.0});
    const double inv = u[0] * u[0] + u[1] * u[1] / 4 + u[2] * u[2] / 0.25;
    CHECK(ell.radius(u) == doctest::Approx(1 / std::sqrt(inv)));
    CHECK(ell.symmetric());

    const StarBody lune = make_lune(0.4, Direction::axis(2, 0));
    const double phi = 0.7;
    CHECK(std::tan(lune.radius_at_angle(phi)) == doctest::Approx(std::tan(0.4) / std::cos(phi)));
    CHECK(lune.radius_at_angle(kHalfPi) == doctest::Approx(kHalfPi));

    const StarBody ball = make_ball(SpaceSpec::make(-1, 3), 1.7);
    CHECK(ball.radius(u) == 1.7);
    CHECK(ball.zonal_axis().has_value());
    CHECK(ball.kind() == "ball");
  }

  TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(make_ball(SpaceSpec::make(1, 2), 0.0), DomainError);
    CHECK_THROWS(make_ball(SpaceSpec::make(1, 2), 1.7));
    CHECK_THROWS_AS(make_ellipsoid({1.0, -1.0}), DomainError);
    CHECK_THROWS_AS(make_lune(1.6, Direction::axis(2, 0)), DomainError);
    GridInterpolated g{2, 1, 4, {1.0, 2.0, 3.0, 4.0}};
    CHECK_THROWS_AS(make_grid_body(SpaceSpec::make(0, 2), g, true), PreconditionError);
    g.values = {1.0, 2.0, 1.0, 2.0};
    CHECK(make_grid_body(SpaceSpec::make(0, 2), g, true).symmetric());
  }

  TEST_CASE("symmetry is detected for mirrored bumps") {
    const auto space = SpaceSpec::make(1, 3);
    const StarBody one = make_bump_body(space, 0.6, {Bump{Direction::axis(3, 0), 0.3, 2.0}}, false);
    const StarBody two = make_bump_body(space, 0.6, {Bump{Direction::axis(3, 0), 0.3, 2.0}}, true);
    CHECK_FALSE(one.symmetric());
    CHECK(two.symmetric());
    const Direction u = unit({0.3, -0.2, 0.9});
    CHECK(two.radius(u) == doctest::Approx(two.radius(-u)));
  }

  TEST_CASE("grid interpolation is piecewise linear on the circle") {
    GridInterpolated g{2, 1, 4, {1.0, 2.0, 1.0, 2.0}};
    const StarBody body = make_grid_body(SpaceSpec::make(0, 2), g, false);
    CHECK(body.radius_at_angle(0.0) == doctest::Approx(1.0));
    CHECK(body.radius_at_angle(oracle::pi / 4) == doctest::Approx(1.5));
    CHECK(body.radius_at_angle(oracle::pi / 2) == doctest::Approx(2.0));
    CHECK(body.angle_breakpoints().size() == 4);
  }

  TEST_CASE("perturbed ball keeps the ball's volume") {
    for (int k : {2, 4, 6}) {
      const StarBody body = make_perturbed_ball(3, oracle::pi / 4, 0.05, k, Direction::axis(3, 2));
      const FunctionalValue v = volume(body);
      CHECK(v.value == doctest::Approx(oracle::ball_volume(1, 3, oracle::pi / 4)).epsilon(1e-9));
      const auto& p = std::get<HarmonicPerturbed>(body.profile());
      CHECK(p.delta_norm > 0.0);
      CHECK(p.eps_norm >= p.delta_norm / std::sqrt(oracle::sphere_area(2)));
    }
    CHECK_THROWS_AS(make_perturbed_ball(3, 1.5, 2.0, 2, Direction::axis(3, 2)), DomainError);
  }

  TEST_CASE("convexity tests") {
    CHECK(is_convex_spherical(make_ball(SpaceSpec::make(1, 2), 1.0)));
    CHECK(is_convex_spherical(make_lune(0.5, Direction::axis(2, 1))));
    const StarBody dented =
        make_bump_body(SpaceSpec::make(1, 2), 1.0, {Bump{Direction::axis(2, 0), -0.6, 8.0}}, true);
    CHECK_FALSE(is_convex_spherical(dented));
    CHECK(is_convex_euclidean(make_ellipsoid({1.0, 3.0})));
    CHECK_FALSE(is_convex_euclidean(
        make_bump_body(SpaceSpec::make(0, 2), 1.0, {Bump{Direction::axis(2, 1), -0.6, 8.0}}, true)));
    Rng rng(9);
    for (int i = 0; i < 5; ++i) CHECK(is_convex_spherical(random_convex_body(rng)));
  }

  TEST_CASE("striped cap subset") {
    const Direction axis = Direction::axis(3, 2);
    const StripedCap cap = striped_cap_subset(0.3, axis, 0.5, 0.05);
    CHECK(cap.cap_measure == doctest::Approx(2 * oracle::pi * 0.7));
    CHECK(cap.base.measure() == doctest::Approx(0.5 * cap.cap_measure).epsilon(1e-9));
    CHECK(cap.max_excess <= 0.05);
    CHECK(cap.strips > 1);
    CHECK(cap.gamma == doctest::Approx(0.5).epsilon(0.05));
    CHECK(cap.certified_pitch > 0.0);
    CHECK(cap.certified_pitch <= cap.pitch);
    for (const Zone& z : cap.base.zones()) {
      CHECK(z.lo >= 0.3 - 1e-12);
      CHECK(z.hi <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(striped_cap_subset(0.3, Direction::axis(2, 0), 0.5, 0.05), UnsupportedError);
    CHECK_THROWS_AS(striped_cap_subset(1.2, axis, 0.5, 0.05), DomainError);
  }

  TEST_CASE("striped cone has the requested volume and is symmetric") {
    const StripedCone sc = make_striped_cone(3, 0.5, 0.3, 0.3);
    CHECK(sc.body.symmetric());
    const FunctionalValue v = volume(sc.body);
    CHECK(v.value == doctest::Approx(0.5 * oracle::ball_volume(1, 3, kHalfPi)).epsilon(1e-8));
  }

  TEST_CASE("vanishing body has the requested volume and a small functional") {
    const auto space = SpaceSpec::make(0, 3);
    const VanishingBody vb = make_vanishing_body(space, 2.0, 0.5);
    CHECK(vb.body.symmetric());
    CHECK(volume(vb.body).value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(vb.functional <= 0.5);
    CHECK(busemann_functional(vb.body).value == doctest::Approx(vb.functional).epsilon(1e-6));
    CHECK_THROWS_AS(make_vanishing_body(SpaceSpec::make(1, 3), 1.0, 0.1), ApplicabilityError);
  }
}
