#include <cmath>
#include <random>

#include "busemann/errors.hpp"
#include "busemann/harmonics.hpp"
#include "busemann/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace busemann;

namespace {

// Funk-Hecke: R H_k = |S^{n-2}| C_k^a(0) / C_k^a(1) H_k with a = (n-2)/2, using
// C_k^a(1) = Gamma(k + 2a) / (k! Gamma(2a)) and, for even k,
// C_k^a(0) = (-1)^{k/2} Gamma(k/2 + a) / (Gamma(a) (k/2)!).
double multiplier_oracle(int n, int k) {
  if (k % 2) return 0.0;
  const double a = 0.5 * (n - 2);
  const double at_one = std::tgamma(k + 2 * a) / (std::tgamma(k + 1.0) * std::tgamma(2 * a));
  const double at_zero = (k / 2 % 2 ? -1.0 : 1.0) * std::tgamma(k / 2 + a) / (std::tgamma(a) * std::tgamma(k / 2 + 1.0));
  return oracle::sphere_area(n - 2) * at_zero / at_one;
}

Direction random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = g(rng);
  return Direction::normalized(v);
}

}  // namespace

TEST_SUITE("harmonics") {
  TEST_CASE("Gegenbauer recurrence against explicit polynomials") {
    for (double t : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
      CHECK(gegenbauer(0, 1.5, t) == doctest::Approx(1.0));
      CHECK(gegenbauer(1, 1.5, t) == doctest::Approx(3.0 * t));
      CHECK(gegenbauer(2, 0.5, t) == doctest::Approx(1.5 * t * t - 0.5));
      CHECK(gegenbauer(3, 1.0, t) == doctest::Approx(8 * t * t * t - 4 * t));
      CHECK(gegenbauer(5, 0.0, t) == doctest::Approx(std::cos(5 * std::acos(t))));
    }
  }

  TEST_CASE("multipliers match the Funk-Hecke closed form") {
    for (int n : {3, 4, 5, 6}) {
      for (int k = 0; k <= 12; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(radon_multiplier(n, k) == doctest::Approx(multiplier_oracle(n, k)).epsilon(1e-12));
      }
    }
    CHECK(radon_multiplier(3, 0) == doctest::Approx(2 * oracle::pi));
    CHECK(radon_multiplier(3, 2) == doctest::Approx(-oracle::pi));
    CHECK_THROWS_AS(radon_multiplier(2, 2), UnsupportedError);
  }

  TEST_CASE("odd multipliers vanish and even ones decrease in size") {
    for (int n : {3, 4}) {
      double prev = std::abs(radon_multiplier(n, 0));
      for (int k = 1; k <= 30; ++k) {
        if (k % 2) {
          CHECK(radon_multiplier(n, k) == 0.0);
          continue;
        }
        const double v = std::abs(radon_multiplier(n, k));
        CHECK(v < prev);
        prev = v;
      }
    }
    const auto table = multiplier_table(4, 6);
    CHECK(table.values.size() == 7);
    CHECK(table.values.at(4) == doctest::Approx(radon_multiplier(4, 4)));
  }

  TEST_CASE("zonal harmonics have unit norm and are orthogonal") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 4}) {
      const Direction axis = random_unit(n, rng);
      const SphereRule& rule = *cached_sphere_rule(n - 1, 25);
      for (int k : {0, 1, 2, 5}) {
        const ZonalHarmonic h(n, k, axis);
        const ZonalHarmonic g(n, k + 2, axis);
        double hh = 0.0, hg = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          hh += rule.weights[i] * h(rule.node(i)) * h(rule.node(i));
          hg += rule.weights[i] * h(rule.node(i)) * g(rule.node(i));
        }
        CAPTURE(n);
        CAPTURE(k);
        CHECK(hh == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(hg) < 1e-12);
      }
    }
  }

  TEST_CASE("the transform acts on zonal harmonics by the multiplier") {
    std::mt19937_64 rng(5);
    for (int n : {3, 4}) {
      const auto rule = cached_sphere_rule(n - 2, 31);
      for (int k = 0; k <= 8; ++k) {
        const ZonalHarmonic h(n, k, random_unit(n, rng));
        const double lambda = multiplier_oracle(n, k);
        for (int j = 0; j < 5; ++j) {
          const Direction xi = random_unit(n, rng);
          const double got = radon_quadrature([&](std::span<const double> u) { return h(u); }, *rule, xi);
          CAPTURE(n);
          CAPTURE(k);
          CHECK(got == doctest::Approx(lambda * eval_zonal(h, xi)).epsilon(1e-10).scale(1.0));
        }
      }
    }
  }

  TEST_CASE("integral identity for the transform") {
    auto g = [](std::span<const double> u) { return std::exp(u[0] - 0.5 * u[1] * u[2]) + u[2] * u[2]; };
    for (int n : {3, 4}) {
      const RadonBound b = radon_integral_identity(g, n, 31, 31);
      CHECK(b.lhs == doctest::Approx(b.rhs).epsilon(1e-10));
    }
  }

  TEST_CASE("L2 bound for the transform") {
    auto f = [](std::span<const double> u) { return 1.0 + 3.0 * u[0] * u[0] * u[1] + std::sin(4 * u[2]); };
    for (int n : {3, 4}) {
      const RadonBound b = radon_l2_bound_check(f, n, 25, 25);
      CHECK(b.lhs <= b.rhs);
      CHECK(b.lhs > 0.0);
    }
    // constants attain the bound
    const RadonBound c = radon_l2_bound_check([](std::span<const double>) { return 2.0; }, 3, 11, 11);
    CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-12));
  }
}
