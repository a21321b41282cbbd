#include <cmath>

#include "busemann/bounds.hpp"
#include "busemann/experiments.hpp"
#include "busemann/harmonics.hpp"
#include "busemann/search.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace busemann;

TEST_SUITE("experiments") {
  TEST_CASE("the chain of constants reproduces the closed-form c5") {
    for (int n : {3, 4, 5}) {
      for (double r : {0.3, oracle::pi / 4, 1.2}) {
        CAPTURE(n);
        CAPTURE(r);
        CHECK(c_chain(n, r).c5 == doctest::Approx(c5_constant(n, r)).epsilon(1e-12));
      }
    }
    // V = 2 pi (1 - cos r) at n = 3
    const double r = oracle::pi / 4;
    const double v = 2 * oracle::pi * (1 - std::cos(r));
    CHECK(c5_constant(3, r) == doctest::Approx(2 * oracle::pi * v / (2 * std::tan(r) * std::sin(r))).epsilon(1e-12));
  }

  TEST_CASE("perturbation signs follow lambda_k^2 - c5") {
    const double r = oracle::pi / 4;
    const double c5 = c5_constant(3, r);
    for (int k : {2, 4}) {
      const PerturbationResult res = perturbation_sign_experiment(3, r, k, default_beta_schedule());
      const double lambda = radon_multiplier(3, k);
      CAPTURE(k);
      CHECK(res.predicted_sign == (lambda * lambda > c5 ? 1 : -1));
      CHECK(res.conclusive);
      CHECK(res.sign_matches());
      CHECK(res.ratio_deviation() < 0.05);
      CHECK_FALSE(res.steps.empty());
      CHECK(res.lhs_B == doctest::Approx(oracle::ball_functional(1, 3, r)).epsilon(1e-9));
    }
  }

  TEST_CASE("a single sharpness row respects the bound") {
    const auto rows = sharpness_schedule(3, 0.5, {0.3}, {0.3});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].bound == doctest::Approx(32 / (oracle::pi * oracle::pi)));
    CHECK(rows[0].normalized >= rows[0].bound);
    CHECK(rows[0].rel_excess == doctest::Approx(rows[0].normalized / rows[0].bound - 1));
    CHECK(rows[0].volume == doctest::Approx(0.5 * oracle::ball_volume(1, 3, oracle::pi / 2)).epsilon(1e-8));
    CHECK(default_sharpness_alphas().size() == default_sharpness_epsilons().size());
  }

  TEST_CASE("search keeps volume and improves monotonically") {
    SearchSettings s;
    s.budget = 60;
    s.seed = 4;
    s.nodes = 24;
    const SearchTrace trace = extremizer_search(s);
    CHECK(trace.max_drift <= 1e-8);
    CHECK(trace.steps.size() == 60);
    CHECK(trace.accepted > 0);
    double best = -INFINITY;
    for (const SearchStep& step : trace.steps) {
      if (!step.accepted) continue;
      CHECK(step.objective >= best);
      best = step.objective;
      CHECK(step.volume_drift <= 1e-8);
    }
    CHECK(trace.best_objective == doctest::Approx(best));
    CHECK(trace.best_profile.size() == 24);

    s.sense = SearchSense::Minimize;
    s.symmetric = true;
    const SearchTrace down = extremizer_search(s);
    double worst = INFINITY;
    for (const SearchStep& step : down.steps) {
      if (!step.accepted) continue;
      CHECK(step.objective <= worst);
      worst = step.objective;
    }
    const StarBody body = grid_body(s.space, down.best_profile, true);
    CHECK(body.symmetric());
  }
}
