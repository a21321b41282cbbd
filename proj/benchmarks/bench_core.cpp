#include <benchmark/benchmark.h>

#include "busemann/bodies.hpp"
#include "busemann/functionals.hpp"
#include "busemann/quadrature.hpp"
#include "busemann/random_bodies.hpp"
#include "busemann/verify.hpp"

using namespace busemann;

static void BM_SphereRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_sphere_rule(m, degree));
}
BENCHMARK(BM_SphereRule)->Args({2, 23})->Args({2, 47})->Args({3, 23});

static void BM_SectionVolume(benchmark::State& state) {
  Rng rng(1);
  const StarBody body = random_star_body(SpaceSpec::make(1, 3), rng, false);
  const Direction xi = random_direction(3, rng);
  FunctionalOptions o;
  o.inner_degree = 47;
  o.estimate_error = false;
  for (auto _ : state) benchmark::DoNotOptimize(section_volume(body, xi, RadialDensityMeasure::uniform(), o));
}
BENCHMARK(BM_SectionVolume);

// Fixed degrees so that every iteration does the same work.
static void BM_FunctionalFixed(benchmark::State& state) {
  const int delta = static_cast<int>(state.range(0));
  Rng rng(2);
  const StarBody body = random_star_body(SpaceSpec::make(delta, 3), rng, false);
  FunctionalOptions o;
  o.outer_degree = 23;
  o.inner_degree = 23;
  o.estimate_error = false;
  for (auto _ : state) benchmark::DoNotOptimize(busemann_functional(body, RadialDensityMeasure::uniform(), o));
}
BENCHMARK(BM_FunctionalFixed)->Arg(-1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_FunctionalAdaptive(benchmark::State& state) {
  Rng rng(3);
  const StarBody body = random_star_body(SpaceSpec::make(1, 3), rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(busemann_functional(body));
}
BENCHMARK(BM_FunctionalAdaptive)->Unit(benchmark::kMillisecond);

static void BM_ConeFunctional(benchmark::State& state) {
  Rng rng(4);
  const StarBody cone = make_cone(random_symmetric_cone_base(3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(busemann_functional(cone));
}
BENCHMARK(BM_ConeFunctional)->Unit(benchmark::kMillisecond);

static void BM_VerifySuite(benchmark::State& state) {
  const auto bodies = random_bodies(BodyClass::Star, SpaceSpec::make(1, 3), 5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem_suite(Theorem::MinNd, bodies));
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
