#include "busemann/measures.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "busemann/errors.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

constexpr double kRadialRelTol = 1e-12;

}  // namespace

RadialDensityMeasure RadialDensityMeasure::uniform() { return {}; }

RadialDensityMeasure RadialDensityMeasure::gaussian() {
  RadialDensityMeasure mu;
  mu.kind_ = DensityKind::Gaussian;
  mu.name_ = "gaussian";
  return mu;
}

RadialDensityMeasure RadialDensityMeasure::custom(std::string name, std::function<double(double)> density) {
  if (!density) throw DomainError("custom density needs a callable");
  RadialDensityMeasure mu;
  mu.kind_ = DensityKind::Custom;
  mu.name_ = std::move(name);
  mu.custom_ = std::move(density);
  return mu;
}

double RadialDensityMeasure::density(int m, double r) const {
  switch (kind_) {
    case DensityKind::Uniform:
      return 1.0;
    case DensityKind::Gaussian:
      return std::pow(2.0 * kPi, -0.5 * m) * std::exp(-0.5 * r * r);
    case DensityKind::Custom:
      return custom_(r);
  }
  return 1.0;
}

double RadialDensityMeasure::radial_integral(const SpaceSpec& space, int m, double x) const {
  if (m < 1) throw DomainError("slice dimension must be >= 1");
  if (std::isinf(x) && space.spherical()) throw DomainError("infinite radius in the hemisphere");
  if (!std::isinf(x)) space.check_radius(x);
  if (x == 0.0) return 0.0;
  if (kind_ == DensityKind::Uniform) {
    if (std::isinf(x)) return std::numeric_limits<double>::infinity();
    return phi(space, m, x);
  }
  if (kind_ == DensityKind::Gaussian && space.euclidean()) {
    // (2 pi)^{-m/2} int_0^x e^{-t^2/2} t^{m-1} dt = P(m/2, x^2/2) / |S^{m-1}|
    const double p = std::isinf(x) ? 1.0 : boost::math::gamma_p(0.5 * m, 0.5 * x * x);
    return p / sphere_area(m - 1);
  }
  auto integrand = [&](double t) {
    const double s = metric_sine(space, t);
    return density(m, t) * (m == 1 ? 1.0 : std::pow(s, m - 1));
  };
  if (std::isinf(x)) {
    // Split so the tail integral starts where the density has decayed.
    const double head = integrate_radial_relative(integrand, 0.0, 1.0, kRadialRelTol).value;
    auto tail = [&](double u) {
      const double t = 1.0 / u;
      return integrand(t) / (u * u);
    };
    return head + integrate_radial_relative(tail, 0.0, 1.0, kRadialRelTol).value;
  }
  return integrate_radial_relative(integrand, 0.0, x, kRadialRelTol).value;
}

bool RadialDensityMeasure::is_decreasing(int m, double r_max, int points) const {
  double prev = density(m, 0.0);
  for (int i = 1; i < points; ++i) {
    const double cur = density(m, r_max * i / (points - 1));
    if (cur > prev) return false;
    prev = cur;
  }
  return true;
}

double psi(const RadialDensityMeasure& mu, const SpaceSpec& space, int m, double x) {
  return sphere_area(m - 1) * mu.radial_integral(space, m, x);
}

double psi_inverse(const RadialDensityMeasure& mu, const SpaceSpec& space, int m, double value) {
  if (!(value >= 0.0)) throw DomainError("measure value must be nonnegative");
  if (value == 0.0) return 0.0;
  const double top = space.spherical() ? kHalfPi : std::numeric_limits<double>::infinity();
  const double limit = psi(mu, space, m, top);
  if (space.spherical() && value >= limit && value <= limit * (1.0 + 1e-14)) return kHalfPi;
  if (!(value < limit)) throw DomainError("value lies outside the range of psi");
  auto f = [&](double x) { return psi(mu, space, m, x) - value; };
  double hi = space.spherical() ? kHalfPi : 1.0;
  while (!space.spherical() && f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e6) throw ConvergenceError("psi inverse could not bracket the radius");
  }
  std::uintmax_t iterations = 200;
  const auto root =
      boost::math::tools::toms748_solve(f, 0.0, hi, boost::math::tools::eps_tolerance<double>(50), iterations);
  return 0.5 * (root.first + root.second);
}

double Psi(const RadialDensityMeasure& mu, const SpaceSpec& space, int n, double t) {
  if (n < 2) throw DomainError("Psi needs n >= 2");
  const double x = psi_inverse(mu, space, n, t);
  return std::pow(psi(mu, space, n - 1, x), static_cast<double>(n) / (n - 1));
}

}  // namespace busemann
