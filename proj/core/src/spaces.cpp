#include "busemann/spaces.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "busemann/errors.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

// Radii are accepted up to pi/2 plus a few ulp; they are never clamped.
constexpr double kHemisphereSlack = 1e-14;

// Below this radius the closed forms lose digits to cancellation.
constexpr double kSmallRadius = 0.25;

double small_radius_phi(const SpaceSpec& space, int m, double x) {
  auto integrand = [&](double t) { return std::pow(metric_sine(space, t), m - 1); };
  return boost::math::quadrature::gauss<double, 20>::integrate(integrand, 0.0, x);
}

}  // namespace

SpaceSpec SpaceSpec::make(int delta, int dim) {
  if (delta < -1 || delta > 1) {
    throw DomainError("curvature sign must be -1, 0 or +1, got " + std::to_string(delta));
  }
  if (dim < 2) {
    throw DomainError("dimension must be >= 2, got " + std::to_string(dim));
  }
  return SpaceSpec{static_cast<Curvature>(delta), dim};
}

double SpaceSpec::max_radius() const noexcept {
  return spherical() ? kHalfPi : std::numeric_limits<double>::infinity();
}

bool SpaceSpec::valid_radius(double r) const noexcept {
  if (!(r >= 0.0)) return false;
  if (spherical()) return r <= kHalfPi + kHemisphereSlack;
  return std::isfinite(r);
}

void SpaceSpec::check_radius(double r, const char* what) const {
  if (!valid_radius(r)) {
    throw DomainError(std::string(what) + " = " + std::to_string(r) + " is outside the radius range of " +
                      label());
  }
}

std::string SpaceSpec::label() const {
  const char* prefix = spherical() ? "s+" : (hyperbolic() ? "h" : "r");
  return std::string(prefix) + ":" + std::to_string(dim);
}

Direction::Direction(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("direction must have at least one component");
  const double len = norm(coords_);
  if (std::abs(len - 1.0) > 1e-12) {
    throw DomainError("direction is not a unit vector (norm " + std::to_string(len) + ")");
  }
}

Direction Direction::normalized(std::vector<double> v) {
  const double len = norm(v);
  if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("cannot normalize a zero or non-finite vector");
  for (double& c : v) c /= len;
  return Direction(std::move(v), Unchecked{});
}

Direction Direction::axis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) throw DomainError("axis index out of range");
  std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
  v[static_cast<std::size_t>(index)] = 1.0;
  return Direction(std::move(v), Unchecked{});
}

Direction Direction::operator-() const {
  std::vector<double> v = coords_;
  for (double& c : v) c = -c;
  return Direction(std::move(v), Unchecked{});
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) noexcept { return std::sqrt(dot(a, a)); }

double sphere_area(int m) {
  if (m < 0) throw DomainError("sphere dimension must be >= 0");
  static const auto table = [] {
    std::array<double, 64> t{};
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double h = 0.5 * (static_cast<double>(i) + 1.0);
      t[i] = 2.0 * std::pow(kPi, h) / boost::math::tgamma(h);
    }
    return t;
  }();
  if (m < static_cast<int>(table.size())) return table[static_cast<std::size_t>(m)];
  const double h = 0.5 * (m + 1);
  return 2.0 * std::pow(kPi, h) / boost::math::tgamma(h);
}

double unit_ball_volume(int n) {
  if (n < 0) throw DomainError("ball dimension must be >= 0");
  const double h = 0.5 * n;
  return std::pow(kPi, h) / boost::math::tgamma(h + 1.0);
}

double metric_sine(const SpaceSpec& space, double r) {
  space.check_radius(r, "geodesic radius");
  switch (space.curvature) {
    case Curvature::Spherical: return std::sin(r);
    case Curvature::Hyperbolic: return std::sinh(r);
    case Curvature::Euclidean: break;
  }
  return r;
}

double phi(const SpaceSpec& space, int m, double x) {
  if (m < 1) throw DomainError("phi order must be >= 1");
  space.check_radius(x, "phi argument");
  if (x == 0.0) return 0.0;
  if (space.euclidean()) return std::pow(x, m) / m;
  if (m == 1) return x;

  if (m <= 4) {
    if (x < kSmallRadius) return small_radius_phi(space, m, x);
    if (space.spherical()) {
      const double c = std::cos(x);
      switch (m) {
        case 2: return 1.0 - c;
        case 3: return 0.5 * x - 0.25 * std::sin(2.0 * x);
        default: return 2.0 / 3.0 - c + c * c * c / 3.0;
      }
    }
    const double ch = std::cosh(x);
    switch (m) {
      case 2: return ch - 1.0;
      case 3: return 0.25 * std::sinh(2.0 * x) - 0.5 * x;
      default: return ch * ch * ch / 3.0 - ch + 2.0 / 3.0;
    }
  }

  auto integrand = [&](double t) {
    return std::pow(space.spherical() ? std::sin(t) : std::sinh(t), m - 1);
  };
  return integrate_radial_relative(integrand, 0.0, x, 1e-13).value;
}

double ball_model_radius(const SpaceSpec& space, double r) {
  space.check_radius(r, "geodesic radius");
  switch (space.curvature) {
    case Curvature::Spherical: return std::tan(0.5 * r);
    case Curvature::Hyperbolic: return std::tanh(0.5 * r);
    case Curvature::Euclidean: break;
  }
  return 0.5 * r;
}

double ball_model_radius_inverse(const SpaceSpec& space, double t) {
  const bool ok = space.spherical() ? (t >= 0.0 && t <= 1.0 + 1e-15)
                  : space.hyperbolic() ? (t >= 0.0 && t < 1.0)
                                       : (t >= 0.0 && std::isfinite(t));
  if (!ok) {
    throw DomainError("ball-model radius " + std::to_string(t) + " is outside the model of " + space.label());
  }
  switch (space.curvature) {
    case Curvature::Spherical: return 2.0 * std::atan(t);
    case Curvature::Hyperbolic: return 2.0 * std::atanh(t);
    case Curvature::Euclidean: break;
  }
  return 2.0 * t;
}

double gnomonic_radial(double rho) {
  if (!(rho >= 0.0) || rho > kHalfPi + kHemisphereSlack) {
    throw DomainError("gnomonic projection needs rho in [0, pi/2], got " + std::to_string(rho));
  }
  if (rho >= kHalfPi) return std::numeric_limits<double>::infinity();
  return std::tan(rho);
}

}  // namespace busemann
