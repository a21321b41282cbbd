#include "busemann/bounds.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "busemann/errors.hpp"
#include "busemann/functionals.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

constexpr double kRelTol = 1e-13;

double invert_increasing(const std::function<double(double)>& f, double value, double lo, double hi) {
  std::uintmax_t iterations = 300;
  auto g = [&](double x) { return f(x) - value; };
  const auto root = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(50),
                                                      iterations);
  if (iterations >= 300) throw ConvergenceError("root solve did not converge");
  return 0.5 * (root.first + root.second);
}

void require_space(const SpaceSpec& space, Curvature c, const char* theorem) {
  if (space.curvature != c) {
    throw ApplicabilityError(std::string(theorem) + " does not apply in " + space.label());
  }
}

void require_dim(const SpaceSpec& space, int lo, int hi, const char* theorem) {
  if (space.dim < lo || space.dim > hi) {
    throw ApplicabilityError(std::string(theorem) + " does not apply in dimension " + std::to_string(space.dim));
  }
}

}  // namespace

double fn_hyperbolic(int n, double t) {
  if (n < 1) throw DomainError("F_n needs n >= 1");
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("F_n is defined on [0, 1)");
  if (t == 0.0) return 0.0;
  if (n == 1) return std::atanh(t);
  if (n == 2) return t * t / (2.0 * (1.0 - t * t));
  auto f = [n](double r) { return std::pow(r, n - 1) / std::pow((1.0 - r) * (1.0 + r), n); };
  return integrate_toward_one(f, 0.0, t, kRelTol).value;
}

double fn_hyperbolic_inverse(int n, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) throw DomainError("F_n inverse needs a finite value >= 0");
  if (value == 0.0) return 0.0;
  double hi = 0.5;
  int halvings = 1;
  while (fn_hyperbolic(n, hi) < value) {
    ++halvings;
    if (halvings > 50) throw DomainError("F_n inverse: value too large for double precision");
    hi = 1.0 - std::ldexp(1.0, -halvings);
  }
  return invert_increasing([n](double t) { return fn_hyperbolic(n, t); }, value, 0.0, hi);
}

double g_hyperbolic(int n, double t) {
  if (n < 2) throw DomainError("G needs n >= 2");
  if (!(t >= 0.0)) throw DomainError("G is defined for t >= 0");
  if (t == 0.0) return 0.0;
  return std::pow(fn_hyperbolic(n - 1, fn_hyperbolic_inverse(n, t)), static_cast<double>(n) / (n - 1));
}

double h_hyperbolic(int n, double t) {
  return std::pow(g_hyperbolic(n, t / (std::ldexp(1.0, n) * sphere_area(n - 1))), n - 1);
}

double spherical_inner(int n, double t) {
  if (n < 2) throw DomainError("spherical F needs n >= 2");
  if (!(t >= 0.0)) throw DomainError("spherical inner integral needs t >= 0");
  if (t == 0.0) return 0.0;
  if (n == 2) return std::isinf(t) ? 0.5 : t * t / (2.0 * (1.0 + t * t));
  auto f = [n](double r) { return std::pow(r, n - 1) / std::pow(1.0 + r * r, n); };
  return integrate_radial_relative(f, 0.0, t, kRelTol).value;
}

double spherical_inner_limit(int n) { return spherical_inner(n, std::numeric_limits<double>::infinity()); }

double f_spherical(int n, double v) {
  if (n < 2) throw DomainError("spherical F needs n >= 2");
  const double limit = spherical_inner_limit(n);
  if (!(v >= 0.0) || v > limit * (1.0 + 1e-14)) {
    throw DomainError("spherical F argument outside [0, " + std::to_string(limit) + "]");
  }
  if (v == 0.0) return 0.0;
  auto outer = [n](double t) {
    if (n == 2) return std::atan(t);
    auto g = [n](double r) { return std::pow(r, n - 2) / std::pow(1.0 + r * r, n - 1); };
    return integrate_radial_relative(g, 0.0, t, kRelTol).value;
  };
  if (v >= limit) return outer(std::numeric_limits<double>::infinity());
  if (n == 2) return std::atan(std::sqrt(2.0 * v / (1.0 - 2.0 * v)));
  double hi = 1.0;
  while (spherical_inner(n, hi) < v) {
    hi *= 2.0;
    if (hi > 1e150) throw ConvergenceError("spherical F inverse could not bracket its argument");
  }
  return outer(invert_increasing([n](double t) { return spherical_inner(n, t); }, v, 0.0, hi));
}

double bound_constants(ConstantKind kind, int n) {
  if (n < 2) throw DomainError("constants need n >= 2");
  const double busemann = n * std::pow(unit_ball_volume(n - 1), n) / std::pow(unit_ball_volume(n), n - 2);
  switch (kind) {
    case ConstantKind::Busemann:
      return busemann;
    case ConstantKind::Hyperbolic:
      return std::pow(sphere_area(n - 1), n - 1) * n * std::ldexp(1.0, n * (n - 1)) * std::pow(1.0 - 1.0 / n, n) *
             busemann;
    case ConstantKind::SphericalConcave:
      return std::ldexp(1.0, n - 1) * sphere_area(n - 1) * sphere_area(n - 2);
    case ConstantKind::SphericalPower:
      return std::ldexp(1.0, n - 1) * busemann;
    case ConstantKind::SphericalMinimum:
      if (n < 3) throw DomainError("the spherical minimum constant needs n >= 3");
      return 2.0 * std::pow(boost::math::tgamma(0.5 * (n + 1)), n) * std::pow(boost::math::tgamma(0.5 * n), -n - 1);
  }
  throw UnsupportedError("unknown constant kind");
}

const char* to_string(ConstantKind kind) noexcept {
  switch (kind) {
    case ConstantKind::Busemann: return "busemann";
    case ConstantKind::Hyperbolic: return "hyperbolic";
    case ConstantKind::SphericalConcave: return "spherical-concave";
    case ConstantKind::SphericalPower: return "spherical-power";
    case ConstantKind::SphericalMinimum: return "spherical-minimum";
  }
  return "unknown";
}

const char* theorem_id(Theorem t) noexcept {
  switch (t) {
    case Theorem::BusemannEuclidean: return "busemann-euclidean";
    case Theorem::Hyperbolic: return "hyperbolic";
    case Theorem::SphericalConcave: return "concave-bound";
    case Theorem::SphericalConcaveLiteral: return "concave-bound-literal";
    case Theorem::SphericalPower: return "power-bound";
    case Theorem::Min2d: return "min2d";
    case Theorem::ConeMax: return "cone-max";
    case Theorem::LuneMax: return "lune-max";
    case Theorem::MinNd: return "min-nd";
    case Theorem::Gaussian: return "gaussian";
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(const std::string& id) {
  for (Theorem t : {Theorem::BusemannEuclidean, Theorem::Hyperbolic, Theorem::SphericalConcave,
                    Theorem::SphericalConcaveLiteral, Theorem::SphericalPower, Theorem::Min2d, Theorem::ConeMax,
                    Theorem::LuneMax, Theorem::MinNd, Theorem::Gaussian}) {
    if (id == theorem_id(t)) return t;
  }
  return std::nullopt;
}

bool upper_bound(Theorem t) noexcept { return !(t == Theorem::Min2d || t == Theorem::MinNd); }

int theorem_exponent(Theorem t, int n) noexcept {
  return (t == Theorem::SphericalConcave || t == Theorem::SphericalConcaveLiteral) ? 1 : n;
}

RadialDensityMeasure theorem_measure(Theorem t) {
  return t == Theorem::Gaussian ? RadialDensityMeasure::gaussian() : RadialDensityMeasure::uniform();
}

double arccos_one_minus(double u) {
  if (!(u >= 0.0 && u <= 2.0)) throw DomainError("arccos(1 - u) needs u in [0, 2]");
  // arccos(1 - u) = 2 asin(sqrt(u / 2)) avoids forming 1 - u.
  return 2.0 * std::asin(std::sqrt(0.5 * u));
}

double lune_bound(double vol) {
  if (!(vol > 0.0 && vol < 2.0 * kPi)) throw DomainError("lune bound needs 0 < vol < 2 pi");
  const double tq = std::tan(0.25 * vol);
  auto f = [tq](double theta) {
    const double a = std::atan2(tq, std::cos(theta));
    return a * a;
  };
  return 16.0 * integrate_radial_relative(f, 0.0, kHalfPi, kRelTol).value;
}

double rhs_value(Theorem t, const SpaceSpec& space, double vol) {
  const int n = space.dim;
  const char* name = theorem_id(t);
  if (!(vol >= 0.0)) throw DomainError("volume must be nonnegative");
  switch (t) {
    case Theorem::BusemannEuclidean:
      require_space(space, Curvature::Euclidean, name);
      return bound_constants(ConstantKind::Busemann, n) * std::pow(vol, n - 1);
    case Theorem::Hyperbolic:
      require_space(space, Curvature::Hyperbolic, name);
      return bound_constants(ConstantKind::Hyperbolic, n) * h_hyperbolic(n, vol);
    case Theorem::SphericalConcave:
      require_space(space, Curvature::Spherical, name);
      return bound_constants(ConstantKind::SphericalConcave, n) *
             f_spherical(n, vol / (std::ldexp(1.0, n) * sphere_area(n - 1)));
    case Theorem::SphericalConcaveLiteral: {
      require_space(space, Curvature::Spherical, name);
      // Beyond the domain of F the right side is read as its supremum.
      const double arg = std::min(vol / sphere_area(n - 1), spherical_inner_limit(n));
      return bound_constants(ConstantKind::SphericalConcave, n) * f_spherical(n, arg);
    }
    case Theorem::SphericalPower:
      require_space(space, Curvature::Spherical, name);
      return bound_constants(ConstantKind::SphericalPower, n) * std::pow(vol, n - 1);
    case Theorem::Min2d: {
      require_space(space, Curvature::Spherical, name);
      require_dim(space, 2, 2, name);
      const double a = arccos_one_minus(vol / (2.0 * kPi));
      return 8.0 * kPi * a * a;
    }
    case Theorem::ConeMax:
      require_space(space, Curvature::Spherical, name);
      require_dim(space, 2, 2, name);
      return kPi * kPi * vol;
    case Theorem::LuneMax:
      require_space(space, Curvature::Spherical, name);
      require_dim(space, 2, 2, name);
      return lune_bound(vol);
    case Theorem::MinNd:
      require_space(space, Curvature::Spherical, name);
      require_dim(space, 3, 1 << 20, name);
      return bound_constants(ConstantKind::SphericalMinimum, n) * std::pow(vol, n);
    case Theorem::Gaussian:
      return std::pow(Psi(RadialDensityMeasure::gaussian(), space, n, vol), n - 1);
  }
  throw UnsupportedError("unknown theorem");
}

namespace {

void check_space(Theorem t, const SpaceSpec& space) {
  const char* name = theorem_id(t);
  switch (t) {
    case Theorem::BusemannEuclidean: require_space(space, Curvature::Euclidean, name); break;
    case Theorem::Hyperbolic: require_space(space, Curvature::Hyperbolic, name); break;
    case Theorem::SphericalConcave:
    case Theorem::SphericalConcaveLiteral:
    case Theorem::SphericalPower: require_space(space, Curvature::Spherical, name); break;
    case Theorem::Min2d:
    case Theorem::ConeMax:
    case Theorem::LuneMax:
      require_space(space, Curvature::Spherical, name);
      require_dim(space, 2, 2, name);
      break;
    case Theorem::MinNd:
      require_space(space, Curvature::Spherical, name);
      require_dim(space, 3, 1 << 20, name);
      break;
    case Theorem::Gaussian: break;
  }
}

}  // namespace

void check_applicable(Theorem t, const StarBody& body) {
  check_space(t, body.space());
  if ((t == Theorem::Min2d || t == Theorem::ConeMax || t == Theorem::LuneMax) && !body.symmetric()) {
    throw ApplicabilityError(std::string(theorem_id(t)) + " applies to origin-symmetric bodies only");
  }
}

double rhs_bound(Theorem t, const StarBody& body) {
  check_applicable(t, body);
  return rhs_value(t, body.space(), volume(body, theorem_measure(t)).value);
}

std::pair<double, double> phi_ratio_inequality_check(int n, double x) {
  const SpaceSpec space = SpaceSpec::make(1, n);
  space.check_radius(x);
  const double ratio = phi(space, n - 1, kHalfPi) / phi(space, n, kHalfPi);
  return {ratio * phi(space, n, x), phi(space, n - 1, x)};
}

double minineq_gap(double x, double r) {
  if (!(x > 0.0 && x <= kHalfPi + 1e-14 && r > 0.0 && r <= kHalfPi + 1e-14)) {
    throw DomainError("the inequality is stated for x, r in (0, pi/2]");
  }
  // cos r - cos x = 2 sin((x + r)/2) sin((x - r)/2) keeps digits near x = r.
  return (x - r) * (x + r) - 2.0 * r / std::sin(r) * 2.0 * std::sin(0.5 * (x + r)) * std::sin(0.5 * (x - r));
}

double comparison_weight(double x) {
  if (x == 0.0) return 2.0;
  return 2.0 * x / std::sin(x);
}

}  // namespace busemann
