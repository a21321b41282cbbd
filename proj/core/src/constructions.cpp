#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "busemann/bodies.hpp"
#include "busemann/bounds.hpp"
#include "busemann/errors.hpp"
#include "busemann/functionals.hpp"

namespace busemann {

namespace {

// Cap height used by the vanishing-functional construction; any cap of
// measure below half the sphere works.
constexpr double kVanishingCap = 0.05;
constexpr int kVanishingMaxStrips = 8192;

struct StripBuild {
  ConeBase base;
  double gamma;
  int strips;
};

double strips_measure(int n, double alpha, double pitch, int strips, double gamma) {
  double total = 0.0;
  for (int k = 1; k <= strips; ++k) {
    const double lo = alpha + (k - gamma) * pitch;
    const double hi = std::min(alpha + k * pitch, 1.0);
    if (lo < hi) total += zone_measure(n - 1, lo, hi);
  }
  return total;
}

StripBuild build_strips(const Direction& axis, double alpha, double lambda, double pitch, double cap) {
  const int n = axis.dim();
  // Smallest integer greater than (1 - alpha) / pitch.
  const int strips = static_cast<int>(std::floor((1.0 - alpha) / pitch)) + 1;
  double gamma = 1.0;
  if (lambda < 1.0) {
    const double target = lambda * cap;
    auto f = [&](double g) { return strips_measure(n, alpha, pitch, strips, g) - target; };
    std::uintmax_t iterations = 200;
    const auto root =
        boost::math::tools::toms748_solve(f, 0.0, 1.0, boost::math::tools::eps_tolerance<double>(52), iterations);
    gamma = 0.5 * (root.first + root.second);
  }
  std::vector<Zone> zones;
  zones.reserve(static_cast<std::size_t>(strips));
  for (int k = 1; k <= strips; ++k) {
    const double lo = alpha + (k - gamma) * pitch;
    const double hi = std::min(alpha + k * pitch, 1.0);
    if (lo < hi) zones.push_back(Zone{axis, lo, hi});
  }
  return {ConeBase(n, std::move(zones)), gamma, strips};
}

// Largest pitch for which the covering argument certifies
// |A ∩ xi^perp| <= lambda |C ∩ xi^perp| + eps.
double certified_pitch(int n, double alpha, double lambda, double eps, double cap) {
  const double fa = sphere_area(n - 2) * std::pow(1.0 - alpha * alpha, 0.5 * (n - 3));
  const double c2 = 2.0 * lambda * fa / cap * sphere_area(n - 2);
  // The gamma estimate needs pitch * f(alpha) / |C| <= 1/2; n = 3 also needs pitch < alpha.
  double ceiling = 0.999 * cap / (2.0 * fa);
  if (n > 3) return std::min(eps / c2, ceiling);
  ceiling = std::min(ceiling, 0.999 * alpha);
  auto slack = [&](double d) { return c2 * d + 2.0 * arccos_one_minus(d / alpha) - eps; };
  if (slack(ceiling) <= 0.0) return ceiling;
  std::uintmax_t iterations = 200;
  const auto root = boost::math::tools::toms748_solve(slack, 0.0, ceiling,
                                                      boost::math::tools::eps_tolerance<double>(40), iterations);
  return root.first;
}

// Largest section excess over a grid of |<xi, axis>| values, including every
// height at which a strip boundary becomes tangent to the great subsphere.
double max_section_excess(const ConeBase& strips, const Direction& axis, double alpha, double lambda,
                          int check_points) {
  const int n = axis.dim();
  const ConeBase cap = ConeBase::cap(axis, alpha);
  std::vector<double> heights;
  for (int i = 0; i <= check_points; ++i) heights.push_back(alpha + (1.0 - alpha) * i / check_points);
  if (strips.zones().size() <= 10'000) {
    for (const Zone& z : strips.zones()) {
      heights.push_back(z.lo);
      heights.push_back(std::min(z.hi, 1.0));
    }
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (double s : heights) {
    // s = sqrt(1 - c^2) is the length of the axis projection onto xi^perp.
    const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    const double excess = strips.section_measure_zonal(c) - lambda * cap.section_measure_zonal(c);
    worst = std::max(worst, excess);
  }
  (void)n;
  return worst;
}

}  // namespace

StripedCap striped_cap_subset(double alpha, const Direction& axis, double lambda, double eps,
                              const StripedCapOptions& options) {
  const int n = axis.dim();
  if (n < 3) throw UnsupportedError("striped caps are constructed for n >= 3");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("cap height must lie in (0, 1)");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("fraction must lie in (0, 1]");
  if (!(eps > 0.0)) throw DomainError("section tolerance must be positive");
  StripedCap out{ConeBase::full(n)};
  out.alpha = alpha;
  out.lambda = lambda;
  out.cap_measure = zone_measure(n - 1, alpha, 1.0);
  out.certified_pitch = std::isfinite(eps) ? certified_pitch(n, alpha, lambda, eps, out.cap_measure) : 0.0;

  auto accept = [&](double pitch) {
    StripBuild b = build_strips(axis, alpha, lambda, pitch, out.cap_measure);
    out.pitch = pitch;
    out.gamma = b.gamma;
    out.strips = b.strips;
    out.base = std::move(b.base);
    out.max_excess = max_section_excess(out.base, axis, alpha, lambda, options.check_points);
  };

  if (options.pitch) {
    if (!(*options.pitch > 0.0 && *options.pitch < 1.0 - alpha)) throw DomainError("strip pitch out of range");
    if ((1.0 - alpha) / *options.pitch > options.max_strips) throw ResourceError("strip count exceeds the cap");
    accept(*options.pitch);
    return out;
  }
  // Coarsest pitch on a halving ladder that passes the section test; the
  // certified pitch is the fallback.
  for (int count = 16; count <= options.max_strips; count *= 2) {
    const double pitch = (1.0 - alpha) / count;
    if (pitch <= out.certified_pitch) break;
    accept(pitch);
    if (out.max_excess <= eps) return out;
  }
  if (out.certified_pitch <= 0.0 || (1.0 - alpha) / out.certified_pitch > options.max_strips) {
    throw ResourceError("no strip pitch within the strip cap meets the section tolerance " + std::to_string(eps));
  }
  accept(out.certified_pitch);
  return out;
}

StripedCone make_striped_cone(int n, double t, double alpha, double eps, const StripedCapOptions& options) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("volume fraction must lie in (0, 1)");
  const Direction axis = Direction::axis(n, 0);
  const double cap = zone_measure(n - 1, alpha, 1.0);
  if (!(cap > 0.5 * t * sphere_area(n - 1))) {
    throw PreconditionError("cap is too small for the requested volume fraction");
  }
  const double lambda = t * sphere_area(n - 1) / (2.0 * cap);
  StripedCap striped = striped_cap_subset(alpha, axis, lambda, eps, options);
  StarBody body = make_cone(striped.base.symmetrized());
  const SpaceSpec space = SpaceSpec::make(1, n);
  const double target = t * sphere_area(n - 1) * phi(space, n, kHalfPi);
  const double vol = volume(body).value;
  if (std::abs(vol - target) > 1e-8 * target) throw ConvergenceError("striped cone volume missed its target");
  return {std::move(body), std::move(striped), t};
}

StarBody make_complementary_cone(int n, double a, const Direction& axis) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("complementary cone needs 0 < a < 1");
  if (axis.dim() != n) throw DomainError("axis dimension mismatch");
  return make_cone(ConeBase(n, {Zone{axis, a, 1.0}, Zone{axis, -a, 0.0}}));
}

VanishingBody make_vanishing_body(const SpaceSpec& space, double vol, double eta) {
  const int n = space.dim;
  if (space.spherical()) throw ApplicabilityError("the vanishing construction lives in R^n or H^n");
  if (n < 3) throw UnsupportedError("the vanishing construction needs n >= 3");
  if (!(vol > 0.0) || !(eta > 0.0)) throw DomainError("volume and target must be positive");
  const Direction axis = Direction::axis(n, 0);
  const ConeBase cap = ConeBase::cap(axis, kVanishingCap);
  // int |C ∩ xi^perp|^n over the sphere, read off a unit-height cone in S^n_+.
  const SpaceSpec sphere = SpaceSpec::make(1, n);
  const double cap_integral =
      busemann_functional(make_cone(cap)).value / std::pow(phi(sphere, n - 1, kHalfPi), n);
  auto main_term = [&](double r) {
    return std::pow(phi(space, n - 1, r) / phi(space, n, r) * vol / cap.measure(), n) * cap_integral;
  };
  auto feasible = [&](double r) {
    return phi(space, n, r) > vol / (2.0 * cap.measure()) && main_term(r) <= 0.25 * eta;
  };
  const double r_cap = space.hyperbolic() ? 700.0 : 1e8;
  double hi = 1.0;
  while (!feasible(hi)) {
    hi *= 2.0;
    if (hi > r_cap) throw ResourceError("radius needed for the vanishing construction exceeds float range");
  }
  double lo = 0.5 * hi;
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  const double r = hi;
  const double lambda = vol / (2.0 * phi(space, n, r) * cap.measure());
  StripedCapOptions options;
  for (int count = 64; count <= kVanishingMaxStrips; count *= 2) {
    options.pitch = (1.0 - kVanishingCap) / count;
    options.check_points = 200;
    StripedCap striped = striped_cap_subset(kVanishingCap, axis, lambda, std::numeric_limits<double>::infinity(),
                                            options);
    StarBody body = make_cone_set(space, striped.base.symmetrized(), r);
    const FunctionalValue f = busemann_functional(body);
    if (f.value + f.error <= eta) {
      const double achieved = volume(body).value;
      if (std::abs(achieved - vol) > 1e-8 * vol) throw ConvergenceError("vanishing body volume missed its target");
      return {std::move(body), std::move(striped), r, f.value, main_term(r)};
    }
  }
  throw ResourceError("no strip pitch within the strip cap brings the functional below the target");
}

}  // namespace busemann
