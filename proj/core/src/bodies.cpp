#include "busemann/bodies.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "busemann/errors.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kSymmetryTolerance = 1e-10;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double wrap_angle(double phi) {
  double a = std::fmod(phi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

void check_rotation(const std::vector<double>& rotation, std::size_t n) {
  if (rotation.empty()) return;
  if (rotation.size() != n * n) throw DomainError("rotation must be an n x n matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += rotation[i * n + k] * rotation[j * n + k];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-10) throw DomainError("rotation rows must be orthonormal");
    }
  }
}

// (sum_i <u, e_i>^2 / a_i^2)^{-1/2} with e_i the rotation rows.
double ellipsoid_radial(const std::vector<double>& semiaxes, const std::vector<double>& rotation,
                        std::span<const double> u) {
  const std::size_t n = semiaxes.size();
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = rotation.empty() ? u[i] : dot(u, std::span<const double>(rotation.data() + i * n, n));
    q += c * c / (semiaxes[i] * semiaxes[i]);
  }
  return 1.0 / std::sqrt(q);
}

// Gnomonic radial function; +inf where no constraint binds.
double gnomonic_extent(const GnomonicShape& g, std::span<const double> u) {
  double best = std::numeric_limits<double>::infinity();
  if (!g.semiaxes.empty()) best = ellipsoid_radial(g.semiaxes, g.rotation, u);
  for (const Slab& s : g.slabs) {
    const double c = std::abs(dot(u, s.normal.coords()));
    if (c > 0.0) best = std::min(best, s.h / c);
  }
  return best;
}

// Index of the binding constraint (ellipse = -1) for the breakpoint search.
int gnomonic_active(const GnomonicShape& g, std::span<const double> u) {
  double best = std::numeric_limits<double>::infinity();
  int which = -2;
  if (!g.semiaxes.empty()) {
    best = ellipsoid_radial(g.semiaxes, g.rotation, u);
    which = -1;
  }
  for (std::size_t i = 0; i < g.slabs.size(); ++i) {
    const double c = std::abs(dot(u, g.slabs[i].normal.coords()));
    if (c > 0.0 && g.slabs[i].h / c < best) {
      best = g.slabs[i].h / c;
      which = static_cast<int>(i);
    }
  }
  return which;
}

double bump_radius(const BumpShape& b, std::span<const double> u) {
  double e = 0.0;
  for (const Bump& bump : b.bumps) {
    const double t = dot(u, bump.center.coords());
    double term = std::exp(bump.concentration * (t - 1.0));
    if (b.mirrored) term += std::exp(bump.concentration * (-t - 1.0));
    e += bump.amplitude * term;
  }
  return b.base * std::exp(e);
}

double angle_of(std::span<const double> u) { return std::atan2(u[1], u[0]); }

double grid_radius(const GridInterpolated& g, std::span<const double> u) {
  if (g.n == 2) {
    const double pos = wrap_angle(angle_of(u)) / kTwoPi * g.cols;
    const int j = std::min(static_cast<int>(pos), g.cols - 1);
    const double f = pos - j;
    const double a = g.values[static_cast<std::size_t>(j)];
    const double b = g.values[static_cast<std::size_t>((j + 1) % g.cols)];
    return a + f * (b - a);
  }
  const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
  const double row_pos = theta / kPi * (g.rows - 1);
  const int i = std::min(static_cast<int>(row_pos), g.rows - 2);
  const double fi = row_pos - i;
  const double col_pos = wrap_angle(angle_of(u)) / kTwoPi * g.cols;
  const int j = std::min(static_cast<int>(col_pos), g.cols - 1);
  const double fj = col_pos - j;
  const int j1 = (j + 1) % g.cols;
  auto at = [&](int r, int c) { return g.values[static_cast<std::size_t>(r * g.cols + c)]; };
  const double top = at(i, j) + fj * (at(i, j1) - at(i, j));
  const double bottom = at(i + 1, j) + fj * (at(i + 1, j1) - at(i + 1, j));
  return top + fi * (bottom - top);
}

bool zone_contains_height(const ConeBase& base, const Direction& axis, double t) {
  for (const Zone& z : base.zones()) {
    const double h = dot(z.axis.coords(), axis.coords()) > 0.0 ? t : -t;
    if (h >= z.lo && h <= z.hi) return true;
  }
  return false;
}

double harmonic_sup(const ZonalHarmonic& h) {
  // |C_k^{(a)}| and |T_k| attain their maximum on [-1, 1] at t = 1.
  return std::abs(h.profile(1.0));
}

void validate(const SpaceSpec& space, const ClosedForm& shape) {
  const auto n = static_cast<std::size_t>(space.dim);
  std::visit(Overloaded{
                 [&](const BallShape& b) { space.check_radius(b.r, "ball radius"); },
                 [&](const EllipsoidShape& e) {
                   if (!space.euclidean()) throw ApplicabilityError("ellipsoids are defined in R^n only");
                   if (e.semiaxes.size() != n) throw DomainError("ellipsoid needs one semiaxis per dimension");
                   for (double a : e.semiaxes) {
                     if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("ellipsoid semiaxes must be positive");
                   }
                   check_rotation(e.rotation, n);
                 },
                 [&](const LuneShape& l) {
                   if (!space.spherical() || space.dim != 2) throw ApplicabilityError("lunes live in S^2_+");
                   if (!(l.w > 0.0 && l.w < kHalfPi)) throw DomainError("lune half-width must lie in (0, pi/2)");
                   if (l.axis.dim() != 2) throw DomainError("lune axis must be a direction in R^2");
                 },
                 [&](const GnomonicShape& g) {
                   if (!space.spherical()) throw ApplicabilityError("gnomonic bodies live in S^n_+");
                   if (g.semiaxes.empty() && g.slabs.empty()) throw DomainError("gnomonic body needs a constraint");
                   if (!g.semiaxes.empty() && g.semiaxes.size() != n) throw DomainError("one semiaxis per dimension");
                   for (double a : g.semiaxes) {
                     if (!(a > 0.0)) throw DomainError("semiaxes must be positive");
                   }
                   check_rotation(g.rotation, n);
                   for (const Slab& s : g.slabs) {
                     if (!(s.h > 0.0) || s.normal.dim() != space.dim) throw DomainError("invalid slab");
                   }
                 },
                 [&](const BumpShape& b) {
                   if (!(b.base > 0.0)) throw DomainError("bump body base radius must be positive");
                   double exponent = 0.0;
                   for (const Bump& bump : b.bumps) {
                     if (bump.center.dim() != space.dim) throw DomainError("bump centre has the wrong dimension");
                     if (!(bump.concentration > 0.0)) throw DomainError("bump concentration must be positive");
                     const double peak = b.mirrored ? 1.0 + std::exp(-2.0 * bump.concentration) : 1.0;
                     exponent += std::max(0.0, bump.amplitude) * peak;
                   }
                   space.check_radius(b.base * std::exp(exponent), "bump body radius bound");
                 },
                 [&](const ConeShape& c) {
                   if (c.base.ambient_dim() != space.dim) throw DomainError("cone base has the wrong dimension");
                   space.check_radius(c.height, "cone height");
                 },
             },
             shape);
}

}  // namespace

StarBody::StarBody(SpaceSpec space, RadialProfile profile, bool symmetric)
    : space_(space), profile_(std::move(profile)), symmetric_(symmetric) {
  std::visit(Overloaded{
                 [&](const ClosedForm& c) { validate(space_, c); },
                 [&](const GridInterpolated& g) {
                   if (g.n != space_.dim) throw DomainError("grid dimension does not match the space");
                   if (g.n == 2) {
                     if (g.cols < 3 || g.rows != 1) throw DomainError("circle grid needs rows = 1 and >= 3 columns");
                   } else if (g.n == 3) {
                     if (g.rows < 3 || g.cols < 3) throw DomainError("sphere grid needs >= 3 rows and columns");
                   } else {
                     throw UnsupportedError("grid profiles are provided for n = 2 and n = 3");
                   }
                   if (g.values.size() != static_cast<std::size_t>(g.rows * g.cols)) {
                     throw DomainError("grid value count does not match its shape");
                   }
                   for (double v : g.values) {
                     if (!(v > 0.0)) throw DomainError("grid radii must be positive");
                     space_.check_radius(v, "grid radius");
                   }
                 },
                 [&](const HarmonicPerturbed& p) {
                   if (!space_.spherical()) throw ApplicabilityError("perturbed balls are built in S^n_+");
                   if (p.harmonic.ambient_dim() != space_.dim) throw DomainError("harmonic dimension mismatch");
                   const double spread = std::abs(p.beta) * harmonic_sup(p.harmonic);
                   const double lo = p.r + p.alpha - spread;
                   const double hi = p.r + p.alpha + spread;
                   if (!(lo > 0.0 && hi < kHalfPi)) {
                     throw DomainError("perturbed radial function leaves (0, pi/2)");
                   }
                 },
             },
             profile_);
  if (symmetric_) {
    const SphereRule rule = build_sphere_rule(space_.dim - 1, 11);
    std::vector<double> minus(static_cast<std::size_t>(space_.dim));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const auto u = rule.node(i);
      for (std::size_t j = 0; j < u.size(); ++j) minus[j] = -u[j];
      if (std::abs(radius(u) - radius(minus)) > kSymmetryTolerance) {
        throw PreconditionError("body is declared symmetric but rho(u) != rho(-u)");
      }
    }
  }
}

double StarBody::radius(std::span<const double> u) const {
  return std::visit(
      Overloaded{
          [&](const ClosedForm& c) -> double {
            return std::visit(
                Overloaded{
                    [](const BallShape& b) { return b.r; },
                    [&](const EllipsoidShape& e) { return ellipsoid_radial(e.semiaxes, e.rotation, u); },
                    [&](const LuneShape& l) {
                      return std::atan2(std::tan(l.w), std::abs(dot(u, l.axis.coords())));
                    },
                    [&](const GnomonicShape& g) {
                      const double e = gnomonic_extent(g, u);
                      return std::isinf(e) ? kHalfPi : std::atan(e);
                    },
                    [&](const BumpShape& b) { return bump_radius(b, u); },
                    [&](const ConeShape& cone) { return cone.base.contains(u) ? cone.height : 0.0; },
                },
                c);
          },
          [&](const GridInterpolated& g) { return grid_radius(g, u); },
          [&](const HarmonicPerturbed& p) { return p.r + p.alpha + p.beta * p.harmonic(u); },
      },
      profile_);
}

double StarBody::radius_at_angle(double phi) const {
  const double u[2] = {std::cos(phi), std::sin(phi)};
  return radius(std::span<const double>(u, 2));
}

std::string StarBody::kind() const {
  return std::visit(Overloaded{
                        [](const ClosedForm& c) -> std::string {
                          static const char* names[] = {"ball", "ellipsoid", "lune", "gnomonic", "bumps", "cone"};
                          return names[c.index()];
                        },
                        [](const GridInterpolated&) -> std::string { return "grid"; },
                        [](const HarmonicPerturbed&) -> std::string { return "perturbed"; },
                    },
                    profile_);
}

const ConeShape* StarBody::cone() const noexcept {
  if (const auto* c = std::get_if<ClosedForm>(&profile_)) return std::get_if<ConeShape>(c);
  return nullptr;
}

std::optional<Direction> StarBody::zonal_axis() const {
  if (const auto* c = std::get_if<ClosedForm>(&profile_)) {
    if (std::holds_alternative<BallShape>(*c)) return Direction::axis(space_.dim, space_.dim - 1);
    if (const auto* cone = std::get_if<ConeShape>(c)) return cone->base.common_axis();
    return std::nullopt;
  }
  if (const auto* p = std::get_if<HarmonicPerturbed>(&profile_)) return p->harmonic.axis();
  return std::nullopt;
}

double StarBody::radius_zonal(double t) const {
  if (const auto* c = std::get_if<ClosedForm>(&profile_)) {
    if (const auto* b = std::get_if<BallShape>(c)) return b->r;
    if (const auto* cone = std::get_if<ConeShape>(c)) {
      const auto axis = cone->base.common_axis();
      if (axis) return zone_contains_height(cone->base, *axis, t) ? cone->height : 0.0;
    }
  }
  if (const auto* p = std::get_if<HarmonicPerturbed>(&profile_)) {
    return p->r + p->alpha + p->beta * p->harmonic.profile(t);
  }
  throw PreconditionError("radius_zonal requested for a body without a zonal axis");
}

std::vector<double> StarBody::angle_breakpoints() const {
  if (space_.dim != 2) return {};
  std::vector<double> cuts;
  std::visit(
      Overloaded{
          [&](const ClosedForm& c) {
            if (const auto* cone = std::get_if<ConeShape>(&c)) {
              for (const Zone& z : cone->base.zones()) {
                const double a = angle_of(z.axis.coords());
                for (double h : {z.lo, z.hi}) {
                  if (h > -1.0 && h < 1.0) {
                    cuts.push_back(a + std::acos(h));
                    cuts.push_back(a - std::acos(h));
                  }
                }
              }
            } else if (const auto* lune = std::get_if<LuneShape>(&c)) {
              const double a = angle_of(lune->axis.coords());
              cuts.push_back(a + kHalfPi);
              cuts.push_back(a - kHalfPi);
            } else if (const auto* g = std::get_if<GnomonicShape>(&c)) {
              for (const Slab& s : g->slabs) {
                const double a = angle_of(s.normal.coords());
                cuts.push_back(a + kHalfPi);
                cuts.push_back(a - kHalfPi);
              }
              // Switches of the binding constraint, located by bisection.
              constexpr int kScan = 4096;
              auto active = [&](double phi) {
                const double u[2] = {std::cos(phi), std::sin(phi)};
                return gnomonic_active(*g, std::span<const double>(u, 2));
              };
              int prev = active(0.0);
              for (int i = 1; i <= kScan; ++i) {
                double hi = kTwoPi * i / kScan;
                const int cur = active(hi);
                if (cur != prev) {
                  double lo = kTwoPi * (i - 1) / kScan;
                  for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (active(mid) == prev ? lo : hi) = mid;
                  }
                  cuts.push_back(0.5 * (lo + hi));
                }
                prev = cur;
              }
            }
          },
          [&](const GridInterpolated& g) {
            for (int j = 0; j < g.cols; ++j) cuts.push_back(kTwoPi * j / g.cols);
          },
          [](const HarmonicPerturbed&) {},
      },
      profile_);
  for (double& c : cuts) c = wrap_angle(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

StarBody make_ball(const SpaceSpec& space, double r) {
  if (!(r > 0.0)) throw DomainError("ball radius must be positive");
  return StarBody(space, ClosedForm{BallShape{r}}, true);
}

StarBody make_ellipsoid(std::vector<double> semiaxes, std::vector<double> rotation) {
  const auto n = static_cast<int>(semiaxes.size());
  return StarBody(SpaceSpec::make(0, n), ClosedForm{EllipsoidShape{std::move(semiaxes), std::move(rotation)}},
                  true);
}

StarBody make_cone(const ConeBase& base) {
  return make_cone_set(SpaceSpec::make(1, base.ambient_dim()), base, kHalfPi);
}

StarBody make_cone_set(const SpaceSpec& space, const ConeBase& base, double height) {
  // A cone is symmetric when its base is; test on the zone description rather
  // than on rule nodes, which may sit on zone boundaries.
  bool symmetric = true;
  const SphereRule rule = build_sphere_rule(space.dim - 1, 15);
  std::vector<double> minus(static_cast<std::size_t>(space.dim));
  for (std::size_t i = 0; i < rule.size() && symmetric; ++i) {
    const auto u = rule.node(i);
    for (std::size_t j = 0; j < u.size(); ++j) minus[j] = -u[j];
    symmetric = base.contains(u) == base.contains(minus);
  }
  return StarBody(space, ClosedForm{ConeShape{base, height}}, symmetric);
}

StarBody make_lune(double w, const Direction& axis) {
  return StarBody(SpaceSpec::make(1, 2), ClosedForm{LuneShape{w, axis}}, true);
}

StarBody make_gnomonic(int n, std::vector<double> semiaxes, std::vector<double> rotation, std::vector<Slab> slabs) {
  return StarBody(SpaceSpec::make(1, n),
                  ClosedForm{GnomonicShape{std::move(semiaxes), std::move(rotation), std::move(slabs)}}, true);
}

StarBody make_bump_body(const SpaceSpec& space, double base, std::vector<Bump> bumps, bool mirrored) {
  return StarBody(space, ClosedForm{BumpShape{base, mirrored, std::move(bumps)}}, mirrored);
}

StarBody make_grid_body(const SpaceSpec& space, GridInterpolated grid, bool symmetric) {
  return StarBody(space, std::move(grid), symmetric);
}

double zonal_volume(const SpaceSpec& space, const std::function<double(double)>& g, int points) {
  const int n = space.dim;
  const GaussRule1D rule = gauss_gegenbauer(points, 0.5 * (n - 3));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * phi(space, n, g(rule.nodes[i]));
  return sphere_area(n - 2) * sum;
}

StarBody make_perturbed_ball(int n, double r, double beta, int k, const Direction& axis) {
  const SpaceSpec space = SpaceSpec::make(1, n);
  if (!(r > 0.0 && r < kHalfPi)) throw DomainError("perturbed ball radius must lie in (0, pi/2)");
  if (k < 0) throw DomainError("harmonic degree must be >= 0");
  ZonalHarmonic h(n, k, axis);
  const double sup = harmonic_sup(h);
  if (!(r - 2.0 * std::abs(beta) * sup > 0.0 && r + 2.0 * std::abs(beta) * sup < kHalfPi)) {
    throw DomainError("perturbation amplitude too large: radial function would leave (0, pi/2)");
  }
  const double target = sphere_area(n - 1) * phi(space, n, r);
  double alpha = 0.0;
  if (beta != 0.0 && k > 0) {
    auto excess = [&](double a) {
      return zonal_volume(space, [&](double t) { return r + a + beta * h.profile(t); }) - target;
    };
    const double span = std::abs(beta) * sup;
    std::uintmax_t iterations = 200;
    const auto root = boost::math::tools::toms748_solve(excess, -span, span, boost::math::tools::eps_tolerance<double>(50),
                                                        iterations);
    alpha = 0.5 * (root.first + root.second);
    if (iterations >= 200) throw ConvergenceError("volume-matching offset did not converge");
  } else if (k == 0) {
    // A constant perturbation is removed entirely by the offset.
    alpha = -beta * h.profile(1.0);
  }
  HarmonicPerturbed p{r, alpha, beta, h, 0.0, 0.0};
  p.delta_norm = std::sqrt(alpha * alpha * sphere_area(n - 1) + (k > 0 ? beta * beta : 0.0));
  double sup_f = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = -1.0 + 2.0 * i / 4000.0;
    sup_f = std::max(sup_f, std::abs(alpha + beta * h.profile(t)));
  }
  p.eps_norm = sup_f;
  return StarBody(space, std::move(p), k % 2 == 0);
}

}  // namespace busemann
