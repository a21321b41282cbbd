#include "busemann/random_bodies.hpp"

#include <algorithm>
#include <cmath>

#include "busemann/errors.hpp"

namespace busemann {

double uniform(Rng& rng, double a, double b) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

double standard_normal(Rng& rng) {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - uniform(rng, 0.0, 1.0);
  const double v = uniform(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
}

Direction random_direction(int n, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (;;) {
    for (double& c : v) c = standard_normal(rng);
    if (norm(v) > 1e-8) return Direction::normalized(v);
  }
}

std::vector<double> random_rotation(int n, Rng& rng) {
  const auto m = static_cast<std::size_t>(n);
  std::vector<double> q(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (;;) {
      std::vector<double> row(m);
      for (double& c : row) c = standard_normal(rng);
      for (std::size_t j = 0; j < i; ++j) {
        const std::span<const double> prev(q.data() + j * m, m);
        const double d = dot(row, prev);
        for (std::size_t k = 0; k < m; ++k) row[k] -= d * prev[k];
      }
      const double len = norm(row);
      if (len < 1e-6) continue;
      for (std::size_t k = 0; k < m; ++k) q[i * m + k] = row[k] / len;
      break;
    }
  }
  return q;
}

const char* to_string(BodyClass c) noexcept {
  switch (c) {
    case BodyClass::Star: return "star";
    case BodyClass::SymmetricStar: return "sym-star";
    case BodyClass::Convex: return "sym-convex";
    case BodyClass::Ellipsoid: return "ellipsoid";
    case BodyClass::Cone: return "sym-cone";
  }
  return "?";
}

BodyClass parse_body_class(const std::string& name) {
  for (BodyClass c : {BodyClass::Star, BodyClass::SymmetricStar, BodyClass::Convex, BodyClass::Ellipsoid,
                      BodyClass::Cone}) {
    if (name == to_string(c)) return c;
  }
  if (name == "convex") return BodyClass::Convex;
  throw ParseError("unknown body class '" + name + "' (star, sym-star, sym-convex, ellipsoid, sym-cone)");
}

StarBody random_star_body(const SpaceSpec& space, Rng& rng, bool symmetric) {
  double lo = 0.5, hi = 1.5;
  if (space.spherical()) {
    lo = 0.4;
    hi = 1.0;
  } else if (space.hyperbolic()) {
    lo = 0.3;
    hi = 1.0;
  }
  double base = uniform(rng, lo, hi);
  const int count = 1 + static_cast<int>(rng() % 4);
  std::vector<Bump> bumps;
  double swing = 0.0;
  for (int i = 0; i < count; ++i) {
    const double a = uniform(rng, 0.1, 0.35) * (rng() % 2 == 0 ? 1.0 : -1.0);
    bumps.push_back(Bump{random_direction(space.dim, rng), a, uniform(rng, 1.5, 8.0)});
    swing += std::max(0.0, a) * (symmetric ? 2.0 : 1.0);
  }
  if (space.spherical()) base = std::min(base, (kHalfPi - 0.05) / std::exp(swing));
  return make_bump_body(space, base, std::move(bumps), symmetric);
}

StarBody random_ellipsoid(int n, Rng& rng) {
  std::vector<double> axes(static_cast<std::size_t>(n));
  for (double& a : axes) a = uniform(rng, 0.5, 1.5);
  return make_ellipsoid(std::move(axes), random_rotation(n, rng));
}

StarBody random_convex_body(Rng& rng) {
  std::vector<double> axes{std::tan(uniform(rng, 0.3, 1.2)), std::tan(uniform(rng, 0.3, 1.2))};
  std::vector<Slab> slabs;
  if (rng() % 2 == 0) {
    const int count = 1 + static_cast<int>(rng() % 2);
    const double widest = std::max(axes[0], axes[1]);
    for (int i = 0; i < count; ++i) {
      slabs.push_back(Slab{random_direction(2, rng), uniform(rng, 0.5, 0.95) * widest});
    }
  }
  return make_gnomonic(2, std::move(axes), random_rotation(2, rng), std::move(slabs));
}

ConeBase random_symmetric_cone_base(int n, Rng& rng) {
  const int want = 1 + static_cast<int>(rng() % 3);
  std::vector<Direction> axes;
  std::vector<double> widths;
  for (int attempt = 0; attempt < 200 && static_cast<int>(axes.size()) < want; ++attempt) {
    const Direction a = random_direction(n, rng);
    const double w = uniform(rng, 0.15, 0.6);
    bool clear = true;
    for (std::size_t j = 0; j < axes.size(); ++j) {
      const double gap = std::acos(std::min(1.0, std::abs(dot(a.coords(), axes[j].coords()))));
      if (gap <= w + widths[j] + 0.02) clear = false;
    }
    if (!clear) continue;
    axes.push_back(a);
    widths.push_back(w);
  }
  std::vector<Zone> zones;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const double h = std::cos(widths[i]);
    zones.push_back(Zone{axes[i], h, 1.0});
    zones.push_back(Zone{axes[i], -1.0, -h});
  }
  return ConeBase(n, std::move(zones));
}

StarBody random_body(BodyClass cls, const SpaceSpec& space, Rng& rng) {
  switch (cls) {
    case BodyClass::Star: return random_star_body(space, rng, false);
    case BodyClass::SymmetricStar: return random_star_body(space, rng, true);
    case BodyClass::Convex:
      if (!space.spherical() || space.dim != 2) throw ApplicabilityError("random convex bodies are built in S^2_+");
      return random_convex_body(rng);
    case BodyClass::Ellipsoid:
      if (!space.euclidean()) throw ApplicabilityError("ellipsoids are built in R^n");
      return random_ellipsoid(space.dim, rng);
    case BodyClass::Cone:
      if (!space.spherical()) throw ApplicabilityError("cones are built in S^n_+");
      return make_cone(random_symmetric_cone_base(space.dim, rng));
  }
  throw DomainError("unknown body class");
}

std::vector<StarBody> random_bodies(BodyClass cls, const SpaceSpec& space, int count, std::uint64_t seed) {
  if (count < 0) throw DomainError("body count must be nonnegative");
  Rng rng(seed);
  std::vector<StarBody> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_body(cls, space, rng));
  return out;
}

}  // namespace busemann
