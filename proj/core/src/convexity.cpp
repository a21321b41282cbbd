#include <cmath>
#include <random>
#include <vector>

#include "busemann/bodies.hpp"
#include "busemann/errors.hpp"

namespace busemann {

namespace {

constexpr double kConvexTolerance = 1e-9;
constexpr double kRimSlack = 1e-12;

std::vector<double> random_direction(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal;
  std::vector<double> v(static_cast<std::size_t>(n));
  double len = 0.0;
  do {
    for (double& c : v) c = normal(rng);
    len = norm(v);
  } while (len < 1e-8);
  for (double& c : v) c /= len;
  return v;
}

// Midpoint test on the image with radial function map(rho): tan(rho) for the
// gnomonic image of a spherical body, rho itself in R^n.
template <class Map>
bool midpoint_test(const StarBody& body, const std::vector<std::vector<double>>& dirs, std::mt19937_64& rng,
                   Map map) {
  const int n = body.dim();
  std::uniform_int_distribution<std::size_t> pick(0, dirs.size() - 1);
  std::vector<double> m(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < dirs.size(); ++s) {
    const auto& u = dirs[s];
    const auto& v = dirs[pick(rng)];
    const double pu = map(body.radius(u));
    const double pv = map(body.radius(v));
    for (double lam : {0.25, 0.5, 0.75}) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = (1.0 - lam) * pu * u[i] + lam * pv * v[i];
      const double len = norm(m);
      if (len < 1e-12) continue;
      for (double& c : m) c /= len;
      if (len > map(body.radius(m)) * (1.0 + kConvexTolerance) + kConvexTolerance) return false;
    }
  }
  return true;
}

// Midpoint test on the cone over the body in R^{n+1}; handles rho = pi/2.
bool cone_test(const StarBody& body, const std::vector<std::vector<double>>& dirs, std::mt19937_64& rng) {
  const int n = body.dim();
  std::uniform_int_distribution<std::size_t> pick(0, dirs.size() - 1);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < dirs.size(); ++s) {
    const auto& u = dirs[s];
    const auto& v = dirs[pick(rng)];
    const double ru = body.radius(u);
    const double rv = body.radius(v);
    for (double lam : {0.25, 0.5, 0.75}) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = (1.0 - lam) * std::sin(ru) * u[i] + lam * std::sin(rv) * v[i];
      }
      const double height = (1.0 - lam) * std::cos(ru) + lam * std::cos(rv);
      const double len = norm(w);
      if (len < 1e-12) continue;  // on the axis through the origin
      for (double& c : w) c /= len;
      const double r = std::atan2(len, height);
      if (r > body.radius(w) + kConvexTolerance) return false;
    }
  }
  return true;
}

}  // namespace

bool is_convex_spherical(const StarBody& body, int samples, std::uint64_t seed) {
  if (!body.space().spherical()) throw ApplicabilityError("spherical convexity is tested in S^n_+ only");
  if (samples < 1) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> dirs;
  dirs.reserve(static_cast<std::size_t>(samples));
  bool reaches_rim = body.cone() != nullptr;
  for (int i = 0; i < samples; ++i) {
    dirs.push_back(random_direction(rng, body.dim()));
    const double r = body.radius(dirs.back());
    if (r >= kHalfPi - kRimSlack || r <= 0.0) reaches_rim = true;
  }
  if (reaches_rim) return cone_test(body, dirs, rng);
  return midpoint_test(body, dirs, rng, [](double r) { return std::tan(r); });
}

bool is_convex_euclidean(const StarBody& body, int samples, std::uint64_t seed) {
  if (!body.space().euclidean()) throw ApplicabilityError("Euclidean convexity is tested in R^n only");
  if (samples < 1) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> dirs;
  dirs.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) dirs.push_back(random_direction(rng, body.dim()));
  return midpoint_test(body, dirs, rng, [](double r) { return r; });
}

}  // namespace busemann
