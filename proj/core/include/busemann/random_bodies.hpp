#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "busemann/bodies.hpp"

namespace busemann {

using Rng = std::mt19937_64;

/// Uniform on [a, b) from the top 53 bits, so streams agree across standard libraries.
double uniform(Rng& rng, double a, double b);
double standard_normal(Rng& rng);

Direction random_direction(int n, Rng& rng);
/// Haar-random orthogonal matrix, row-major n x n.
std::vector<double> random_rotation(int n, Rng& rng);

enum class BodyClass {
  Star,           // bump body about a ball
  SymmetricStar,  // mirrored bump body
  Convex,         // origin-symmetric spherically convex body of S^2_+
  Ellipsoid,      // centered ellipsoid in R^n
  Cone,           // origin-symmetric cone of S^n_+
};
const char* to_string(BodyClass c) noexcept;
BodyClass parse_body_class(const std::string& name);

/// Ball of a space-dependent radius modulated by one to four Gaussian-like
/// bumps; every bump has |amplitude| >= 0.1 so the body is visibly not a ball.
StarBody random_star_body(const SpaceSpec& space, Rng& rng, bool symmetric);
StarBody random_ellipsoid(int n, Rng& rng);
/// Gnomonic ellipse in S^2_+, sometimes cut by symmetric slabs.
StarBody random_convex_body(Rng& rng);
/// One to three antipodal pairs of disjoint caps on S^{n-1}.
ConeBase random_symmetric_cone_base(int n, Rng& rng);

StarBody random_body(BodyClass cls, const SpaceSpec& space, Rng& rng);
std::vector<StarBody> random_bodies(BodyClass cls, const SpaceSpec& space, int count, std::uint64_t seed);

}  // namespace busemann
