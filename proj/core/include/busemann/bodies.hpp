#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "busemann/cone_base.hpp"
#include "busemann/harmonics.hpp"
#include "busemann/spaces.hpp"

namespace busemann {

struct BallShape {
  double r = 1.0;
};

/// Centered ellipsoid in R^n. `rotation` holds the principal directions as
/// rows (row-major n x n); empty means the coordinate axes.
struct EllipsoidShape {
  std::vector<double> semiaxes;
  std::vector<double> rotation;
};

/// Lune in S^2_+: tan rho(u) = tan w / |<u, axis>|.
struct LuneShape {
  double w = 0.5;
  Direction axis = Direction::axis(2, 0);
};

struct Slab {
  Direction normal;
  double h = 1.0;
};

/// Body of S^n_+ whose gnomonic image is an ellipsoid cut by symmetric slabs
/// |<x, normal>| <= h. Either part may be absent, but not both.
struct GnomonicShape {
  std::vector<double> semiaxes;
  std::vector<double> rotation;
  std::vector<Slab> slabs;
};

struct Bump {
  Direction center;
  double amplitude = 0.0;
  double concentration = 1.0;
};

/// rho(u) = base * exp(sum_i a_i exp(kappa_i (<u, c_i> - 1))); with `mirrored`
/// each bump is paired with its antipodal copy.
struct BumpShape {
  double base = 1.0;
  bool mirrored = false;
  std::vector<Bump> bumps;
};

/// Star-shaped set with rho = height on the base and 0 elsewhere.
struct ConeShape {
  ConeBase base;
  double height = kHalfPi;
};

using ClosedForm = std::variant<BallShape, EllipsoidShape, LuneShape, GnomonicShape, BumpShape, ConeShape>;

/// Piecewise-linear radial function. For n = 2 the nodes are the angles
/// 2 pi j / N; for n = 3 the nodes form a latitude-longitude grid with
/// polar angles pi i / (rows - 1) and azimuths 2 pi j / cols, interpolated
/// bilinearly in (polar angle, azimuth).
struct GridInterpolated {
  int n = 2;
  int rows = 1;
  int cols = 0;
  std::vector<double> values;  // row-major rows x cols
};

/// rho = r + alpha + beta H_k with H_k a unit-norm zonal harmonic.
struct HarmonicPerturbed {
  double r = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  ZonalHarmonic harmonic;
  double delta_norm = 0.0;  // ||alpha + beta H_k||_2
  double eps_norm = 0.0;    // ||alpha + beta H_k||_inf
};

using RadialProfile = std::variant<ClosedForm, GridInterpolated, HarmonicPerturbed>;

class StarBody {
 public:
  /// Validates the profile against the space and checks a symmetric claim on
  /// rule nodes (PreconditionError when rho(u) != rho(-u) beyond 1e-10).
  StarBody(SpaceSpec space, RadialProfile profile, bool symmetric);

  const SpaceSpec& space() const noexcept { return space_; }
  const RadialProfile& profile() const noexcept { return profile_; }
  bool symmetric() const noexcept { return symmetric_; }
  int dim() const noexcept { return space_.dim; }

  double radius(std::span<const double> u) const;
  double radius(const Direction& u) const { return radius(u.coords()); }
  /// rho at angle phi for n = 2.
  double radius_at_angle(double phi) const;

  std::string kind() const;
  const ConeShape* cone() const noexcept;

  /// Axis a such that rho(u) depends on <u, a> only, when known by construction.
  std::optional<Direction> zonal_axis() const;
  /// rho as a function of t = <u, a>; requires zonal_axis().
  double radius_zonal(double t) const;

  /// n = 2: angles in [0, 2 pi) where the radial function has a kink or jump.
  std::vector<double> angle_breakpoints() const;

 private:
  SpaceSpec space_;
  RadialProfile profile_;
  bool symmetric_;
};

StarBody make_ball(const SpaceSpec& space, double r);
StarBody make_ellipsoid(std::vector<double> semiaxes, std::vector<double> rotation = {});
/// Cone in S^n_+ (n = base dimension) with rho = pi/2 on the base.
StarBody make_cone(const ConeBase& base);
/// Star-shaped set with rho = height on the base; any space.
StarBody make_cone_set(const SpaceSpec& space, const ConeBase& base, double height);
StarBody make_lune(double w, const Direction& axis);
StarBody make_gnomonic(int n, std::vector<double> semiaxes, std::vector<double> rotation, std::vector<Slab> slabs);
StarBody make_bump_body(const SpaceSpec& space, double base, std::vector<Bump> bumps, bool mirrored);
StarBody make_grid_body(const SpaceSpec& space, GridInterpolated grid, bool symmetric);

/// Volume of a zonal body rho(u) = g(<u, a>) in S^n_+ by a 1-D Gauss rule.
double zonal_volume(const SpaceSpec& space, const std::function<double(double)>& g, int points = 96);

/// Ball of radius r in S^n_+ perturbed by beta H_k about `axis`, with the
/// offset alpha fixed by a root solve so the volume equals that of the r-ball.
StarBody make_perturbed_ball(int n, double r, double beta, int k, const Direction& axis);

struct StripedCap {
  ConeBase base;       // the kept strips A_k
  double alpha = 0.0;  // cap height
  double lambda = 0.0;
  double pitch = 0.0;  // strip pitch delta
  double gamma = 0.0;  // kept fraction of each strip
  int strips = 0;
  double certified_pitch = 0.0;   // pitch that the covering argument guarantees
  double max_excess = 0.0;    // max over the test grid of |A∩xi^perp| - lambda |C∩xi^perp|
  double cap_measure = 0.0;
};

struct StripedCapOptions {
  std::optional<double> pitch;  // skip pitch selection and use this pitch
  int max_strips = 200'000;
  int check_points = 4000;      // uniform grid in |<xi, axis>| for the section test
};

/// Subset A of the cap {<x, axis> >= alpha} with |A| = lambda |C| and
/// |A ∩ xi^perp| <= lambda |C ∩ xi^perp| + eps on the test grid.
StripedCap striped_cap_subset(double alpha, const Direction& axis, double lambda, double eps,
                              const StripedCapOptions& options = {});

struct StripedCone {
  StarBody body;
  StripedCap cap;
  double t = 0.0;
};
/// Origin-symmetric cone in S^n_+ of volume t vol(S^n_+) with base A ∪ (-A).
StripedCone make_striped_cone(int n, double t, double alpha, double eps, const StripedCapOptions& options = {});

/// Cone in S^n_+ with base {<x,u> >= a} ∪ {-a <= <x,u> <= 0}: the base and its
/// reflection overlap in a null set and cover the sphere.
StarBody make_complementary_cone(int n, double a, const Direction& axis);

struct VanishingBody {
  StarBody body;
  StripedCap cap;
  double r = 0.0;
  double functional = 0.0;
  double main_term = 0.0;
};
/// Origin-symmetric star-shaped set in R^n or H^n of the given volume whose
/// section functional does not exceed eta.
VanishingBody make_vanishing_body(const SpaceSpec& space, double volume, double eta);

/// Gnomonic midpoint test of spherical convexity (S^n_+ only). Falls back to the
/// cone over the body in R^{n+1} when rho reaches pi/2 somewhere.
bool is_convex_spherical(const StarBody& body, int samples = 2000, std::uint64_t seed = 1);
/// Midpoint test of convexity for bodies in R^n.
bool is_convex_euclidean(const StarBody& body, int samples = 2000, std::uint64_t seed = 1);

}  // namespace busemann
