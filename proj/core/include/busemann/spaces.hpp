#pragma once

#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace busemann {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Curvature sign of a constant-curvature space M_delta^n.
///   -1: hyperbolic space H^n
///    0: Euclidean space R^n
///   +1: closed upper hemisphere S^n_+
enum class Curvature : int { Hyperbolic = -1, Euclidean = 0, Spherical = 1 };

struct SpaceSpec {
  Curvature curvature = Curvature::Euclidean;
  int dim = 2;

  /// Validating constructor; throws DomainError on delta not in {-1,0,1} or dim < 2.
  static SpaceSpec make(int delta, int dim);

  int delta() const noexcept { return static_cast<int>(curvature); }
  bool spherical() const noexcept { return curvature == Curvature::Spherical; }
  bool hyperbolic() const noexcept { return curvature == Curvature::Hyperbolic; }
  bool euclidean() const noexcept { return curvature == Curvature::Euclidean; }

  /// Largest admissible geodesic radius: pi/2 on the hemisphere, +inf otherwise.
  double max_radius() const noexcept;
  bool valid_radius(double r) const noexcept;
  /// Throws DomainError naming `what` when r is not a valid radius.
  void check_radius(double r, const char* what = "radius") const;

  /// Short label such as "s+:2", "h:3", "r:3" (the CLI syntax).
  std::string label() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// Unit vector in the tangent space at the origin.
class Direction {
 public:
  /// Validates |v| = 1 within 1e-12.
  explicit Direction(std::vector<double> coords);
  /// Normalizes v; throws DomainError for the zero vector.
  static Direction normalized(std::vector<double> v);
  /// Standard basis vector e_{index} (0-based) in R^dim.
  static Direction axis(int dim, int index);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](int i) const noexcept { return coords_[static_cast<std::size_t>(i)]; }
  Direction operator-() const;

 private:
  struct Unchecked {};
  Direction(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}
  std::vector<double> coords_;
};

double dot(std::span<const double> a, std::span<const double> b) noexcept;
double norm(std::span<const double> a) noexcept;

/// |S^m|, surface area of the unit m-sphere in R^{m+1}; |S^0| = 2.
double sphere_area(int m);
/// kappa_n, volume of the Euclidean unit ball in R^n; kappa_0 = 1.
double unit_ball_volume(int n);

/// s_delta(r): sin r, r or sinh r.
double metric_sine(const SpaceSpec& space, double r);

/// phi_m(x) = int_0^x s_delta(t)^{m-1} dt, m >= 1.
double phi(const SpaceSpec& space, int m, double x);

/// Geodesic radius r -> radial coordinate t of the conformal unit-ball model
/// with metric 4|dx|^2 / (1 + delta |x|^2)^2.
double ball_model_radius(const SpaceSpec& space, double r);
double ball_model_radius_inverse(const SpaceSpec& space, double t);

/// tan(rho) for rho in [0, pi/2]; +inf at pi/2.
double gnomonic_radial(double rho);

}  // namespace busemann
