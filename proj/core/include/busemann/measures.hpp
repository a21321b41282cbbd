#pragma once

#include <functional>
#include <string>

#include "busemann/spaces.hpp"

namespace busemann {

enum class DensityKind { Uniform, Gaussian, Custom };

/// Radially symmetric, non-increasing density f on M^n_delta. The density used
/// on an m-dimensional slice may depend on m (the Gaussian carries a factor
/// (2 pi)^{-m/2}); uniform and custom densities do not.
class RadialDensityMeasure {
 public:
  static RadialDensityMeasure uniform();
  static RadialDensityMeasure gaussian();
  static RadialDensityMeasure custom(std::string name, std::function<double(double)> density);

  DensityKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_uniform() const noexcept { return kind_ == DensityKind::Uniform; }

  double density(int m, double r) const;

  /// int_0^x f_m(t) s_delta(t)^{m-1} dt; x may be +inf for delta <= 0.
  double radial_integral(const SpaceSpec& space, int m, double x) const;

  /// Checks f(r_i) >= f(r_{i+1}) on `points` radii spread over [0, r_max].
  bool is_decreasing(int m, double r_max, int points = 1000) const;

 private:
  DensityKind kind_ = DensityKind::Uniform;
  std::string name_ = "uniform";
  std::function<double(double)> custom_;
};

/// psi_m(x) = |S^{m-1}| int_0^x f_m(t) s(t)^{m-1} dt, the measure of the centred
/// m-dimensional ball of radius x.
double psi(const RadialDensityMeasure& mu, const SpaceSpec& space, int m, double x);
/// Radius x with psi_m(x) = value; DomainError outside [0, psi_m(max radius)).
double psi_inverse(const RadialDensityMeasure& mu, const SpaceSpec& space, int m, double value);
/// Psi(t) = psi_{n-1}(psi_n^{-1}(t))^{n/(n-1)}.
double Psi(const RadialDensityMeasure& mu, const SpaceSpec& space, int n, double t);

}  // namespace busemann
