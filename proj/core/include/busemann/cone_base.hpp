#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "busemann/spaces.hpp"

namespace busemann {

/// int_0^theta sin^j(t) dt for theta in [0, pi], j >= 0.
double sine_power_integral(int j, double theta);

/// Measure of {x in S^m : p <= x_{m+1} <= q}; heights are clipped to [-1, 1].
/// For m = 0 this counts the points +-1 that fall in [p, q].
double zone_measure(int m, double p, double q);

/// Closed band {x : lo <= <x, axis> <= hi} on S^{n-1}. With hi = 1 this is a
/// cap; on S^1 a cap is an arc centred on the axis.
struct Zone {
  Direction axis;
  double lo = -1.0;
  double hi = 1.0;
};

/// Union of disjoint zones, the base of a cone. Measures of the set and of its
/// great-subsphere sections are computed zone by zone in closed form.
class ConeBase {
 public:
  ConeBase(int n, std::vector<Zone> zones);
  static ConeBase full(int n);
  static ConeBase cap(const Direction& axis, double height);

  int ambient_dim() const noexcept { return n_; }
  const std::vector<Zone>& zones() const noexcept { return zones_; }

  double measure() const noexcept { return measure_; }
  bool contains(std::span<const double> u) const noexcept;
  /// |A ∩ xi^perp| as a subset of S^{n-2}.
  double section_measure(std::span<const double> xi) const;

  /// Shared axis when every zone is a band about the same direction (up to sign).
  const std::optional<Direction>& common_axis() const noexcept { return axis_; }
  /// Section measure for xi with <xi, axis> = c; requires common_axis().
  double section_measure_zonal(double c) const;
  /// Values of |<xi, axis>| at which the zonal section measure has a kink.
  std::vector<double> zonal_kinks() const;

  /// A ∪ (-A), assuming the two halves are disjoint.
  ConeBase symmetrized() const;

  /// Quadrature estimate of |A| on a product rule of the given degree; used to
  /// cross-check the closed-form measure.
  double quadrature_measure(int degree) const;

 private:
  int n_;
  std::vector<Zone> zones_;
  double measure_;
  std::optional<Direction> axis_;
  std::vector<std::pair<double, double>> oriented_;  // zone heights along axis_, sorted

};

}  // namespace busemann
