#pragma once

#include <optional>
#include <vector>

#include "busemann/bodies.hpp"

namespace busemann {

/// Normalized angular area of the region outer \ inner in S^2_+:
///   f(x) = vol(region ∩ cone(x0, x)) / vol(region),
/// with x swept counterclockwise from x0. The inverse maps [0, 1] to angles.
class AngularAreaMap {
 public:
  /// x0 defaults to a direction outside the angular support when one exists.
  /// Throws PreconditionError when x0 lies inside the support although the
  /// support is not the whole circle, and DomainError when the angular
  /// density vanishes on an interval inside the support (f not injective).
  AngularAreaMap(const StarBody& outer, const StarBody& inner, std::optional<double> x0 = std::nullopt);

  double total() const noexcept { return total_; }
  double start_angle() const noexcept { return x0_; }
  /// cos rho_inner - cos rho_outer, clipped at 0.
  double density(double angle) const;
  /// f at x0 + offset, offset in [0, 2 pi].
  double forward(double offset) const;
  /// Angle x0 + offset with f = t.
  double inverse(double t) const;

 private:
  const StarBody* outer_;
  const StarBody* inner_;
  double x0_ = 0.0;
  double total_ = 0.0;
  std::vector<double> edges_;       // panel edges as offsets from x0
  std::vector<double> cumulative_;  // unnormalized area up to each edge
};

}  // namespace busemann
