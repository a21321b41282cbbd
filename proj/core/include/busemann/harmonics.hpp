#pragma once

#include <functional>
#include <map>
#include <span>

#include "busemann/quadrature.hpp"
#include "busemann/spaces.hpp"

namespace busemann {

/// Gegenbauer polynomial C_k^{(a)}(t) by upward recurrence; for a = 0 the
/// Chebyshev polynomial T_k is returned instead (the a -> 0 limit used on S^1).
double gegenbauer(int k, double a, double t);

/// Zonal spherical harmonic of degree k on S^{n-1}, normalized to unit L^2 norm.
class ZonalHarmonic {
 public:
  ZonalHarmonic(int n, int k, Direction axis);

  int ambient_dim() const noexcept { return n_; }
  int degree() const noexcept { return k_; }
  const Direction& axis() const noexcept { return axis_; }
  /// Multiplier turning the raw Gegenbauer profile into the unit-norm harmonic.
  double scale() const noexcept { return scale_; }

  /// Value as a function of t = <u, axis>.
  double profile(double t) const;
  double operator()(std::span<const double> u) const;

 private:
  int n_;
  int k_;
  Direction axis_;
  double scale_;
};

double eval_zonal(const ZonalHarmonic& h, const Direction& u);

using SphereFunction = std::function<double(std::span<const double>)>;

/// Rf(xi): integral of f over the great subsphere S^{n-1} ∩ xi^perp using a
/// rule on S^{n-2}.
double radon_quadrature(const SphereFunction& f, const SphereRule& rule, const Direction& xi);

/// lambda_k with R H_k = lambda_k H_k on S^{n-1}; zero for odd k.
/// Throws UnsupportedError for n = 2.
double radon_multiplier(int n, int k);

struct MultiplierTable {
  int ambient_dim = 3;
  std::map<int, double> values;
};
MultiplierTable multiplier_table(int n, int max_degree);

/// Both sides of ||Rf||_2 <= |S^{n-2}| ||f||_2 on S^{n-1}.
struct RadonBound {
  double lhs = 0.0;
  double rhs = 0.0;
};
RadonBound radon_l2_bound_check(const SphereFunction& f, int n, int outer_degree, int inner_degree);

/// Both sides of int_{S^{n-1}} Rg = |S^{n-2}| int_{S^{n-1}} g.
RadonBound radon_integral_identity(const SphereFunction& g, int n, int outer_degree, int inner_degree);

}  // namespace busemann
