#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "busemann/spaces.hpp"

namespace busemann {

inline constexpr std::size_t kDefaultMaxRuleNodes = 20'000'000;

/// Quadrature rule on the unit sphere S^m in R^{m+1}.
///
/// For m = 0 the rule is the two points {+1, -1} with unit weights. For m = 1
/// it is the uniform rule with N = degree + 1 equally spaced nodes. For m >= 2
/// it is the product of a Gauss-Gegenbauer rule in the last coordinate
/// t = <x, e_{m+1}> (weight (1 - t^2)^{(m-2)/2}, which is Gauss-Legendre for
/// m = 2) and the rule of the same degree on S^{m-1}. The result integrates
/// every polynomial of total degree <= exactness exactly.
struct SphereRule {
  int dim = 0;
  int exactness = 0;
  std::vector<double> nodes;    // row-major, stride dim + 1
  std::vector<double> weights;  // all positive

  std::size_t size() const noexcept { return weights.size(); }
  int ambient() const noexcept { return dim + 1; }
  std::span<const double> node(std::size_t i) const noexcept {
    const auto stride = static_cast<std::size_t>(dim + 1);
    return {nodes.data() + i * stride, stride};
  }
};

/// Default polynomial degree for S^m: 47 on the circle, 23 otherwise.
int default_degree(int m) noexcept;

/// Throws DomainError for m < 0 or degree < 1, ResourceError when the node
/// count would exceed max_nodes.
SphereRule build_sphere_rule(int m, int degree, std::size_t max_nodes = kDefaultMaxRuleNodes);

/// Shared, immutable rules keyed by (m, degree); built once on first use.
std::shared_ptr<const SphereRule> cached_sphere_rule(int m, int degree);

/// Rule on the great subsphere S^{n-1} ∩ xi^perp, obtained by embedding a
/// rule on S^{n-2} through a Householder frame that maps e_n to xi.
struct SubsphereRule {
  std::vector<double> direction;       // xi, length n
  std::vector<double> frame;           // n-1 rows of length n, orthonormal, orthogonal to xi
  std::shared_ptr<const SphereRule> base;
  std::vector<double> nodes;           // embedded nodes, stride n

  int ambient() const noexcept { return static_cast<int>(direction.size()); }
  std::size_t size() const noexcept { return base->size(); }
  std::span<const double> node(std::size_t i) const noexcept {
    const auto n = direction.size();
    return {nodes.data() + i * n, n};
  }
  std::span<const double> weights() const noexcept { return base->weights; }
};

SubsphereRule subsphere_rule(std::shared_ptr<const SphereRule> base, std::span<const double> xi);
SubsphereRule subsphere_rule(std::shared_ptr<const SphereRule> base, const Direction& xi);

/// Orthonormal frame of xi^perp by Householder reflection (e_n -> xi).
std::vector<double> householder_frame(std::span<const double> xi);

/// Nodes and weights of the Gauss rule for the weight (1 - t^2)^a on [-1, 1], a > -1.
struct GaussRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule1D gauss_gegenbauer(int points, double a);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integration of f over [a, b] with absolute error
/// target tol. The achievable target is floored at 64 ulp of the L1 norm.
/// Throws ConvergenceError when the estimate stalls above the target.
QuadratureResult integrate_radial(const Integrand& f, double a, double b, double tol);

/// Same, with a tolerance relative to the integral's L1 norm.
QuadratureResult integrate_radial_relative(const Integrand& f, double a, double b, double rel_tol);

/// int_a^b f(r) dr for b <= 1 where f may blow up like (1 - r)^{-p} as r -> 1.
/// Uses the substitution r = 1 - exp(-u) before adaptive quadrature.
QuadratureResult integrate_toward_one(const Integrand& f, double a, double b, double rel_tol);

/// Integral of f over [a, b] split at the given interior breakpoints, each
/// panel integrated adaptively with relative tolerance rel_tol.
QuadratureResult integrate_panels(const Integrand& f, double a, double b,
                                  std::vector<double> breakpoints, double rel_tol);

}  // namespace busemann
