#pragma once

#include <optional>
#include <string>
#include <utility>

#include "busemann/bodies.hpp"
#include "busemann/measures.hpp"

namespace busemann {

/// F_n(t) = int_0^t r^{n-1} / (1 - r^2)^n dr on [0, 1).
double fn_hyperbolic(int n, double t);
double fn_hyperbolic_inverse(int n, double value);
/// G(t) = F_{n-1}(F_n^{-1}(t))^{n/(n-1)}.
double g_hyperbolic(int n, double t);
/// H(t) = G(t / (2^n |S^{n-1}|))^{n-1}.
double h_hyperbolic(int n, double t);

/// I(t) = int_0^t r^{n-1} / (1 + r^2)^n dr and its limit as t -> inf.
double spherical_inner(int n, double t);
double spherical_inner_limit(int n);
/// F with F(I(t)) = int_0^t r^{n-2} / (1 + r^2)^{n-1} dr; DomainError for
/// v outside [0, I(inf)].
double f_spherical(int n, double v);

enum class ConstantKind {
  Busemann,          // n kappa_{n-1}^n / kappa_n^{n-2}
  Hyperbolic,        // |S^{n-1}|^{n-1} n^2 2^{n(n-1)} (1-1/n)^n kappa_{n-1}^n / kappa_n^{n-2}
  SphericalConcave,  // 2^{n-1} |S^{n-1}| |S^{n-2}|
  SphericalPower,    // 2^{n-1} n kappa_{n-1}^n / kappa_n^{n-2}
  SphericalMinimum,  // 2 Gamma((n+1)/2)^n Gamma(n/2)^{-n-1}
};
double bound_constants(ConstantKind kind, int n);
const char* to_string(ConstantKind kind) noexcept;

enum class Theorem {
  BusemannEuclidean,      // int |K ∩ xi^perp|^n <= c_n vol^{n-1} in R^n
  Hyperbolic,             // <= C_n H(vol) in H^n
  SphericalConcave,       // int |K ∩ xi^perp| <= 2^{n-1}|S^{n-1}||S^{n-2}| F(vol / (2^n |S^{n-1}|))
  SphericalConcaveLiteral,// same with F(vol / |S^{n-1}|)
  SphericalPower,         // int |K ∩ xi^perp|^n <= 2^{n-1} c_n vol^{n-1} in S^n_+
  Min2d,                  // >= 8 pi arccos^2(1 - vol / 2 pi) in S^2_+
  ConeMax,                // <= pi^2 vol in S^2_+
  LuneMax,                // <= 16 int_0^{pi/2} arctan^2(tan(vol/4) / cos) in S^2_+
  MinNd,                  // >= c_n vol^n in S^n_+
  Gaussian,               // normalized measure functional <= Psi(mu(K))^{n-1}
};

const char* theorem_id(Theorem t) noexcept;
std::optional<Theorem> parse_theorem(const std::string& id);
/// True when the theorem bounds lhs from above.
bool upper_bound(Theorem t) noexcept;
/// Exponent of the section volume in the theorem's left side.
int theorem_exponent(Theorem t, int n) noexcept;
/// Measure used by the theorem (Gaussian for the measure theorem, else uniform).
RadialDensityMeasure theorem_measure(Theorem t);

/// Closed-form right side from the volume (or measure) value `vol`; throws
/// ApplicabilityError when the theorem does not apply to the space or dimension.
double rhs_value(Theorem t, const SpaceSpec& space, double vol);
/// Checks that the body is in the theorem's class (space, dimension, symmetry).
void check_applicable(Theorem t, const StarBody& body);
double rhs_bound(Theorem t, const StarBody& body);

/// 16 int_0^{pi/2} arctan^2(tan(v/4) / cos theta) d theta.
double lune_bound(double vol);
/// arccos(1 - u) without cancellation for small u.
double arccos_one_minus(double u);

/// Both sides of (phi_{n-1}(pi/2) / phi_n(pi/2)) phi_n(x) <= phi_{n-1}(x) in S^n_+.
std::pair<double, double> phi_ratio_inequality_check(int n, double x);

/// x^2 - r^2 - (2r / sin r)(cos r - cos x), nonnegative on (0, pi/2]^2.
double minineq_gap(double x, double r);

/// F(x) = 2x / sin x, the weight in the exchanged-area comparison.
double comparison_weight(double x);

}  // namespace busemann
