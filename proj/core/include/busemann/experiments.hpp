#pragma once

#include <vector>

#include "busemann/bodies.hpp"
#include "busemann/functionals.hpp"

namespace busemann {

/// Constants of the second-order expansion of the functional about the ball
/// of radius r in S^n_+, with V = vol(B ∩ xi^perp):
/// c0 = (n-1)/(2 tan r), c1 = sin^{n-2} r, c2 = (n-2)/(2 tan r),
/// c3 = n V^{n-1}, c4 = n(n-1)/2 V^{n-2}, c5 = c1 c3 (c0 - c2)|S^{n-2}| / (c1^2 c4).
struct CChain {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
};
CChain c_chain(int n, double r);
/// Closed form |S^{n-2}| V / ((n-1) tan r sin^{n-2} r).
double c5_constant(int n, double r);

struct PerturbationStep {
  double beta = 0.0;
  double delta_norm = 0.0;  // ||f||_2
  double eps_norm = 0.0;    // ||f||_inf
  double lhs_K = 0.0;
  double difference = 0.0;  // functional(K) - functional(B)
  double error = 0.0;       // combined quadrature error of the difference
  bool conclusive = false;  // |difference| > threshold * error
  double ratio = 0.0;       // difference / delta_norm^2
};

struct PerturbationResult {
  int n = 3;
  double r = 0.0;
  int k = 2;
  double beta = 0.0;  // smallest conclusive beta (0 when none)
  double delta_norm = 0.0;
  double eps_norm = 0.0;
  double lhs_K = 0.0;
  double lhs_B = 0.0;
  double difference = 0.0;
  int predicted_sign = 0;  // sign(lambda_k^2 - c5)
  int observed_sign = 0;   // 0 when inconclusive
  bool conclusive = false;
  double c5 = 0.0;
  double lambda_k = 0.0;
  double predicted_ratio = 0.0;  // -c1^2 c4 (c5 - lambda_k^2)
  double observed_ratio = 0.0;
  std::vector<PerturbationStep> steps;

  bool sign_matches() const noexcept { return conclusive && observed_sign == predicted_sign; }
  /// |observed/predicted - 1| at the reported step.
  double ratio_deviation() const noexcept;
};

struct PerturbationOptions {
  double threshold = 10.0;  // conclusiveness factor on the error estimate
  FunctionalOptions functional;
};

/// Perturbs the ball of radius r in S^n_+ by beta H_k at volume fixed, for each
/// beta in the (decreasing) schedule, and reports the sign of the change.
PerturbationResult perturbation_sign_experiment(int n, double r, int k, const std::vector<double>& betas,
                                                const PerturbationOptions& options = {});
std::vector<double> default_beta_schedule();

struct SharpnessRow {
  double alpha = 0.0;
  double eps = 0.0;
  int strips = 0;
  double pitch = 0.0;
  double max_excess = 0.0;
  double volume = 0.0;
  double functional = 0.0;
  double error = 0.0;
  double normalized = 0.0;  // functional / volume^n
  double bound = 0.0;       // c_n
  double rel_excess = 0.0;  // normalized / c_n - 1
};

/// Striped cones of volume t vol(S^n_+) along a zipped (alpha, eps) schedule.
std::vector<SharpnessRow> sharpness_schedule(int n, double t, const std::vector<double>& alphas,
                                             const std::vector<double>& epsilons);
std::vector<double> default_sharpness_alphas();
std::vector<double> default_sharpness_epsilons();

}  // namespace busemann
