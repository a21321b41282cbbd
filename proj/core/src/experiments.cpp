#include "busemann/experiments.hpp"

#include <cmath>

#include "busemann/bounds.hpp"
#include "busemann/errors.hpp"
#include "busemann/harmonics.hpp"

namespace busemann {

namespace {

void check_ball(int n, double r) {
  if (n < 3) throw DomainError("the expansion constants need n >= 3");
  if (!(r > 0.0 && r < kHalfPi)) throw DomainError("ball radius must lie in (0, pi/2)");
}

// vol(B ∩ xi^perp): the (n-1)-ball of radius r in S^{n-1}_+.
double section_ball_volume(int n, double r) {
  return sphere_area(n - 2) * phi(SpaceSpec::make(1, n - 1), n - 1, r);
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

CChain c_chain(int n, double r) {
  check_ball(n, r);
  const double v = section_ball_volume(n, r);
  CChain c;
  c.c0 = (n - 1) / (2.0 * std::tan(r));
  c.c1 = std::pow(std::sin(r), n - 2);
  c.c2 = (n - 2) / (2.0 * std::tan(r));
  c.c3 = n * std::pow(v, n - 1);
  c.c4 = 0.5 * n * (n - 1) * std::pow(v, n - 2);
  c.c5 = c.c1 * c.c3 * (c.c0 - c.c2) * sphere_area(n - 2) / (c.c1 * c.c1 * c.c4);
  return c;
}

double c5_constant(int n, double r) {
  check_ball(n, r);
  const double v = section_ball_volume(n, r);
  return sphere_area(n - 2) * v / ((n - 1) * std::tan(r) * std::pow(std::sin(r), n - 2));
}

double PerturbationResult::ratio_deviation() const noexcept {
  if (predicted_ratio == 0.0) return std::abs(observed_ratio);
  return std::abs(observed_ratio / predicted_ratio - 1.0);
}

std::vector<double> default_beta_schedule() { return {0.08, 0.04, 0.02, 0.01, 0.005}; }

PerturbationResult perturbation_sign_experiment(int n, double r, int k, const std::vector<double>& betas,
                                                const PerturbationOptions& options) {
  check_ball(n, r);
  if (k < 2 || k % 2 != 0) throw DomainError("the sign experiment uses an even harmonic degree k >= 2");
  if (betas.empty()) throw DomainError("beta schedule is empty");
  for (std::size_t i = 1; i < betas.size(); ++i) {
    if (!(betas[i] < betas[i - 1])) throw DomainError("beta schedule must be strictly decreasing");
  }
  PerturbationResult out;
  out.n = n;
  out.r = r;
  out.k = k;
  const CChain c = c_chain(n, r);
  out.c5 = c5_constant(n, r);
  out.lambda_k = radon_multiplier(n, k);
  out.predicted_sign = sign_of(out.lambda_k * out.lambda_k - out.c5);
  out.predicted_ratio = -c.c1 * c.c1 * c.c4 * (out.c5 - out.lambda_k * out.lambda_k);

  const SpaceSpec space = SpaceSpec::make(1, n);
  const Direction axis = Direction::axis(n, n - 1);
  const FunctionalValue ball = busemann_functional(make_ball(space, r), RadialDensityMeasure::uniform(),
                                                   options.functional);
  out.lhs_B = ball.value;
  for (double beta : betas) {
    const StarBody body = make_perturbed_ball(n, r, beta, k, axis);
    const auto& p = std::get<HarmonicPerturbed>(body.profile());
    const FunctionalValue f = busemann_functional(body, RadialDensityMeasure::uniform(), options.functional);
    PerturbationStep step;
    step.beta = beta;
    step.delta_norm = p.delta_norm;
    step.eps_norm = p.eps_norm;
    step.lhs_K = f.value;
    step.difference = f.value - ball.value;
    step.error = f.error + ball.error;
    step.conclusive = std::abs(step.difference) > options.threshold * step.error;
    step.ratio = step.difference / (p.delta_norm * p.delta_norm);
    out.steps.push_back(step);
    if (step.conclusive) {
      out.conclusive = true;
      out.beta = beta;
      out.delta_norm = step.delta_norm;
      out.eps_norm = step.eps_norm;
      out.lhs_K = step.lhs_K;
      out.difference = step.difference;
      out.observed_sign = sign_of(step.difference);
      out.observed_ratio = step.ratio;
    }
  }
  return out;
}

std::vector<double> default_sharpness_alphas() { return {0.3, 0.2, 0.1, 0.05}; }
std::vector<double> default_sharpness_epsilons() { return {0.3, 0.2, 0.1, 0.05}; }

std::vector<SharpnessRow> sharpness_schedule(int n, double t, const std::vector<double>& alphas,
                                             const std::vector<double>& epsilons) {
  if (n < 3) throw DomainError("the striped-cone schedule needs n >= 3");
  if (alphas.size() != epsilons.size() || alphas.empty()) {
    throw DomainError("alpha and epsilon schedules must be nonempty and of equal length");
  }
  std::vector<SharpnessRow> rows;
  const double cn = bound_constants(ConstantKind::SphericalMinimum, n);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const StripedCone cone = make_striped_cone(n, t, alphas[i], epsilons[i]);
    const FunctionalValue f = busemann_functional(cone.body);
    const double vol = volume(cone.body).value;
    SharpnessRow row;
    row.alpha = alphas[i];
    row.eps = epsilons[i];
    row.strips = cone.cap.strips;
    row.pitch = cone.cap.pitch;
    row.max_excess = cone.cap.max_excess;
    row.volume = vol;
    row.functional = f.value;
    row.error = f.error;
    row.normalized = f.value / std::pow(vol, n);
    row.bound = cn;
    row.rel_excess = row.normalized / cn - 1.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace busemann
