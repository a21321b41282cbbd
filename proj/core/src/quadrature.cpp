#include "busemann/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <utility>

#include "busemann/errors.hpp"
#include "busemann/parallel.hpp"

namespace busemann {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
constexpr std::size_t kMaxPanels = 1 << 15;
constexpr double kUlpFloor = 64.0 * std::numeric_limits<double>::epsilon();

std::size_t rule_size(int m, int degree) {
  if (m == 0) return 2;
  if (m == 1) return static_cast<std::size_t>(degree + 1);
  const auto polar = static_cast<std::size_t>((degree + 2) / 2);
  return polar * rule_size(m - 1, degree);
}

SphereRule build_recursive(int m, int degree) {
  SphereRule rule;
  rule.dim = m;
  rule.exactness = degree;
  if (m == 0) {
    rule.nodes = {1.0, -1.0};
    rule.weights = {1.0, 1.0};
    rule.exactness = std::numeric_limits<int>::max();
    return rule;
  }
  if (m == 1) {
    const int count = degree + 1;
    rule.nodes.reserve(2 * static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
      const double angle = 2.0 * kPi * j / count;
      rule.nodes.push_back(std::cos(angle));
      rule.nodes.push_back(std::sin(angle));
    }
    rule.weights.assign(static_cast<std::size_t>(count), 2.0 * kPi / count);
    return rule;
  }
  const SphereRule sub = build_recursive(m - 1, degree);
  const GaussRule1D polar = gauss_gegenbauer((degree + 2) / 2, 0.5 * (m - 2));
  const auto stride = static_cast<std::size_t>(m + 1);
  rule.nodes.reserve(polar.nodes.size() * sub.size() * stride);
  rule.weights.reserve(polar.nodes.size() * sub.size());
  for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
    const double t = polar.nodes[i];
    const double radial = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (std::size_t j = 0; j < sub.size(); ++j) {
      for (double c : sub.node(j)) rule.nodes.push_back(radial * c);
      rule.nodes.push_back(t);
      rule.weights.push_back(polar.weights[i] * sub.weights[j]);
    }
  }
  return rule;
}

struct Panel {
  double a, b, value, error, l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One 21-point Kronrod panel. Boost reports the Kronrod-Gauss difference in
// [-1, 1] units, so it is rescaled to the panel here.
template <class F>
Panel kronrod_panel(const F& f, double a, double b) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = Kronrod::integrate(f, a, b, 0, 0.0, &error, &l1);
  return {a, b, value, error * 0.5 * (b - a), l1};
}

// Global adaptive Gauss-Kronrod: split the worst panel until the summed error
// estimate meets max(abs_tol, rel_tol * L1).
struct Adapted {
  double value, error, l1;
  bool converged;
};

template <class F>
Adapted adapt(const F& f, double a, double b, double rel_tol, double abs_tol) {
  std::priority_queue<Panel> heap;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  auto push = [&](const Panel& p) {
    heap.push(p);
    value += p.value;
    error += p.error;
    l1 += p.l1;
  };
  push(kronrod_panel(f, a, b));
  auto target = [&] { return std::max({abs_tol, rel_tol * l1, kUlpFloor * l1}); };
  while (!(error <= target()) && heap.size() < kMaxPanels) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    value -= worst.value;
    error -= worst.error;
    l1 -= worst.l1;
    push(kronrod_panel(f, worst.a, mid));
    push(kronrod_panel(f, mid, worst.b));
  }
  // Recompute the sums to shed cancellation from the running updates.
  value = error = l1 = 0.0;
  std::vector<double> parts;
  parts.reserve(heap.size());
  while (!heap.empty()) {
    parts.push_back(heap.top().value);
    error += heap.top().error;
    l1 += heap.top().l1;
    heap.pop();
  }
  value = pairwise_sum(parts);
  return {value, error, l1, std::isfinite(value) && error <= target()};
}

[[noreturn]] void stalled(double a, double b, double error, double target) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "adaptive quadrature stalled on [%.6g, %.6g]: error estimate %.3g above target %.3g",
                a, b, error, target);
  throw ConvergenceError(buf);
}

template <class F>
QuadratureResult kronrod_finite(const F& f, double a, double b, double rel_tol, double abs_tol) {
  const Adapted r = adapt(f, a, b, rel_tol, abs_tol);
  if (!r.converged) stalled(a, b, r.error, std::max({abs_tol, rel_tol * r.l1, kUlpFloor * r.l1}));
  return {r.value, r.error};
}

template <class F>
QuadratureResult kronrod(const F& f, double a, double b, double rel_tol, double abs_tol) {
  try {
    if (std::isinf(b)) {
      // u = a + x / (1 - x) on [0, 1).
      auto g = [&](double x) {
        if (x >= 1.0) return 0.0;
        const double d = 1.0 - x;
        return f(a + x / d) / (d * d);
      };
      return kronrod_finite(g, 0.0, 1.0, rel_tol, abs_tol);
    }
    return kronrod_finite(f, a, b, rel_tol, abs_tol);
  } catch (const ConvergenceError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConvergenceError(std::string("adaptive quadrature failed: ") + e.what());
  }
}

}  // namespace

int default_degree(int m) noexcept { return m == 1 ? 47 : 23; }

GaussRule1D gauss_gegenbauer(int points, double a) {
  if (points < 1) throw DomainError("Gauss rule needs at least one point");
  if (!(a > -1.0)) throw DomainError("Gegenbauer weight exponent must exceed -1");
  const auto n = static_cast<Eigen::Index>(points);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double b2 = (k == 1) ? 1.0 / (3.0 + 2.0 * a)
                               : kk * (kk + 2.0 * a) / ((2.0 * kk + 2.0 * a + 1.0) * (2.0 * kk + 2.0 * a - 1.0));
    sub(k - 1) = std::sqrt(b2);
  }
  const double mu0 = std::sqrt(kPi) * boost::math::tgamma(a + 1.0) / boost::math::tgamma(a + 1.5);
  GaussRule1D rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  // Symmetrize: the weight function is even.
  for (std::size_t i = 0, j = rule.nodes.size() - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (rule.nodes.size() % 2 == 1) rule.nodes[rule.nodes.size() / 2] = 0.0;
  return rule;
}

SphereRule build_sphere_rule(int m, int degree, std::size_t max_nodes) {
  if (m < 0) throw DomainError("sphere dimension must be >= 0");
  if (degree < 1) throw DomainError("rule degree must be >= 1");
  const std::size_t count = rule_size(m, degree);
  if (count > max_nodes) {
    throw ResourceError("sphere rule for S^" + std::to_string(m) + " of degree " + std::to_string(degree) +
                        " needs " + std::to_string(count) + " nodes (cap " + std::to_string(max_nodes) + ")");
  }
  return build_recursive(m, degree);
}

std::shared_ptr<const SphereRule> cached_sphere_rule(int m, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SphereRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, degree}];
  if (!slot) slot = std::make_shared<const SphereRule>(build_sphere_rule(m, degree));
  return slot;
}

std::vector<double> householder_frame(std::span<const double> xi) {
  const std::size_t n = xi.size();
  if (n < 2) throw DomainError("subsphere frame needs ambient dimension >= 2");
  // v = e_n - xi; H = I - 2 v v^T / |v|^2 maps e_n to xi.
  std::vector<double> v(xi.begin(), xi.end());
  for (double& c : v) c = -c;
  v[n - 1] += 1.0;
  const double vv = dot(v, v);
  std::vector<double> frame((n - 1) * n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double identity = (i == j) ? 1.0 : 0.0;
      frame[i * n + j] = vv > 1e-30 ? identity - 2.0 * v[i] * v[j] / vv : identity;
    }
  }
  return frame;
}

SubsphereRule subsphere_rule(std::shared_ptr<const SphereRule> base, std::span<const double> xi) {
  const auto n = xi.size();
  if (!base || static_cast<std::size_t>(base->dim) + 2 != n) {
    throw DomainError("subsphere rule needs a base rule on S^{n-2}");
  }
  SubsphereRule out;
  out.direction.assign(xi.begin(), xi.end());
  out.frame = householder_frame(xi);
  out.nodes.assign(base->size() * n, 0.0);
  for (std::size_t k = 0; k < base->size(); ++k) {
    const auto y = base->node(k);
    double* dst = out.nodes.data() + k * n;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double yi = y[i];
      const double* row = out.frame.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) dst[j] += yi * row[j];
    }
  }
  out.base = std::move(base);
  return out;
}

SubsphereRule subsphere_rule(std::shared_ptr<const SphereRule> base, const Direction& xi) {
  return subsphere_rule(std::move(base), xi.coords());
}

QuadratureResult integrate_radial(const Integrand& f, double a, double b, double tol) {
  if (!(a <= b)) throw DomainError("integration interval must satisfy a <= b");
  if (a == b) return {};
  if (!(tol > 0.0)) throw DomainError("integration tolerance must be positive");
  return kronrod(f, a, b, 0.0, tol);
}

QuadratureResult integrate_radial_relative(const Integrand& f, double a, double b, double rel_tol) {
  if (!(a <= b)) throw DomainError("integration interval must satisfy a <= b");
  if (a == b) return {};
  return kronrod(f, a, b, std::max(rel_tol, kUlpFloor), 0.0);
}

QuadratureResult integrate_toward_one(const Integrand& f, double a, double b, double rel_tol) {
  if (!(a <= b) || b > 1.0 || a < 0.0) throw DomainError("integrate_toward_one needs 0 <= a <= b <= 1");
  if (a == b) return {};
  const double ua = -std::log1p(-a);
  const double ub = b == 1.0 ? std::numeric_limits<double>::infinity() : -std::log1p(-b);
  auto g = [&](double u) {
    const double x = -std::expm1(-u);
    // past the last representable r below 1 the transformed integrand of an
    // integrable singularity has already decayed to zero
    if (x >= 1.0) return 0.0;
    return f(x) * std::exp(-u);
  };
  return kronrod(g, ua, ub, std::max(rel_tol, kUlpFloor), 0.0);
}

QuadratureResult integrate_panels(const Integrand& f, double a, double b, std::vector<double> breakpoints,
                                  double rel_tol) {
  if (!(a <= b)) throw DomainError("integration interval must satisfy a <= b");
  if (a == b) return {};
  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(a);
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints) {
    if (x > a && x < b && x - cuts.back() > 1e-15 * std::max(1.0, std::abs(x))) cuts.push_back(x);
  }
  cuts.push_back(b);
  // Pilot pass for the total L1 norm; each panel then gets a share of the
  // absolute error budget proportional to its width.
  const std::size_t panels = cuts.size() - 1;
  double l1 = 0.0;
  try {
    for (std::size_t i = 0; i < panels; ++i) l1 += kronrod_panel(f, cuts[i], cuts[i + 1]).l1;
  } catch (const std::exception& e) {
    throw ConvergenceError(std::string("adaptive quadrature failed: ") + e.what());
  }
  const double budget = std::max(rel_tol, kUlpFloor) * l1;
  std::vector<double> values(panels);
  QuadratureResult total;
  try {
    for (std::size_t i = 0; i < panels; ++i) {
      const double share = budget * (cuts[i + 1] - cuts[i]) / (b - a);
      const Adapted part = adapt(f, cuts[i], cuts[i + 1], 0.0, share);
      values[i] = part.value;
      total.error += part.error;
    }
  } catch (const std::exception& e) {
    throw ConvergenceError(std::string("adaptive quadrature failed: ") + e.what());
  }
  total.value = pairwise_sum(values);
  if (!std::isfinite(total.value) || !(total.error <= budget)) stalled(a, b, total.error, budget);
  return total;
}

}  // namespace busemann
