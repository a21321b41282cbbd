#include "busemann/harmonics.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "busemann/errors.hpp"
#include "busemann/parallel.hpp"

namespace busemann {

namespace {

double chebyshev(int k, double t) {
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = t;
  for (int j = 2; j <= k; ++j) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Squared L^2 norm of t -> C_k(t) on S^{n-1}, computed once per (n, k) with a
// Gauss rule exact for the degree-2k integrand.
double raw_norm_squared(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, double> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  const double a = 0.5 * (n - 2);
  const GaussRule1D rule = gauss_gegenbauer(k + 2, 0.5 * (n - 3));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double c = gegenbauer(k, a, rule.nodes[i]);
    sum += rule.weights[i] * c * c;
  }
  const double value = sphere_area(n - 2) * sum;
  cache.emplace(std::make_pair(n, k), value);
  return value;
}

}  // namespace

double gegenbauer(int k, double a, double t) {
  if (k < 0) throw DomainError("polynomial degree must be >= 0");
  if (a == 0.0) return chebyshev(k, t);
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 2.0 * a * t;
  for (int j = 2; j <= k; ++j) {
    const double next = (2.0 * t * (j + a - 1.0) * cur - (j + 2.0 * a - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return cur;
}

ZonalHarmonic::ZonalHarmonic(int n, int k, Direction axis) : n_(n), k_(k), axis_(std::move(axis)), scale_(1.0) {
  if (n < 2) throw DomainError("zonal harmonics need n >= 2");
  if (k < 0) throw DomainError("harmonic degree must be >= 0");
  if (axis_.dim() != n) throw DomainError("harmonic axis has the wrong dimension");
  scale_ = 1.0 / std::sqrt(raw_norm_squared(n, k));
}

double ZonalHarmonic::profile(double t) const { return scale_ * gegenbauer(k_, 0.5 * (n_ - 2), t); }

double ZonalHarmonic::operator()(std::span<const double> u) const { return profile(dot(u, axis_.coords())); }

double eval_zonal(const ZonalHarmonic& h, const Direction& u) { return h(u.coords()); }

double radon_quadrature(const SphereFunction& f, const SphereRule& rule, const Direction& xi) {
  if (rule.dim != xi.dim() - 2) throw DomainError("Radon transform needs a rule on S^{n-2}");
  auto shared = std::shared_ptr<const SphereRule>(std::shared_ptr<const SphereRule>{}, &rule);
  const SubsphereRule sub = subsphere_rule(shared, xi);
  std::vector<double> terms(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) terms[i] = sub.weights()[i] * f(sub.node(i));
  return pairwise_sum(terms);
}

double radon_multiplier(int n, int k) {
  if (n == 2) throw UnsupportedError("Radon multipliers on S^1 (point-pair sections) are not provided");
  if (n < 2) throw DomainError("ambient dimension must be >= 3");
  if (k < 0) throw DomainError("harmonic degree must be >= 0");
  if (k % 2 == 1) return 0.0;
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * 2.0 * std::pow(kPi, 0.5 * (n - 2)) *
         std::exp(boost::math::lgamma(0.5 * (k + 1)) - boost::math::lgamma(0.5 * (n + k - 1)));
}

MultiplierTable multiplier_table(int n, int max_degree) {
  MultiplierTable table;
  table.ambient_dim = n;
  for (int k = 0; k <= max_degree; ++k) table.values[k] = radon_multiplier(n, k);
  return table;
}

RadonBound radon_l2_bound_check(const SphereFunction& f, int n, int outer_degree, int inner_degree) {
  if (n < 3) throw UnsupportedError("the Radon L^2 bound needs n >= 3");
  const auto outer = cached_sphere_rule(n - 1, outer_degree);
  const auto inner = cached_sphere_rule(n - 2, inner_degree);
  std::vector<double> rf2(outer->size());
  std::vector<double> f2(outer->size());
  parallel_for(outer->size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto xi = outer->node(i);
      const SubsphereRule sub = subsphere_rule(inner, xi);
      std::vector<double> terms(sub.size());
      for (std::size_t j = 0; j < sub.size(); ++j) terms[j] = sub.weights()[j] * f(sub.node(j));
      const double r = pairwise_sum(terms);
      const double v = f(xi);
      rf2[i] = outer->weights[i] * r * r;
      f2[i] = outer->weights[i] * v * v;
    }
  });
  return {std::sqrt(pairwise_sum(rf2)), sphere_area(n - 2) * std::sqrt(pairwise_sum(f2))};
}


RadonBound radon_integral_identity(const SphereFunction& g, int n, int outer_degree, int inner_degree) {
  if (n < 3) throw UnsupportedError("the Radon integral identity needs n >= 3");
  const auto outer = cached_sphere_rule(n - 1, outer_degree);
  const auto inner = cached_sphere_rule(n - 2, inner_degree);
  std::vector<double> rg(outer->size());
  std::vector<double> gg(outer->size());
  parallel_for(outer->size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto xi = outer->node(i);
      const SubsphereRule sub = subsphere_rule(inner, xi);
      std::vector<double> terms(sub.size());
      for (std::size_t j = 0; j < sub.size(); ++j) terms[j] = sub.weights()[j] * g(sub.node(j));
      rg[i] = outer->weights[i] * pairwise_sum(terms);
      gg[i] = outer->weights[i] * g(xi);
    }
  });
  return {pairwise_sum(rg), sphere_area(n - 2) * pairwise_sum(gg)};
}

}  // namespace busemann
