#include "busemann/functionals.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "busemann/errors.hpp"
#include "busemann/parallel.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
// Deepest geometric grading of a panel in the cone functional.
constexpr int kMaxGrading = 16;

int outer_degree(const FunctionalOptions& o, int n) {
  return o.outer_degree > 0 ? o.outer_degree : default_degree(n - 1);
}
int inner_degree(const FunctionalOptions& o, int n) {
  return o.inner_degree > 0 ? o.inner_degree : default_degree(n - 2);
}
int coarser(int degree) { return std::max(1, (2 * degree) / 3); }

int degree_cap(int sphere_dim) {
  switch (sphere_dim) {
    case 1: return 383;
    case 2: return 179;
    case 3: return 53;
    case 4: return 35;
    default: return 23;
  }
}

// Evaluates at increasing degrees until two consecutive values agree to
// rel_tol; the last difference is the error estimate.
FunctionalValue refine(const std::function<double(int)>& eval, int start, int cap, double rel_tol) {
  int d = std::min(start, cap);
  double prev = eval(coarser(d));
  double cur = eval(d);
  while (std::abs(cur - prev) > rel_tol * std::abs(cur) && d < cap) {
    d = std::min(cap, d + d / 2);
    prev = cur;
    cur = eval(d);
  }
  return {cur, std::abs(cur - prev)};
}

double kernel(const RadialDensityMeasure& mu, const SpaceSpec& space, int m, double rho) {
  if (rho <= 0.0) return 0.0;
  return mu.radial_integral(space, m, rho);
}

double power(double x, int p) { return p == 1 ? x : std::pow(x, p); }

double section_on_rule(const StarBody& body, const RadialDensityMeasure& mu, const SubsphereRule& sub) {
  std::vector<double> terms(sub.size());
  for (std::size_t j = 0; j < sub.size(); ++j) {
    terms[j] = sub.weights()[j] * kernel(mu, body.space(), body.dim() - 1, body.radius(sub.node(j)));
  }
  return pairwise_sum(terms);
}

double cone_section(const StarBody& body, const RadialDensityMeasure& mu, std::span<const double> xi) {
  const ConeShape* c = body.cone();
  return kernel(mu, body.space(), body.dim() - 1, c->height) * c->base.section_measure(xi);
}

std::vector<double> unit_circle_angles(const std::vector<double>& cuts) {
  std::vector<double> out;
  for (double c : cuts) {
    out.push_back(c);
    double d = c - kPi;
    if (d < 0.0) d += kTwoPi;
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// |S^{n-2}| int_0^pi g(theta) sin^{n-2}(theta) d theta for smooth zonal g.
FunctionalValue zonal_outer(int n, const std::function<double(double)>& g, double rel_tol) {
  const double area = sphere_area(n - 2);
  auto integrand = [&](double theta) { return g(theta) * std::pow(std::sin(theta), n - 2); };
  const auto r = integrate_panels(integrand, 0.0, kPi, {}, rel_tol);
  return {area * r.value, area * r.error};
}

// Functional of a cone whose base is a union of bands about one axis. The
// section measure depends on s = sin(theta) only and has a square-root kink
// where s crosses a band edge |h|; a band of width w also puts a near-singular
// bump of scale w just after its far edge. Each panel between kinks is graded
// geometrically toward its left end, down to the distance to the previous kink.
FunctionalValue cone_zonal_functional(const ConeShape& cone, double height_kernel, int n, int p) {
  std::vector<double> edges{0.0};
  for (double k : cone.base.zonal_kinks()) edges.push_back(std::asin(std::sqrt(std::max(0.0, 1.0 - k * k))));
  edges.push_back(kHalfPi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  auto integrand = [&](double theta) {
    return power(height_kernel * cone.base.section_measure_zonal(std::cos(theta)), p) *
           std::pow(std::sin(theta), n - 2);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const std::size_t panels = edges.size() - 1;
  std::vector<double> values(panels), errors(panels);
  parallel_for(panels, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double a = edges[i], b = edges[i + 1];
      const double width = b - a;
      int levels = 1;
      if (i > 0) {
        const double gap = a - edges[i - 1];
        levels = std::clamp(static_cast<int>(std::ceil(std::log(std::max(1.0, width / gap)) / std::log(4.0))) + 2, 2,
                            kMaxGrading);
      }
      double value = 0.0, error = 0.0, left = a;
      for (int j = levels - 1; j >= 0; --j) {
        const double right = a + width * std::pow(0.25, j);
        double e = 0.0;
        value += GK::integrate(integrand, left, right, 0, 0.0, &e);
        error += e * 0.5 * (right - left);
        left = right;
      }
      values[i] = value;
      errors[i] = error;
    }
  });
  const double scale = 2.0 * sphere_area(n - 2);
  return {scale * pairwise_sum(values), scale * pairwise_sum(errors)};
}

std::vector<double> orthogonal_unit(const Direction& a) {
  const auto frame = householder_frame(a.coords());
  const auto n = static_cast<std::size_t>(a.dim());
  return std::vector<double>(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(n));
}

FunctionalValue functional_circle(const StarBody& body, const RadialDensityMeasure& mu, int p,
                                  const FunctionalOptions& o) {
  auto integrand = [&](double phi) {
    const double s = kernel(mu, body.space(), 1, body.radius_at_angle(phi)) +
                     kernel(mu, body.space(), 1, body.radius_at_angle(phi + kPi));
    return power(s, p);
  };
  const auto r = integrate_panels(integrand, 0.0, kTwoPi, unit_circle_angles(body.angle_breakpoints()), o.angle_tol);
  return {r.value, r.error};
}

FunctionalValue functional_zonal(const StarBody& body, const Direction& axis, const RadialDensityMeasure& mu, int p,
                                 const FunctionalOptions& o) {
  const int n = body.dim();
  const auto b = orthogonal_unit(axis);
  if (const ConeShape* c = body.cone()) {
    return cone_zonal_functional(*c, kernel(mu, body.space(), n - 1, c->height), n, p);
  }
  auto run = [&](int degree) {
    const auto inner = cached_sphere_rule(n - 2, degree);
    auto g = [&](double theta) {
      std::vector<double> xi(static_cast<std::size_t>(n));
      const double ct = std::cos(theta), st = std::sin(theta);
      for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = ct * axis[static_cast<int>(i)] + st * b[i];
      return power(section_on_rule(body, mu, subsphere_rule(inner, xi)), p);
    };
    return zonal_outer(n, g, o.angle_tol);
  };
  if (o.inner_degree > 0) {
    FunctionalValue fine = run(o.inner_degree);
    if (o.estimate_error) fine.error += std::abs(fine.value - run(coarser(o.inner_degree)).value);
    return fine;
  }
  double outer_error = 0.0;
  const auto r = refine(
      [&](int d) {
        const auto v = run(d);
        outer_error = v.error;
        return v.value;
      },
      default_degree(n - 2), degree_cap(n - 2), o.rel_tol);
  return {r.value, r.error + outer_error};
}

double functional_product(const StarBody& body, const RadialDensityMeasure& mu, int p, int d_outer, int d_inner) {
  const int n = body.dim();
  const auto outer = cached_sphere_rule(n - 1, d_outer);
  const auto inner = cached_sphere_rule(n - 2, d_inner);
  std::vector<double> terms(outer->size());
  parallel_for(outer->size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto xi = outer->node(i);
      const double s = body.cone() ? cone_section(body, mu, xi) : section_on_rule(body, mu, subsphere_rule(inner, xi));
      terms[i] = outer->weights[i] * power(s, p);
    }
  });
  return pairwise_sum(terms);
}

double volume_product(const StarBody& body, const RadialDensityMeasure& mu, int degree) {
  const int n = body.dim();
  const auto rule = cached_sphere_rule(n - 1, degree);
  std::vector<double> terms(rule->size());
  parallel_for(rule->size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      terms[i] = rule->weights[i] * kernel(mu, body.space(), n, body.radius(rule->node(i)));
    }
  });
  return pairwise_sum(terms);
}

}  // namespace

FunctionalValue volume(const StarBody& body, const RadialDensityMeasure& mu, const FunctionalOptions& o) {
  const int n = body.dim();
  if (const ConeShape* c = body.cone()) return {kernel(mu, body.space(), n, c->height) * c->base.measure(), 0.0};
  if (n == 2) {
    auto f = [&](double phi) { return kernel(mu, body.space(), 2, body.radius_at_angle(phi)); };
    const auto r = integrate_panels(f, 0.0, kTwoPi, body.angle_breakpoints(), o.angle_tol);
    return {r.value, r.error};
  }
  if (const auto axis = body.zonal_axis()) {
    auto g = [&](double theta) { return kernel(mu, body.space(), n, body.radius_zonal(std::cos(theta))); };
    return zonal_outer(n, g, o.angle_tol);
  }
  if (o.outer_degree == 0) {
    return refine([&](int d) { return volume_product(body, mu, d); }, default_degree(n - 1), degree_cap(n - 1),
                  o.rel_tol);
  }
  const int d = o.outer_degree;
  FunctionalValue out{volume_product(body, mu, d), 0.0};
  if (o.estimate_error) out.error = std::abs(out.value - volume_product(body, mu, coarser(d)));
  return out;
}

FunctionalValue section_volume(const StarBody& body, const Direction& xi, const RadialDensityMeasure& mu,
                               const FunctionalOptions& o) {
  const int n = body.dim();
  if (xi.dim() != n) throw DomainError("direction dimension does not match the body");
  if (body.cone()) return {cone_section(body, mu, xi.coords()), 0.0};
  if (n == 2) {
    const double v[2] = {-xi[1], xi[0]};
    const double w[2] = {xi[1], -xi[0]};
    return {kernel(mu, body.space(), 1, body.radius(std::span<const double>(v, 2))) +
                kernel(mu, body.space(), 1, body.radius(std::span<const double>(w, 2))),
            0.0};
  }
  auto on_degree = [&](int d) { return section_on_rule(body, mu, subsphere_rule(cached_sphere_rule(n - 2, d), xi)); };
  if (o.inner_degree == 0) return refine(on_degree, default_degree(n - 2), degree_cap(n - 2), o.rel_tol);
  const int d = o.inner_degree;
  FunctionalValue out{on_degree(d), 0.0};
  if (o.estimate_error) {
    const double coarse = section_on_rule(body, mu, subsphere_rule(cached_sphere_rule(n - 2, coarser(d)), xi));
    out.error = std::abs(out.value - coarse);
  }
  return out;
}

FunctionalValue busemann_functional(const StarBody& body, const RadialDensityMeasure& mu, const FunctionalOptions& o) {
  const int n = body.dim();
  const int p = o.exponent > 0 ? o.exponent : n;
  FunctionalValue out;
  if (n == 2) {
    out = functional_circle(body, mu, p, o);
  } else if (const auto axis = body.zonal_axis()) {
    out = functional_zonal(body, *axis, mu, p, o);
  } else if (o.outer_degree == 0 && o.inner_degree == 0) {
    out = refine([&](int d) { return functional_product(body, mu, p, d, std::max(d, default_degree(n - 2))); },
                 default_degree(n - 1), degree_cap(n - 1), o.rel_tol);
  } else {
    const int d_o = outer_degree(o, n);
    const int d_i = inner_degree(o, n);
    out.value = functional_product(body, mu, p, d_o, d_i);
    if (o.estimate_error) out.error = std::abs(out.value - functional_product(body, mu, p, coarser(d_o), coarser(d_i)));
  }
  if (o.normalized) {
    const double area = sphere_area(n - 1);
    out.value /= area;
    out.error /= area;
  }
  return out;
}

std::vector<SectionSample> section_table(const StarBody& body, int degree, const RadialDensityMeasure& mu) {
  const int n = body.dim();
  const auto rule = cached_sphere_rule(n - 1, degree > 0 ? degree : default_degree(n - 1));
  std::vector<SectionSample> out(rule->size());
  FunctionalOptions o;
  o.estimate_error = false;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const auto node = rule->node(i);
    out[i].direction.assign(node.begin(), node.end());
    out[i].weight = rule->weights[i];
    out[i].section = section_volume(body, Direction::normalized(out[i].direction), mu, o).value;
  }
  return out;
}

}  // namespace busemann
