#include "busemann/cone_base.hpp"

#include <algorithm>
#include <cmath>

#include "busemann/errors.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

// Zones about an axis agree when the axes match up to sign within this.
constexpr double kAxisTolerance = 1e-12;

double zone_section(int n, const Zone& z, double c) {
  const double s2 = std::max(0.0, 1.0 - c * c);
  const double s = std::sqrt(s2);
  if (s < 1e-15) return (z.lo <= 0.0 && 0.0 <= z.hi) ? sphere_area(n - 2) : 0.0;
  return zone_measure(n - 2, z.lo / s, z.hi / s);
}

}  // namespace

double sine_power_integral(int j, double theta) {
  if (j < 0) throw DomainError("sine power must be >= 0");
  if (j == 0) return theta;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  // I_j = -sin^{j-1} cos / j + (j-1)/j I_{j-2}
  double value = (j % 2 == 0) ? theta : 1.0 - c;
  double power = (j % 2 == 0) ? s : s * s;  // sin^{i-1} for the current i
  for (int i = (j % 2 == 0) ? 2 : 3; i <= j; i += 2) {
    value = -power * c / i + (i - 1.0) / i * value;
    power *= s * s;
  }
  return value;
}

double zone_measure(int m, double p, double q) {
  if (m < 0) throw DomainError("sphere dimension must be >= 0");
  p = std::clamp(p, -1.0, 1.0);
  q = std::clamp(q, -1.0, 1.0);
  if (p > q) return 0.0;
  if (m == 0) return (p <= -1.0 ? 1.0 : 0.0) + (q >= 1.0 ? 1.0 : 0.0);
  const double outer = sine_power_integral(m - 1, std::acos(p));
  const double inner = sine_power_integral(m - 1, std::acos(q));
  return sphere_area(m - 1) * std::max(0.0, outer - inner);
}

ConeBase::ConeBase(int n, std::vector<Zone> zones) : n_(n), zones_(std::move(zones)), measure_(0.0) {
  if (n < 2) throw DomainError("cone base needs n >= 2");
  for (const Zone& z : zones_) {
    if (z.axis.dim() != n) throw DomainError("zone axis has the wrong dimension");
    if (!(z.lo >= -1.0 && z.hi <= 1.0 && z.lo <= z.hi)) {
      throw DomainError("zone heights must satisfy -1 <= lo <= hi <= 1");
    }
    measure_ += zone_measure(n - 1, z.lo, z.hi);
  }
  if (zones_.empty()) {
    axis_ = Direction::axis(n_, n_ - 1);
    return;
  }
  const Direction& first = zones_.front().axis;
  for (const Zone& z : zones_) {
    const double d = dot(z.axis.coords(), first.coords());
    if (std::abs(std::abs(d) - 1.0) > kAxisTolerance) {
      oriented_.clear();
      return;
    }
    oriented_.emplace_back(d > 0.0 ? z.lo : -z.hi, d > 0.0 ? z.hi : -z.lo);
  }
  std::sort(oriented_.begin(), oriented_.end());
  axis_ = first;
}

ConeBase ConeBase::full(int n) { return ConeBase(n, {Zone{Direction::axis(n, n - 1), -1.0, 1.0}}); }

ConeBase ConeBase::cap(const Direction& axis, double height) {
  if (!(height > -1.0 && height < 1.0)) throw DomainError("cap height must lie in (-1, 1)");
  return ConeBase(axis.dim(), {Zone{axis, height, 1.0}});
}

bool ConeBase::contains(std::span<const double> u) const noexcept {
  for (const Zone& z : zones_) {
    const double t = dot(u, z.axis.coords());
    if (t >= z.lo && t <= z.hi) return true;
  }
  return false;
}

double ConeBase::section_measure(std::span<const double> xi) const {
  double total = 0.0;
  for (const Zone& z : zones_) total += zone_section(n_, z, dot(xi, z.axis.coords()));
  return total;
}

double ConeBase::section_measure_zonal(double c) const {
  if (!axis_) throw PreconditionError("zonal section requested for a base without a common axis");
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  if (s < 1e-15 || n_ == 2) {
    double total = 0.0;
    for (const auto& [lo, hi] : oriented_) total += zone_section(n_, Zone{*axis_, lo, hi}, c);
    return total;
  }
  // Zones are disjoint, so those meeting (-s, s) form a contiguous run.
  auto first = std::lower_bound(oriented_.begin(), oriented_.end(), -s,
                                [](const std::pair<double, double>& z, double v) { return z.second <= v; });
  double total = 0.0;
  for (auto it = first; it != oriented_.end() && it->first < s; ++it) {
    total += zone_measure(n_ - 2, it->first / s, it->second / s);
  }
  return total;
}

std::vector<double> ConeBase::zonal_kinks() const {
  std::vector<double> kinks;
  for (const Zone& z : zones_) {
    for (double h : {z.lo, z.hi}) {
      if (std::abs(h) < 1.0 && h != 0.0) kinks.push_back(std::sqrt(1.0 - h * h));
    }
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  return kinks;
}

ConeBase ConeBase::symmetrized() const {
  std::vector<Zone> zones = zones_;
  for (const Zone& z : zones_) zones.push_back(Zone{z.axis, -z.hi, -z.lo});
  return ConeBase(n_, std::move(zones));
}

double ConeBase::quadrature_measure(int degree) const {
  const SphereRule rule = build_sphere_rule(n_ - 1, degree);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (contains(rule.node(i))) total += rule.weights[i];
  }
  return total;
}

}  // namespace busemann
