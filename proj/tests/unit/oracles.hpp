#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// Composite Simpson rule on [a, b] with 2n panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  const double h = (b - a) / (2 * n);
  double s = f(a) + f(b);
  for (int i = 1; i < 2 * n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// |S^m| by the two-step recurrence |S^m| = 2 pi / (m - 1) |S^{m-2}|.
inline double sphere_area(int m) {
  if (m == 0) return 2.0;
  if (m == 1) return 2.0 * pi;
  return 2.0 * pi / (m - 1) * sphere_area(m - 2);
}

inline double ball_volume(int n) { return sphere_area(n - 1) / n; }

/// int_0^x s(t)^{m-1} dt for s = sin, id, sinh.
inline double phi(int delta, int m, double x) {
  auto s = [delta](double t) { return delta > 0 ? std::sin(t) : (delta < 0 ? std::sinh(t) : t); };
  return simpson([&](double t) { return std::pow(s(t), m - 1); }, 0.0, x);
}

/// Volume of the geodesic ball of radius r in M^n_delta.
inline double ball_volume(int delta, int n, double r) { return sphere_area(n - 1) * phi(delta, n, r); }

/// Functional of the centred ball: |S^{n-1}| (|S^{n-2}| phi_{n-1}(r))^n.
inline double ball_functional(int delta, int n, double r) {
  return sphere_area(n - 1) * std::pow(sphere_area(n - 2) * phi(delta, n - 1, r), n);
}

/// c_n = n kappa_{n-1}^n / kappa_n^{n-2}.
inline double busemann_constant(int n) {
  return n * std::pow(ball_volume(n - 1), n) / std::pow(ball_volume(n), n - 2);
}

}  // namespace oracle
