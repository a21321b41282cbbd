#include "busemann/search.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "busemann/bounds.hpp"
#include "busemann/errors.hpp"
#include "busemann/functionals.hpp"
#include "busemann/random_bodies.hpp"

namespace busemann {

namespace {

constexpr double kDriftLimit = 1e-8;
constexpr int kPatience = 25;  // rejections in a row before the step is halved
constexpr double kMinStep = 1e-4;
constexpr double kRimMargin = 1e-6;

double phi2_inverse(const SpaceSpec& space, double v) {
  switch (space.curvature) {
    case Curvature::Spherical: return arccos_one_minus(v);
    case Curvature::Hyperbolic: return std::acosh(1.0 + v);
    case Curvature::Euclidean: return std::sqrt(2.0 * v);
  }
  return 0.0;
}

class Search {
 public:
  explicit Search(const SearchSettings& s) : s_(s), rng_(s.seed) {}

  SearchTrace run() {
    validate();
    SearchTrace trace;
    trace.settings = s_;
    target_ = s_.volume ? *s_.volume : volume(make_ball(s_.space, 0.8)).value;
    trace.target_volume = target_;
    std::vector<double> current = start_profile();
    double best = objective(current);
    double step = s_.step;
    int misses = 0;
    for (int it = 1; it <= s_.budget; ++it) {
      SearchStep rec;
      rec.iteration = it;
      rec.step = step;
      std::vector<double> proposal = propose(current, step);
      double drift = 0.0;
      bool ok = renormalize(proposal, drift);
      rec.volume_drift = drift;
      double value = 0.0;
      if (ok && s_.convex) ok = convex(proposal);
      if (ok) {
        value = objective(proposal);
        ok = s_.sense == SearchSense::Maximize ? value > best : value < best;
      }
      if (ok) {
        current = std::move(proposal);
        best = value;
        rec.accepted = true;
        rec.profile = current;
        ++trace.accepted;
        trace.max_drift = std::max(trace.max_drift, drift);
        misses = 0;
      } else if (++misses >= kPatience) {
        step = std::max(kMinStep, 0.5 * step);
        misses = 0;
      }
      rec.objective = best;
      trace.steps.push_back(std::move(rec));
    }
    trace.best_profile = current;
    trace.best_objective = best;
    return trace;
  }

 private:
  void validate() const {
    if (s_.space.dim != 2) throw UnsupportedError("the extremizer search works on two-dimensional profiles");
    if (s_.nodes < 8) throw DomainError("search grid needs at least 8 nodes");
    if (s_.symmetric && s_.nodes % 2 != 0) throw DomainError("symmetric search needs an even node count");
    if (s_.convex && s_.space.hyperbolic()) throw UnsupportedError("convex search is available in S^2_+ and R^2");
    if (s_.budget < 0) throw DomainError("budget must be nonnegative");
    if (!(s_.step > 0.0)) throw DomainError("step must be positive");
    if (s_.volume && !(*s_.volume > 0.0)) throw DomainError("target volume must be positive");
  }

  std::vector<double> start_profile() {
    const double r0 = phi2_inverse(s_.space, target_ / (2.0 * kPi));
    s_.space.check_radius(r0, "starting ball radius");
    const auto n = static_cast<std::size_t>(s_.nodes);
    std::vector<double> values(n, r0);
    if (s_.start_noise > 0.0) {
      std::vector<std::pair<int, double>> modes;
      for (int freq = 2; freq <= 3; ++freq) {
        if (s_.symmetric && freq % 2 != 0) continue;
        modes.emplace_back(freq, uniform(rng_, 0.0, 2.0 * kPi));
      }
      const double amp = s_.start_noise * r0 / static_cast<double>(modes.size());
      for (std::size_t j = 0; j < n; ++j) {
        const double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
        for (const auto& [freq, phase] : modes) values[j] += amp * std::cos(freq * angle + phase);
      }
    }
    double drift = 0.0;
    if (!renormalize(values, drift) || (s_.convex && !convex(values))) {
      values.assign(n, r0);
      renormalize(values, drift);
    }
    return values;
  }

  std::vector<double> propose(const std::vector<double>& current, double step) {
    const auto n = static_cast<int>(current.size());
    std::vector<double> out = current;
    double mean = 0.0;
    for (double v : current) mean += v;
    mean /= n;
    const int up = static_cast<int>(rng_() % static_cast<std::uint64_t>(n));
    int down = static_cast<int>(rng_() % static_cast<std::uint64_t>(n - 1));
    if (down >= up) ++down;
    const int width = 1 + static_cast<int>(rng_() % 3);
    const double amp = step * mean * uniform(rng_, 0.5, 1.0);
    auto add = [&](int centre, double a) {
      for (int d = -width; d <= width; ++d) {
        const int i = ((centre + d) % n + n) % n;
        out[static_cast<std::size_t>(i)] += a * (1.0 - std::abs(d) / (width + 1.0));
      }
    };
    add(up, amp);
    add(down, -amp);
    if (s_.symmetric) {
      add(up + n / 2, amp);
      add(down + n / 2, -amp);
    }
    return out;
  }

  bool admissible(const std::vector<double>& v) const {
    for (double x : v) {
      if (!(x > 0.0)) return false;
      if (s_.space.spherical() && x >= kHalfPi - kRimMargin) return false;
    }
    return true;
  }

  // Rescales phi_2(rho) by a common factor so the volume hits the target.
  bool renormalize(std::vector<double>& values, double& drift) const {
    if (!admissible(values)) return false;
    const double cap = s_.space.spherical() ? phi(s_.space, 2, kHalfPi - kRimMargin) : INFINITY;
    std::vector<double> base(values.size());
    double top = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      base[i] = phi(s_.space, 2, values[i]);
      top = std::max(top, base[i]);
    }
    auto scaled = [&](double c) {
      std::vector<double> v(values.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = phi2_inverse(s_.space, c * base[i]);
      return v;
    };
    auto excess = [&](double c) { return vol(scaled(c)) - target_; };
    const double c_max = cap / top;
    double lo = 0.5, hi = 2.0;
    hi = std::min(hi, c_max);
    if (excess(hi) < 0.0 || excess(lo) > 0.0) return false;
    std::uintmax_t iterations = 100;
    const auto root =
        boost::math::tools::toms748_solve(excess, lo, hi, boost::math::tools::eps_tolerance<double>(50), iterations);
    values = scaled(0.5 * (root.first + root.second));
    if (!admissible(values)) return false;
    drift = std::abs(vol(values) - target_) / target_;
    return drift <= kDriftLimit;
  }

  double vol(const std::vector<double>& v) const { return volume(grid_body(s_.space, v, false)).value; }

  double objective(const std::vector<double>& v) const {
    return busemann_functional(grid_body(s_.space, v, false)).value;
  }

  bool convex(const std::vector<double>& v) const {
    const StarBody body = grid_body(s_.space, v, false);
    return s_.space.spherical() ? is_convex_spherical(body, 1000, s_.seed) : is_convex_euclidean(body, 1000, s_.seed);
  }

  SearchSettings s_;
  Rng rng_;
  double target_ = 0.0;
};

}  // namespace

StarBody grid_body(const SpaceSpec& space, const std::vector<double>& values, bool symmetric) {
  GridInterpolated g;
  g.n = 2;
  g.rows = 1;
  g.cols = static_cast<int>(values.size());
  g.values = values;
  return make_grid_body(space, std::move(g), symmetric);
}

SearchTrace extremizer_search(const SearchSettings& settings) { return Search(settings).run(); }

}  // namespace busemann
