#include "busemann/angular_area.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "busemann/errors.hpp"
#include "busemann/quadrature.hpp"

namespace busemann {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr int kScan = 8192;
constexpr double kZeroDensity = 1e-14;
constexpr double kPanelTol = 1e-12;

}  // namespace

AngularAreaMap::AngularAreaMap(const StarBody& outer, const StarBody& inner, std::optional<double> x0)
    : outer_(&outer), inner_(&inner) {
  for (const StarBody* b : {&outer, &inner}) {
    if (!b->space().spherical() || b->dim() != 2) throw ApplicabilityError("angular area is defined in S^2_+");
  }
  // Zero runs of the density on a scan of the circle.
  std::vector<bool> positive(kScan);
  bool any_zero = false;
  for (int i = 0; i < kScan; ++i) {
    positive[static_cast<std::size_t>(i)] = density(kTwoPi * i / kScan) > kZeroDensity;
    any_zero = any_zero || !positive[static_cast<std::size_t>(i)];
  }
  if (std::none_of(positive.begin(), positive.end(), [](bool p) { return p; })) {
    throw DomainError("region has zero volume");
  }
  if (x0) {
    x0_ = *x0;
    if (any_zero && density(x0_) > kZeroDensity) {
      throw PreconditionError("start direction lies inside the angular support");
    }
  } else if (any_zero) {
    // Centre of the longest zero run (wrapping around).
    int best_start = 0, best_len = 0;
    for (int i = 0; i < kScan; ++i) {
      if (positive[static_cast<std::size_t>(i)] || !positive[static_cast<std::size_t>((i + kScan - 1) % kScan)]) {
        continue;
      }
      int len = 0;
      while (len < kScan && !positive[static_cast<std::size_t>((i + len) % kScan)]) ++len;
      if (len > best_len) {
        best_len = len;
        best_start = i;
      }
    }
    x0_ = kTwoPi * (best_start + 0.5 * (best_len - 1)) / kScan;
  }
  if (any_zero) {
    // Starting from x0, the support must be a single run of positive density.
    const int first = static_cast<int>(std::lround(x0_ / kTwoPi * kScan));
    int transitions = 0;
    bool prev = positive[static_cast<std::size_t>(((first % kScan) + kScan) % kScan)];
    for (int i = 1; i <= kScan; ++i) {
      const bool cur = positive[static_cast<std::size_t>((((first + i) % kScan) + kScan) % kScan)];
      if (cur != prev) ++transitions;
      prev = cur;
    }
    if (transitions > 2) throw DomainError("angular density vanishes inside the support; the map is not injective");
  }
  // Panels aligned with the radial breakpoints of both bodies.
  std::vector<double> cuts;
  for (const StarBody* b : {&outer, &inner}) {
    for (double a : b->angle_breakpoints()) {
      double off = std::fmod(a - x0_, kTwoPi);
      if (off < 0.0) off += kTwoPi;
      cuts.push_back(off);
    }
  }
  for (int i = 1; i < 256; ++i) cuts.push_back(kTwoPi * i / 256);
  std::sort(cuts.begin(), cuts.end());
  edges_.push_back(0.0);
  for (double c : cuts) {
    if (c > edges_.back() + 1e-14 && c < kTwoPi) edges_.push_back(c);
  }
  edges_.push_back(kTwoPi);
  cumulative_.assign(edges_.size(), 0.0);
  auto g = [this](double off) { return density(x0_ + off); };
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + integrate_radial(g, edges_[i], edges_[i + 1], kPanelTol).value;
  }
  total_ = cumulative_.back();
}

double AngularAreaMap::density(double angle) const {
  return std::max(0.0, std::cos(inner_->radius_at_angle(angle)) - std::cos(outer_->radius_at_angle(angle)));
}

double AngularAreaMap::forward(double offset) const {
  if (!(offset >= 0.0 && offset <= kTwoPi)) throw DomainError("offset must lie in [0, 2 pi]");
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), offset);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - edges_.begin()) - 1, edges_.size() - 2);
  auto g = [this](double off) { return density(x0_ + off); };
  const double part = integrate_radial(g, edges_[i], offset, kPanelTol).value;
  return std::clamp((cumulative_[i] + part) / total_, 0.0, 1.0);
}

double AngularAreaMap::inverse(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("inverse angular area needs t in [0, 1]");
  if (t == 0.0 || t == 1.0) {
    // Ends of the support: the last offset with f = 0, or the first with f = 1.
    constexpr double kEdge = 1e-13;
    auto reached = [&](double off) { return t == 0.0 ? forward(off) > kEdge : forward(off) >= 1.0 - kEdge; };
    std::size_t i = 0;
    while (i + 2 < edges_.size() &&
           !(t == 0.0 ? cumulative_[i + 1] > kEdge * total_ : cumulative_[i + 1] >= (1.0 - kEdge) * total_)) {
      ++i;
    }
    double lo = edges_[i], hi = edges_[i + 1];
    for (int it = 0; it < 64; ++it) {
      const double mid = 0.5 * (lo + hi);
      (reached(mid) ? hi : lo) = mid;
    }
    return x0_ + (t == 0.0 ? lo : hi);
  }
  const double target = t * total_;
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), target);
  const std::size_t i = std::clamp<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), 1,
                                                cumulative_.size() - 1);
  const double lo = edges_[i - 1];
  const double hi = edges_[i];
  auto f = [&](double off) { return forward(off) - t; };
  const double flo = f(lo), fhi = f(hi);
  if (flo >= 0.0) return x0_ + lo;
  if (fhi <= 0.0) return x0_ + hi;
  std::uintmax_t iterations = 200;
  const auto root = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                                      boost::math::tools::eps_tolerance<double>(48), iterations);
  return x0_ + 0.5 * (root.first + root.second);
}

}  // namespace busemann
