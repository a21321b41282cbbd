#include "busemann/verify.hpp"

#include <cmath>
#include <cstdio>
#include <variant>

#include "busemann/errors.hpp"
#include "busemann/parallel.hpp"

namespace busemann {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string describe(const StarBody& body) {
  char buf[128];
  const std::string kind = body.kind();
  if (const auto* c = std::get_if<ClosedForm>(&body.profile())) {
    if (const auto* b = std::get_if<BallShape>(c)) {
      std::snprintf(buf, sizeof buf, "ball r=%.6g", b->r);
      return buf;
    }
    if (const auto* l = std::get_if<LuneShape>(c)) {
      std::snprintf(buf, sizeof buf, "lune w=%.6g", l->w);
      return buf;
    }
    if (const auto* cone = std::get_if<ConeShape>(c)) {
      std::snprintf(buf, sizeof buf, "cone zones=%zu |A|=%.6g", cone->base.zones().size(), cone->base.measure());
      return buf;
    }
    if (const auto* b = std::get_if<BumpShape>(c)) {
      std::snprintf(buf, sizeof buf, "bumps base=%.6g count=%zu%s", b->base, b->bumps.size(),
                    b->mirrored ? " mirrored" : "");
      return buf;
    }
  }
  if (const auto* p = std::get_if<HarmonicPerturbed>(&body.profile())) {
    std::snprintf(buf, sizeof buf, "perturbed r=%.6g k=%d beta=%.6g", p->r, p->harmonic.degree(), p->beta);
    return buf;
  }
  return kind;
}

InequalityReport check_theorem(Theorem t, const StarBody& body, const SuiteConfig& config) {
  InequalityReport report;
  report.theorem_id = theorem_id(t);
  report.body = describe(body);
  report.quadrature = {config.functional.outer_degree, config.functional.inner_degree, config.functional.radial_tol};
  try {
    check_applicable(t, body);
    if (t == Theorem::LuneMax && !is_convex_spherical(body)) {
      throw ApplicabilityError("lune-max applies to spherically convex bodies only");
    }
  } catch (const ApplicabilityError& e) {
    report.verdict = Verdict::NotApplicable;
    report.note = e.what();
    return report;
  }
  const RadialDensityMeasure mu = theorem_measure(t);
  FunctionalOptions options = config.functional;
  options.exponent = theorem_exponent(t, body.dim());
  options.normalized = (t == Theorem::Gaussian);
  const FunctionalValue lhs = busemann_functional(body, mu, options);
  const FunctionalValue vol = volume(body, mu, config.functional);
  report.lhs = lhs.value;
  report.lhs_error = lhs.error;
  report.volume = vol.value;
  report.rhs = rhs_value(t, body.space(), vol.value);
  report.gap = upper_bound(t) ? report.rhs - report.lhs : report.lhs - report.rhs;
  report.rel_gap = report.rhs != 0.0 ? report.gap / std::abs(report.rhs) : report.gap;
  // The volume error moves the right side too; bound its effect by a
  // one-sided difference of the closed form.
  double rhs_error = 0.0;
  if (vol.error > 0.0) {
    try {
      rhs_error = std::abs(rhs_value(t, body.space(), vol.value + vol.error) - report.rhs);
    } catch (const DomainError&) {
      rhs_error = std::abs(rhs_value(t, body.space(), vol.value - vol.error) - report.rhs);
    }
  }
  report.tolerance = std::max(config.rel_tol * std::abs(report.rhs), config.error_factor * (lhs.error + rhs_error));
  report.verdict = report.gap >= -report.tolerance ? Verdict::Pass : Verdict::Fail;
  if (t == Theorem::SphericalPower && report.verdict == Verdict::Pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "strictness margin %.3g", report.rel_gap);
    report.note = buf;
  }
  return report;
}

std::vector<InequalityReport> run_theorem_suite(Theorem t, const std::vector<StarBody>& bodies,
                                                const SuiteConfig& config) {
  std::vector<InequalityReport> reports(bodies.size());
  parallel_for(
      bodies.size(),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) reports[i] = check_theorem(t, bodies[i], config);
      },
      1);
  return reports;
}

bool suite_passed(const std::vector<InequalityReport>& reports) noexcept {
  if (reports.empty()) return false;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::Pass) return false;
  }
  return true;
}

}  // namespace busemann
