#pragma once

#include <string>
#include <vector>

#include "busemann/bodies.hpp"
#include "busemann/bounds.hpp"
#include "busemann/functionals.hpp"

namespace busemann {

enum class Verdict { Pass, Fail, NotApplicable };
const char* to_string(Verdict v) noexcept;

struct QuadratureSettings {
  int outer_degree = 0;
  int inner_degree = 0;
  double radial_tol = 1e-12;
};

/// One theorem checked on one body. The gap is oriented so that gap >= 0
/// means the bound holds; verdict is Pass iff gap >= -tolerance.
struct InequalityReport {
  std::string theorem_id;
  std::string body;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double rel_gap = 0.0;
  double tolerance = 0.0;
  double lhs_error = 0.0;  // quadrature error estimate of lhs
  double volume = 0.0;     // volume (or measure) fed to the right side
  Verdict verdict = Verdict::Fail;
  QuadratureSettings quadrature;
  std::string note;

  /// The bound holds with room to spare: gap above the tolerance.
  bool strict() const noexcept { return gap > tolerance; }
};

struct SuiteConfig {
  FunctionalOptions functional;
  /// Relative slack on the right side before a negative gap counts as a failure.
  double rel_tol = 1e-9;
  /// Multiple of the quadrature error estimate added to the slack.
  double error_factor = 10.0;
};

InequalityReport check_theorem(Theorem t, const StarBody& body, const SuiteConfig& config = {});
/// Runs the bodies in parallel; an inapplicable body yields a NotApplicable
/// report rather than aborting the suite.
std::vector<InequalityReport> run_theorem_suite(Theorem t, const std::vector<StarBody>& bodies,
                                                const SuiteConfig& config = {});
bool suite_passed(const std::vector<InequalityReport>& reports) noexcept;

/// Short description of a body for reports, e.g. "ball r=0.7".
std::string describe(const StarBody& body);

}  // namespace busemann
