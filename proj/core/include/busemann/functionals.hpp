#pragma once

#include <vector>

#include "busemann/bodies.hpp"
#include "busemann/measures.hpp"

namespace busemann {

struct FunctionalOptions {
  // Rule degrees on S^{n-1} and S^{n-2}. With 0 the degree is raised along a
  // 1.5x ladder until successive values agree to rel_tol (capped per dimension).
  int outer_degree = 0;
  int inner_degree = 0;
  double rel_tol = 1e-10;
  double radial_tol = 1e-12;
  double angle_tol = 1e-11;  // relative tolerance of adaptive 1-D outer integrals
  int exponent = 0;          // power of the section volume; 0 means n
  bool normalized = false;   // divide by |S^{n-1}|
  bool estimate_error = true;
};

struct FunctionalValue {
  double value = 0.0;
  double error = 0.0;  // estimated absolute quadrature error
};

FunctionalValue volume(const StarBody& body, const RadialDensityMeasure& mu = RadialDensityMeasure::uniform(),
                       const FunctionalOptions& options = {});

FunctionalValue section_volume(const StarBody& body, const Direction& xi,
                               const RadialDensityMeasure& mu = RadialDensityMeasure::uniform(),
                               const FunctionalOptions& options = {});

/// int_{S^{n-1}} section_volume(xi)^p d xi.
FunctionalValue busemann_functional(const StarBody& body,
                                    const RadialDensityMeasure& mu = RadialDensityMeasure::uniform(),
                                    const FunctionalOptions& options = {});

/// Section volumes at the nodes of the outer rule, for tabulation.
struct SectionSample {
  std::vector<double> direction;
  double weight = 0.0;
  double section = 0.0;
};
std::vector<SectionSample> section_table(const StarBody& body, int degree,
                                         const RadialDensityMeasure& mu = RadialDensityMeasure::uniform());

}  // namespace busemann
