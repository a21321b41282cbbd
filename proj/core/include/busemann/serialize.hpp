#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "busemann/bodies.hpp"
#include "busemann/experiments.hpp"
#include "busemann/functionals.hpp"
#include "busemann/search.hpp"
#include "busemann/verify.hpp"

namespace busemann {

using Json = nlohmann::json;

/// Version stamped into every emitted document; readers reject other versions.
inline constexpr int kFormatVersion = 1;

/// "s+:2", "h:3", "r:3" (also "s:2" and "e:3"); ParseError otherwise.
SpaceSpec parse_space(const std::string& label);

Json space_to_json(const SpaceSpec& space);
SpaceSpec space_from_json(const Json& j);

/// {format_version, space, profile: {kind, params} or {kind, nodes, values}, symmetric}.
Json body_to_json(const StarBody& body);
/// Inverse of body_to_json. Throws ParseError for malformed documents and lets
/// the body constructors report domain violations. Without a "symmetric" field
/// the body keeps the symmetry its constructor detects.
StarBody body_from_json(const Json& j);

/// Constructor mini-language `kind:key=val,key=val` with '/' separating list
/// entries, e.g. "ball:r=0.7" or "ellipsoid:semiaxes=1/2/3". Keys are the JSON
/// params of the kind; a cone takes a single zone as axis/lo/hi (mirrored=1
/// adds its antipodal copy), a bump body at most one bump, and symmetric=0|1
/// sets the top-level claim.
Json body_spec_to_json(const std::string& spec, const SpaceSpec& space);
StarBody parse_body_spec(const std::string& spec, const SpaceSpec& space);

Json report_to_json(const InequalityReport& report);
Json report_bundle(const std::string& theorem_id, const std::vector<InequalityReport>& reports);

struct FunctionalReport {
  Json body;
  std::string measure = "uniform";
  int exponent = 0;
  FunctionalValue volume;
  FunctionalValue functional;
  std::vector<SectionSample> sections;  // optional table
};
Json functional_report_to_json(const FunctionalReport& report);

Json perturbation_to_json(const std::vector<PerturbationResult>& results);
Json sharpness_to_json(int n, double t, const std::vector<SharpnessRow>& rows);
Json search_to_json(const SearchTrace& trace);

/// Row-oriented table written as CSV: RFC 4180 quoting, "\n" line ends.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};
std::string csv_number(double x);

CsvTable reports_csv(const std::vector<InequalityReport>& reports);
CsvTable sections_csv(const std::vector<SectionSample>& sections);
/// One row per (k, beta) step, with predicted and observed signs.
CsvTable perturbation_csv(const std::vector<PerturbationResult>& results);
CsvTable sharpness_csv(const std::vector<SharpnessRow>& rows);
/// One row per search iteration.
CsvTable search_csv(const SearchTrace& trace);

}  // namespace busemann
