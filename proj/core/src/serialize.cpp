#include "busemann/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <sstream>

#include "busemann/errors.hpp"

namespace busemann {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json vec(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

int integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool boolean_or(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) return v.get<int>() == 1;
  throw ParseError(std::string("field '") + key + "' must be a boolean");
}

std::vector<double> numbers(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number()) throw ParseError(std::string("field '") + key + "' must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<double> numbers_or_empty(const Json& j, const char* key) {
  return j.contains(key) ? numbers(j, key) : std::vector<double>{};
}

Direction direction(const Json& j, const char* key, int n) {
  std::vector<double> v = numbers(j, key);
  if (static_cast<int>(v.size()) != n) {
    throw ParseError(std::string("field '") + key + "' must have " + std::to_string(n) + " components");
  }
  // unit input is kept bit for bit so that documents round-trip exactly
  if (std::abs(norm(v) - 1.0) <= 1e-12) return Direction(std::move(v));
  return Direction::normalized(std::move(v));
}

Direction direction_or(const Json& j, const char* key, int n, int default_index) {
  return j.contains(key) ? direction(j, key, n) : Direction::axis(n, default_index);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; });
    if (!known) throw ParseError("unknown key '" + key + "' in " + where);
  }
}

void check_version(const Json& j) {
  if (!j.contains("format_version")) return;  // bare documents written by hand
  if (integer(j, "format_version") != kFormatVersion) {
    throw ParseError("unsupported format_version " + j.at("format_version").dump());
  }
}

Json profile_json(const StarBody& body) {
  return std::visit(
      Overloaded{
          [&](const ClosedForm& c) -> Json {
            return std::visit(
                Overloaded{
                    [](const BallShape& b) -> Json { return {{"kind", "ball"}, {"params", {{"r", b.r}}}}; },
                    [](const EllipsoidShape& e) -> Json {
                      Json p = {{"semiaxes", e.semiaxes}};
                      if (!e.rotation.empty()) p["rotation"] = e.rotation;
                      return {{"kind", "ellipsoid"}, {"params", p}};
                    },
                    [](const LuneShape& l) -> Json {
                      return {{"kind", "lune"}, {"params", {{"w", l.w}, {"axis", vec(l.axis.coords())}}}};
                    },
                    [](const GnomonicShape& g) -> Json {
                      Json p = Json::object();
                      if (!g.semiaxes.empty()) p["semiaxes"] = g.semiaxes;
                      if (!g.rotation.empty()) p["rotation"] = g.rotation;
                      Json slabs = Json::array();
                      for (const Slab& s : g.slabs) slabs.push_back({{"normal", vec(s.normal.coords())}, {"h", s.h}});
                      if (!slabs.empty()) p["slabs"] = slabs;
                      return {{"kind", "gnomonic"}, {"params", p}};
                    },
                    [](const BumpShape& b) -> Json {
                      Json bumps = Json::array();
                      for (const Bump& x : b.bumps) {
                        bumps.push_back({{"center", vec(x.center.coords())},
                                         {"amplitude", x.amplitude},
                                         {"concentration", x.concentration}});
                      }
                      return {{"kind", "bumps"},
                              {"params", {{"base", b.base}, {"mirrored", b.mirrored}, {"bumps", bumps}}}};
                    },
                    [](const ConeShape& c) -> Json {
                      Json zones = Json::array();
                      for (const Zone& z : c.base.zones()) {
                        zones.push_back({{"axis", vec(z.axis.coords())}, {"lo", z.lo}, {"hi", z.hi}});
                      }
                      return {{"kind", "cone"}, {"params", {{"height", c.height}, {"zones", zones}}}};
                    },
                },
                c);
          },
          [](const GridInterpolated& g) -> Json {
            return {{"kind", "grid"}, {"nodes", {{"rows", g.rows}, {"cols", g.cols}}}, {"values", g.values}};
          },
          [](const HarmonicPerturbed& p) -> Json {
            return {{"kind", "perturbed"},
                    {"params",
                     {{"r", p.r},
                      {"beta", p.beta},
                      {"k", p.harmonic.degree()},
                      {"axis", vec(p.harmonic.axis().coords())},
                      {"alpha", p.alpha}}}};
          },
      },
      body.profile());
}

// Without a symmetry claim the body keeps the symmetry its constructor found.
StarBody body_from_profile(const SpaceSpec& space, const Json& profile, std::optional<bool> symmetric) {
  const Json& kind_field = field(profile, "kind");
  if (!kind_field.is_string()) throw ParseError("profile kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  const int n = space.dim;
  if (kind == "grid") {
    only_keys(profile, {"kind", "nodes", "values"}, "grid profile");
    const Json& nodes = field(profile, "nodes");
    only_keys(nodes, {"rows", "cols"}, "grid nodes");
    GridInterpolated g;
    g.n = n;
    g.rows = integer(nodes, "rows");
    g.cols = integer(nodes, "cols");
    g.values = numbers(profile, "values");
    return make_grid_body(space, std::move(g), symmetric.value_or(false));
  }
  only_keys(profile, {"kind", "params"}, kind + " profile");
  const Json& p = field(profile, "params");
  auto keys = [&](std::initializer_list<const char*> allowed) { only_keys(p, allowed, kind + " params"); };
  auto claim = [&](StarBody body) {
    if (!symmetric || *symmetric == body.symmetric()) return body;
    if (*symmetric) throw PreconditionError(kind + " body is not origin-symmetric");
    return StarBody(body.space(), body.profile(), false);
  };

  if (kind == "ball") {
    keys({"r"});
    return claim(make_ball(space, number(p, "r")));
  }
  if (kind == "ellipsoid") {
    keys({"semiaxes", "rotation"});
    if (!space.euclidean()) throw ParseError("ellipsoid bodies live in R^n");
    const std::vector<double> axes = numbers(p, "semiaxes");
    if (static_cast<int>(axes.size()) != n) throw ParseError("ellipsoid needs one semiaxis per dimension");
    return claim(make_ellipsoid(axes, numbers_or_empty(p, "rotation")));
  }
  if (kind == "lune") {
    keys({"w", "axis"});
    if (!space.spherical() || n != 2) throw ParseError("lunes live in S^2_+");
    return claim(make_lune(number(p, "w"), direction_or(p, "axis", 2, 0)));
  }
  if (kind == "gnomonic") {
    keys({"semiaxes", "rotation", "slabs"});
    if (!space.spherical()) throw ParseError("gnomonic bodies live in S^n_+");
    std::vector<Slab> slabs;
    if (p.contains("slabs")) {
      for (const Json& s : array_field(p, "slabs")) {
        only_keys(s, {"normal", "h"}, "slab");
        slabs.push_back(Slab{direction(s, "normal", n), number(s, "h")});
      }
    }
    return claim(make_gnomonic(n, numbers_or_empty(p, "semiaxes"), numbers_or_empty(p, "rotation"), slabs));
  }
  if (kind == "bumps") {
    keys({"base", "mirrored", "bumps"});
    std::vector<Bump> bumps;
    if (p.contains("bumps")) {
      for (const Json& b : array_field(p, "bumps")) {
        only_keys(b, {"center", "amplitude", "concentration"}, "bump");
        bumps.push_back(Bump{direction(b, "center", n), number(b, "amplitude"), number_or(b, "concentration", 1.0)});
      }
    }
    return claim(make_bump_body(space, number(p, "base"), std::move(bumps), boolean_or(p, "mirrored", false)));
  }
  if (kind == "cone") {
    keys({"height", "zones"});
    std::vector<Zone> zones;
    for (const Json& z : array_field(p, "zones")) {
      only_keys(z, {"axis", "lo", "hi"}, "zone");
      zones.push_back(Zone{direction(z, "axis", n), number_or(z, "lo", -1.0), number_or(z, "hi", 1.0)});
    }
    const double height = space.spherical() ? number_or(p, "height", kHalfPi) : number(p, "height");
    return claim(make_cone_set(space, ConeBase(n, std::move(zones)), height));
  }
  if (kind == "perturbed") {
    keys({"r", "beta", "k", "axis", "alpha"});
    if (!space.spherical()) throw ParseError("perturbed balls live in S^n_+");
    return claim(make_perturbed_ball(n, number(p, "r"), number(p, "beta"), integer(p, "k"),
                                     direction_or(p, "axis", n, n - 1)));
  }
  throw ParseError("unknown body kind '" + kind + "'");
}

// Mini-language values: numbers, '/' lists of numbers, true/false.
Json spec_value(const std::string& key, const std::string& text) {
  auto parse_number = [&](const std::string& s) {
    double x = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last || s.empty()) {
      throw ParseError("parameter '" + key + "': '" + s + "' is not a number");
    }
    return x;
  };
  if (text == "true") return true;
  if (text == "false") return false;
  if (text.find('/') != std::string::npos) {
    Json list = Json::array();
    std::string::size_type start = 0;
    while (true) {
      const auto slash = text.find('/', start);
      list.push_back(parse_number(text.substr(start, slash - start)));
      if (slash == std::string::npos) break;
      start = slash + 1;
    }
    return list;
  }
  const double x = parse_number(text);
  if (text.find_first_of(".eE") == std::string::npos && std::abs(x) < 1e9) return static_cast<int>(x);
  return x;
}

bool is_list_key(const std::string& key) {
  return key == "semiaxes" || key == "rotation" || key == "axis" || key == "center" || key == "normal" ||
         key == "values";
}

}  // namespace

SpaceSpec parse_space(const std::string& label) {
  const auto colon = label.find(':');
  if (colon == std::string::npos) throw ParseError("space '" + label + "' must look like s+:2, h:3 or r:3");
  const std::string kind = label.substr(0, colon);
  const std::string dim_text = label.substr(colon + 1);
  int dim = 0;
  const auto [ptr, ec] = std::from_chars(dim_text.data(), dim_text.data() + dim_text.size(), dim);
  if (ec != std::errc() || ptr != dim_text.data() + dim_text.size() || dim_text.empty()) {
    throw ParseError("space '" + label + "': dimension '" + dim_text + "' is not an integer");
  }
  int delta = 0;
  if (kind == "s+" || kind == "s") {
    delta = 1;
  } else if (kind == "h") {
    delta = -1;
  } else if (kind == "r" || kind == "e") {
    delta = 0;
  } else {
    throw ParseError("space '" + label + "': unknown kind '" + kind + "' (use s+, h or r)");
  }
  if (dim < 2) throw ParseError("space '" + label + "': dimension must be >= 2");
  return SpaceSpec::make(delta, dim);
}

Json space_to_json(const SpaceSpec& space) { return {{"delta", space.delta()}, {"dim", space.dim}}; }

SpaceSpec space_from_json(const Json& j) {
  only_keys(j, {"delta", "dim"}, "space");
  const int delta = integer(j, "delta");
  const int dim = integer(j, "dim");
  if (delta < -1 || delta > 1) throw ParseError("space delta must be -1, 0 or 1");
  if (dim < 2) throw ParseError("space dim must be >= 2");
  return SpaceSpec::make(delta, dim);
}

Json body_to_json(const StarBody& body) {
  return {{"format_version", kFormatVersion},
          {"space", space_to_json(body.space())},
          {"profile", profile_json(body)},
          {"symmetric", body.symmetric()}};
}

StarBody body_from_json(const Json& j) {
  try {
    only_keys(j, {"format_version", "space", "profile", "symmetric"}, "body document");
    check_version(j);
    const SpaceSpec space = space_from_json(field(j, "space"));
    std::optional<bool> symmetric;
    if (j.contains("symmetric")) symmetric = boolean_or(j, "symmetric", false);
    return body_from_profile(space, field(j, "profile"), symmetric);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed body document: ") + e.what());
  }
}

Json body_spec_to_json(const std::string& spec, const SpaceSpec& space) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (kind.empty()) throw ParseError("body spec '" + spec + "' has no kind");
  Json params = Json::object();
  std::optional<bool> symmetric;
  if (colon != std::string::npos && colon + 1 < spec.size()) {
    std::stringstream items(spec.substr(colon + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError("body spec '" + spec + "': '" + item + "' must look like key=value");
      }
      const std::string key = item.substr(0, eq);
      Json value = spec_value(key, item.substr(eq + 1));
      if (is_list_key(key) && !value.is_array()) value = Json::array({value});
      if (key == "symmetric") {
        if (!value.is_boolean() && !(value.is_number_integer() && (value == 0 || value == 1))) {
          throw ParseError("parameter 'symmetric' must be 0/1 or true/false");
        }
        symmetric = value.is_boolean() ? value.get<bool>() : value.get<int>() == 1;
        continue;
      }
      if (params.contains(key)) throw ParseError("body spec '" + spec + "': parameter '" + key + "' repeated");
      params[key] = value;
    }
  }

  Json profile = {{"kind", kind}};
  if (kind == "grid") {
    const Json values = params.value("values", Json::array());
    const int rows = params.contains("rows") ? params["rows"].get<int>() : 1;
    if (rows <= 0) throw ParseError("parameter 'rows' must be positive");
    for (const auto& [key, v] : params.items()) {
      if (key != "values" && key != "rows") throw ParseError("unknown parameter '" + key + "' for grid");
    }
    profile["nodes"] = {{"rows", rows}, {"cols", static_cast<int>(values.size()) / rows}};
    profile["values"] = values;
  } else if (kind == "cone") {
    // A single zone, optionally mirrored through the origin.
    Json cone = Json::object();
    if (params.contains("height")) cone["height"] = params["height"];
    Json zone = {{"axis", params.value("axis", Json::array())},
                 {"lo", params.value("lo", Json(-1.0))},
                 {"hi", params.value("hi", Json(1.0))}};
    if (zone["axis"].empty()) {
      std::vector<double> e(static_cast<std::size_t>(space.dim), 0.0);
      e.back() = 1.0;
      zone["axis"] = e;
    }
    for (const auto& [key, v] : params.items()) {
      if (key != "height" && key != "axis" && key != "lo" && key != "hi" && key != "mirrored") {
        throw ParseError("unknown parameter '" + key + "' for cone");
      }
    }
    cone["zones"] = Json::array({zone});
    const bool mirrored = params.contains("mirrored") && (params["mirrored"] == true || params["mirrored"] == 1);
    if (mirrored) {
      Json minus = zone;
      for (auto& x : minus["axis"]) x = -x.get<double>();
      cone["zones"].push_back(minus);
    }
    profile["params"] = cone;
  } else if (kind == "bumps") {
    // Base radius plus at most one bump given by center/amplitude/concentration.
    Json b = Json::object();
    Json bump = Json::object();
    for (const auto& [key, v] : params.items()) {
      if (key == "base" || key == "mirrored") {
        b[key] = v;
      } else if (key == "center" || key == "amplitude" || key == "concentration") {
        bump[key] = v;
      } else {
        throw ParseError("unknown parameter '" + key + "' for bumps");
      }
    }
    b["bumps"] = bump.empty() ? Json::array() : Json::array({bump});
    profile["params"] = b;
  } else {
    profile["params"] = params;
  }

  Json doc = {{"format_version", kFormatVersion}, {"space", space_to_json(space)}, {"profile", profile}};
  if (symmetric) doc["symmetric"] = *symmetric;
  return doc;
}

StarBody parse_body_spec(const std::string& spec, const SpaceSpec& space) {
  return body_from_json(body_spec_to_json(spec, space));
}

Json report_to_json(const InequalityReport& r) {
  return {{"theorem_id", r.theorem_id},
          {"body", r.body},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"gap", r.gap},
          {"rel_gap", r.rel_gap},
          {"tolerance", r.tolerance},
          {"lhs_error", r.lhs_error},
          {"volume", r.volume},
          {"verdict", to_string(r.verdict)},
          {"quadrature",
           {{"outer_degree", r.quadrature.outer_degree},
            {"inner_degree", r.quadrature.inner_degree},
            {"radial_tol", r.quadrature.radial_tol}}},
          {"note", r.note}};
}

Json report_bundle(const std::string& theorem_id, const std::vector<InequalityReport>& reports) {
  int pass = 0, fail = 0, na = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    list.push_back(report_to_json(r));
    switch (r.verdict) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Fail: ++fail; break;
      case Verdict::NotApplicable: ++na; break;
    }
  }
  return {{"format_version", kFormatVersion},
          {"kind", "inequality-reports"},
          {"theorem_id", theorem_id},
          {"all_pass", suite_passed(reports)},
          {"counts", {{"pass", pass}, {"fail", fail}, {"not_applicable", na}}},
          {"reports", list}};
}

Json functional_report_to_json(const FunctionalReport& r) {
  Json out = {{"format_version", kFormatVersion},
              {"kind", "functional"},
              {"body", r.body},
              {"measure", r.measure},
              {"exponent", r.exponent},
              {"volume", {{"value", r.volume.value}, {"error", r.volume.error}}},
              {"functional", {{"value", r.functional.value}, {"error", r.functional.error}}}};
  if (!r.sections.empty()) {
    Json rows = Json::array();
    for (const auto& s : r.sections) {
      rows.push_back({{"direction", s.direction}, {"weight", s.weight}, {"section", s.section}});
    }
    out["sections"] = rows;
  }
  return out;
}

Json perturbation_to_json(const std::vector<PerturbationResult>& results) {
  Json list = Json::array();
  for (const auto& r : results) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"beta", s.beta},
                       {"delta_norm", s.delta_norm},
                       {"eps_norm", s.eps_norm},
                       {"lhs_K", s.lhs_K},
                       {"difference", s.difference},
                       {"error", s.error},
                       {"conclusive", s.conclusive},
                       {"ratio", s.ratio}});
    }
    list.push_back({{"n", r.n},
                    {"r", r.r},
                    {"k", r.k},
                    {"c5", r.c5},
                    {"lambda_k", r.lambda_k},
                    {"predicted_sign", r.predicted_sign},
                    {"observed_sign", r.observed_sign},
                    {"conclusive", r.conclusive},
                    {"sign_matches", r.sign_matches()},
                    {"predicted_ratio", r.predicted_ratio},
                    {"observed_ratio", r.observed_ratio},
                    {"beta", r.beta},
                    {"delta_norm", r.delta_norm},
                    {"eps_norm", r.eps_norm},
                    {"lhs_B", r.lhs_B},
                    {"lhs_K", r.lhs_K},
                    {"difference", r.difference},
                    {"steps", steps}});
  }
  return {{"format_version", kFormatVersion}, {"kind", "perturbation"}, {"results", list}};
}

Json sharpness_to_json(int n, double t, const std::vector<SharpnessRow>& rows) {
  Json list = Json::array();
  for (const auto& r : rows) {
    list.push_back({{"alpha", r.alpha},
                    {"eps", r.eps},
                    {"strips", r.strips},
                    {"pitch", r.pitch},
                    {"max_excess", r.max_excess},
                    {"volume", r.volume},
                    {"functional", r.functional},
                    {"error", r.error},
                    {"normalized", r.normalized},
                    {"bound", r.bound},
                    {"rel_excess", r.rel_excess}});
  }
  return {{"format_version", kFormatVersion}, {"kind", "sharpness"}, {"n", n}, {"t", t}, {"rows", list}};
}

Json search_to_json(const SearchTrace& trace) {
  const SearchSettings& s = trace.settings;
  Json steps = Json::array();
  for (const auto& st : trace.steps) {
    steps.push_back({{"iteration", st.iteration},
                     {"accepted", st.accepted},
                     {"objective", st.objective},
                     {"volume_drift", st.volume_drift},
                     {"step", st.step}});
  }
  return {{"format_version", kFormatVersion},
          {"kind", "search"},
          {"settings",
           {{"space", space_to_json(s.space)},
            {"convex", s.convex},
            {"symmetric", s.symmetric},
            {"sense", s.sense == SearchSense::Maximize ? "max" : "min"},
            {"budget", s.budget},
            {"seed", s.seed},
            {"nodes", s.nodes},
            {"step", s.step},
            {"start_noise", s.start_noise}}},
          {"target_volume", trace.target_volume},
          {"accepted", trace.accepted},
          {"max_drift", trace.max_drift},
          {"best_objective", trace.best_objective},
          {"best_body", body_to_json(grid_body(s.space, trace.best_profile, s.symmetric))},
          {"steps", steps}};
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string CsvTable::str() const {
  auto escape = [](const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += escape(cells[i]);
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

CsvTable reports_csv(const std::vector<InequalityReport>& reports) {
  CsvTable t;
  t.columns = {"theorem_id", "body", "lhs", "rhs", "gap", "rel_gap", "tolerance", "lhs_error", "volume", "verdict"};
  for (const auto& r : reports) {
    t.rows.push_back({r.theorem_id, r.body, csv_number(r.lhs), csv_number(r.rhs), csv_number(r.gap),
                      csv_number(r.rel_gap), csv_number(r.tolerance), csv_number(r.lhs_error),
                      csv_number(r.volume), to_string(r.verdict)});
  }
  return t;
}

CsvTable sections_csv(const std::vector<SectionSample>& sections) {
  CsvTable t;
  const std::size_t n = sections.empty() ? 0 : sections.front().direction.size();
  for (std::size_t i = 0; i < n; ++i) t.columns.push_back("xi" + std::to_string(i + 1));
  t.columns.push_back("weight");
  t.columns.push_back("section");
  for (const auto& s : sections) {
    std::vector<std::string> row;
    for (double x : s.direction) row.push_back(csv_number(x));
    row.push_back(csv_number(s.weight));
    row.push_back(csv_number(s.section));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable perturbation_csv(const std::vector<PerturbationResult>& results) {
  CsvTable t;
  t.columns = {"n",          "r",          "k",        "beta",           "delta_norm",     "eps_norm",
               "difference", "error",      "conclusive", "ratio",        "predicted_ratio", "c5",
               "lambda_k",   "predicted_sign", "observed_sign"};
  for (const auto& r : results) {
    for (const auto& s : r.steps) {
      const int observed = s.conclusive ? (s.difference > 0.0) - (s.difference < 0.0) : 0;
      t.rows.push_back({std::to_string(r.n), csv_number(r.r), std::to_string(r.k), csv_number(s.beta),
                        csv_number(s.delta_norm), csv_number(s.eps_norm), csv_number(s.difference),
                        csv_number(s.error), s.conclusive ? "1" : "0", csv_number(s.ratio),
                        csv_number(r.predicted_ratio), csv_number(r.c5), csv_number(r.lambda_k),
                        std::to_string(r.predicted_sign), std::to_string(observed)});
    }
  }
  return t;
}

CsvTable sharpness_csv(const std::vector<SharpnessRow>& rows) {
  CsvTable t;
  t.columns = {"alpha", "eps", "strips", "pitch", "max_excess", "volume", "functional", "error", "normalized",
               "bound", "rel_excess"};
  for (const auto& r : rows) {
    t.rows.push_back({csv_number(r.alpha), csv_number(r.eps), std::to_string(r.strips), csv_number(r.pitch),
                      csv_number(r.max_excess), csv_number(r.volume), csv_number(r.functional),
                      csv_number(r.error), csv_number(r.normalized), csv_number(r.bound),
                      csv_number(r.rel_excess)});
  }
  return t;
}

CsvTable search_csv(const SearchTrace& trace) {
  CsvTable t;
  t.columns = {"iteration", "accepted", "objective", "volume_drift", "step"};
  for (const auto& s : trace.steps) {
    t.rows.push_back({std::to_string(s.iteration), s.accepted ? "1" : "0", csv_number(s.objective),
                      csv_number(s.volume_drift), csv_number(s.step)});
  }
  return t;
}

}  // namespace busemann
