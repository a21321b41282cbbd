#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "busemann/errors.hpp"
#include "busemann/experiments.hpp"
#include "busemann/parallel.hpp"
#include "busemann/random_bodies.hpp"
#include "busemann/search.hpp"
#include "busemann/serialize.hpp"
#include "busemann/verify.hpp"

namespace busemann::cli {

namespace {

// Usage problems surfaced after flag parsing (bad file names, missing sources).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

const char* sign_label(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

enum class OutFormat { None, Json, Csv };

OutFormat out_format(const std::string& path) {
  if (path.empty()) return OutFormat::None;
  auto ends_with = [&](const char* ext) {
    const std::string e(ext);
    return path.size() > e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0;
  };
  if (ends_with(".json")) return OutFormat::Json;
  if (ends_with(".csv")) return OutFormat::Csv;
  throw UsageError("--out: '" + path + "' must end in .json or .csv");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw UsageError("--out: write to '" + path + "' failed");
}

void emit(const std::string& path, const Json& json, const CsvTable& table) {
  switch (out_format(path)) {
    case OutFormat::Json: write_file(path, json.dump(2) + "\n"); break;
    case OutFormat::Csv: write_file(path, table.str()); break;
    case OutFormat::None: break;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("--body-file: cannot open '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError("--body-file '" + path + "': " + e.what());
  }
}

SpaceSpec space_flag(const std::string& label) {
  try {
    return parse_space(label);
  } catch (const Error& e) {
    throw ParseError(std::string("--space: ") + e.what());
  }
}

// An explicit --space must agree with the space recorded in a body document.
void check_file_space(const SpaceSpec& s, const StarBody& shape, const std::string& path) {
  if (s.label() != shape.space().label()) {
    throw UsageError("--space " + s.label() + " conflicts with '" + path + "', which is in " + shape.space().label());
  }
}

// Re-labels construction errors with the flag that supplied the body.
template <class F>
StarBody with_flag(const std::string& flag, F&& make) {
  try {
    return make();
  } catch (const ConvergenceError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(flag + ": " + e.what());
  }
}

struct Common {
  unsigned threads = 0;
  std::string out;

  void add(CLI::App* app) {
    app->add_option("--threads", threads, "Worker threads (default: BUSEMANN_THREADS or logical cores)")
        ->check(CLI::PositiveNumber);
    app->add_option("--out", out, "Write the result to a .json or .csv file");
  }
  void apply() const {
    if (threads > 0) set_thread_count(threads);
    out_format(out);  // reject a bad extension before any work
  }
};

struct Quadrature {
  int degree = 0;
  int inner_degree = 0;
  double rel_tol = 1e-10;

  void add(CLI::App* app) {
    app->add_option("--degree", degree, "Outer rule degree (0: raise until converged)")->check(CLI::NonNegativeNumber);
    app->add_option("--inner-degree", inner_degree, "Inner rule degree (0: automatic)")->check(CLI::NonNegativeNumber);
    app->add_option("--tol", rel_tol, "Relative tolerance of the automatic degree ladder")
        ->check(CLI::PositiveNumber);
  }
  FunctionalOptions options() const {
    FunctionalOptions o;
    o.outer_degree = degree;
    o.inner_degree = inner_degree;
    o.rel_tol = rel_tol;
    return o;
  }
};

RadialDensityMeasure measure_flag(const std::string& name) {
  if (name == "uniform") return RadialDensityMeasure::uniform();
  if (name == "gaussian") return RadialDensityMeasure::gaussian();
  throw ParseError("--measure: unknown measure '" + name + "' (uniform, gaussian)");
}

// ---- functional ----------------------------------------------------------

struct FunctionalCmd {
  Common common;
  Quadrature quad;
  std::string space = "s+:2";
  std::string body;
  std::string body_file;
  std::string measure = "uniform";
  int exponent = 0;
  int sections = -1;
  CLI::Option* space_opt = nullptr;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("functional", "Volume and section functional of one body");
    space_opt = c->add_option("--space", space, "Space: s+:n, h:n or r:n")->capture_default_str();
    auto* b = c->add_option("--body", body, "Body constructor, e.g. ball:r=0.7");
    auto* f = c->add_option("--body-file", body_file, "Body JSON document");
    b->excludes(f);
    c->add_option("--measure", measure, "uniform or gaussian")->capture_default_str();
    c->add_option("--exponent", exponent, "Power of the section volume (default n)")->check(CLI::PositiveNumber);
    c->add_option("--sections", sections, "Print the section table on a rule of this degree (0: default)")
        ->check(CLI::NonNegativeNumber);
    common.add(c);
    quad.add(c);
  }

  int run(std::ostream& out) {
    common.apply();
    const RadialDensityMeasure mu = measure_flag(measure);
    StarBody shape = load();
    FunctionalOptions o = quad.options();
    o.exponent = exponent;
    FunctionalReport report;
    report.body = body_to_json(shape);
    report.measure = measure;
    report.exponent = exponent > 0 ? exponent : shape.dim();
    report.volume = volume(shape, mu, o);
    report.functional = busemann_functional(shape, mu, o);
    if (sections >= 0) report.sections = section_table(shape, sections, mu);

    out << "space       " << shape.space().label() << "\n";
    out << "body        " << describe(shape) << "\n";
    out << "measure     " << measure << "\n";
    out << "volume      " << num(report.volume.value, 15) << "  +- " << num(report.volume.error, 3) << "\n";
    out << "functional  " << num(report.functional.value, 15) << "  +- " << num(report.functional.error, 3)
        << "  (exponent " << report.exponent << ")\n";
    if (!report.sections.empty()) out << "\n" << sections_csv(report.sections).str();

    CsvTable table;
    if (!report.sections.empty()) {
      table = sections_csv(report.sections);
    } else {
      table.columns = {"space", "body", "measure", "exponent", "volume", "volume_error", "functional",
                       "functional_error"};
      table.rows.push_back({shape.space().label(), describe(shape), measure, std::to_string(report.exponent),
                            csv_number(report.volume.value), csv_number(report.volume.error),
                            csv_number(report.functional.value), csv_number(report.functional.error)});
    }
    emit(common.out, functional_report_to_json(report), table);
    return kAllPass;
  }

  StarBody load() const {
    if (!body_file.empty()) {
      StarBody shape = with_flag("--body-file", [&] { return body_from_json(read_json_file(body_file)); });
      if (space_opt->count() > 0) check_file_space(space_flag(space), shape, body_file);
      return shape;
    }
    if (body.empty()) throw UsageError("functional: give --body or --body-file");
    const SpaceSpec s = space_flag(space);
    return with_flag("--body", [&] { return parse_body_spec(body, s); });
  }
};

// ---- verify --------------------------------------------------------------

SpaceSpec default_space(Theorem t, int dim) {
  switch (t) {
    case Theorem::BusemannEuclidean:
    case Theorem::Gaussian: return SpaceSpec::make(0, dim);
    case Theorem::Hyperbolic: return SpaceSpec::make(-1, dim);
    case Theorem::Min2d:
    case Theorem::ConeMax:
    case Theorem::LuneMax: return SpaceSpec::make(1, 2);
    default: return SpaceSpec::make(1, dim);
  }
}

BodyClass default_class(Theorem t) {
  switch (t) {
    case Theorem::LuneMax: return BodyClass::Convex;
    case Theorem::Min2d:
    case Theorem::ConeMax: return BodyClass::SymmetricStar;
    default: return BodyClass::Star;
  }
}

struct VerifyCmd {
  Common common;
  Quadrature quad;
  std::string theorem;
  std::string space;
  std::vector<std::string> bodies;
  std::vector<std::string> body_files;
  int random = 0;
  int dim = 0;
  std::uint64_t seed = 1;
  std::string body_class;
  std::optional<double> w;
  double rel_tol = 1e-9;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("verify", "Check a bound on given or random bodies; exit 0 iff all pass");
    std::string ids;
    for (int i = 0; i <= static_cast<int>(Theorem::Gaussian); ++i) {
      ids += (i ? "|" : "") + std::string(theorem_id(static_cast<Theorem>(i)));
    }
    c->add_option("--theorem", theorem, ids)->required();
    c->add_option("--space", space, "Space (default depends on the theorem)");
    c->add_option("--body", bodies, "Body constructor; repeatable");
    c->add_option("--body-file", body_files, "Body JSON document; repeatable");
    c->add_option("--random", random, "Number of random bodies")->check(CLI::NonNegativeNumber);
    c->add_option("--dim", dim, "Dimension when --space is not given")->check(CLI::Range(2, 64));
    c->add_option("--seed", seed, "Seed of the random bodies")->capture_default_str();
    c->add_option("--class", body_class, "Random class: star, sym-star, sym-convex, ellipsoid, sym-cone");
    c->add_option("--w", w, "Lune half-width; adds the lune of that width")->check(CLI::PositiveNumber);
    c->add_option("--rel-tol", rel_tol, "Relative slack of the verdict")->capture_default_str();
    common.add(c);
    quad.add(c);
  }

  int run(std::ostream& out) {
    common.apply();
    const auto t = parse_theorem(theorem);
    if (!t) throw ParseError("--theorem: unknown theorem '" + theorem + "'");
    const int n = dim > 0 ? dim : ((*t == Theorem::MinNd || *t == Theorem::SphericalConcave ||
                                    *t == Theorem::SphericalConcaveLiteral || *t == Theorem::SphericalPower)
                                       ? 3
                                       : 2);
    const SpaceSpec s = space.empty() ? default_space(*t, n) : space_flag(space);

    std::vector<StarBody> list;
    for (const auto& spec : bodies) list.push_back(with_flag("--body", [&] { return parse_body_spec(spec, s); }));
    for (const auto& path : body_files) {
      list.push_back(with_flag("--body-file", [&] { return body_from_json(read_json_file(path)); }));
      if (!space.empty()) check_file_space(s, list.back(), path);
    }
    if (w) list.push_back(with_flag("--w", [&] { return make_lune(*w, Direction::axis(2, 0)); }));
    if (random > 0) {
      const BodyClass cls = body_class.empty() ? default_class(*t) : parse_body_class(body_class);
      auto generated = random_bodies(cls, s, random, seed);
      std::move(generated.begin(), generated.end(), std::back_inserter(list));
    }
    if (list.empty()) throw UsageError("verify: give --body, --body-file, --w or --random");

    SuiteConfig config;
    config.functional = quad.options();
    config.rel_tol = rel_tol;
    const auto reports = run_theorem_suite(*t, list, config);

    int pass = 0, fail = 0, na = 0;
    for (const auto& r : reports) {
      out << to_string(r.verdict) << "  " << r.body;
      if (r.verdict == Verdict::NotApplicable) {
        out << "  (" << r.note << ")\n";
        ++na;
        continue;
      }
      out << "  lhs=" << num(r.lhs) << " rhs=" << num(r.rhs) << " rel_gap=" << num(r.rel_gap, 4)
          << " tol=" << num(r.tolerance, 3);
      if (!r.note.empty()) out << "  [" << r.note << "]";
      out << "\n";
      (r.verdict == Verdict::Pass ? pass : fail)++;
    }
    out << theorem << ": " << pass << " pass, " << fail << " fail, " << na << " not applicable\n";
    emit(common.out, report_bundle(theorem, reports), reports_csv(reports));
    if (fail > 0) return kViolation;
    if (na > 0) return kUsage;
    return kAllPass;
  }
};

// ---- experiment ----------------------------------------------------------

struct PerturbationCmd {
  Common common;
  Quadrature quad;
  int dim = 3;
  std::vector<double> radii{0.7853981633974483};
  std::vector<int> ks{2, 4};
  std::vector<double> betas;
  double threshold = 10.0;

  void add(CLI::App* parent) {
    auto* c = parent->add_subcommand("perturbation", "Sign of the change under zonal perturbations of a ball");
    c->add_option("--dim", dim, "Dimension n of S^n_+")->capture_default_str()->check(CLI::Range(3, 12));
    c->add_option("--r", radii, "Ball radii, comma separated")->delimiter(',');
    c->add_option("--k", ks, "Even harmonic degrees, comma separated")->delimiter(',');
    c->add_option("--beta", betas, "Decreasing amplitude schedule, comma separated")->delimiter(',');
    c->add_option("--threshold", threshold, "Conclusiveness factor on the error estimate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    common.add(c);
    quad.add(c);
  }

  int run(std::ostream& out) {
    common.apply();
    PerturbationOptions o;
    o.threshold = threshold;
    o.functional = quad.options();
    const std::vector<double> schedule = betas.empty() ? default_beta_schedule() : betas;
    std::vector<PerturbationResult> results;
    for (double r : radii) {
      for (int k : ks) results.push_back(perturbation_sign_experiment(dim, r, k, schedule, o));
    }
    bool all = true;
    for (const auto& res : results) all = all && res.sign_matches();
    if (common.out.empty()) {
      out << perturbation_csv(results).str();
    } else {
      for (const auto& res : results) {
        out << "r=" << num(res.r, 6) << " k=" << res.k << "  predicted " << sign_label(res.predicted_sign)
            << "  observed " << (res.conclusive ? sign_label(res.observed_sign) : "inconclusive")
            << "  ratio " << num(res.observed_ratio, 6) << " vs " << num(res.predicted_ratio, 6) << "\n";
      }
    }
    emit(common.out, perturbation_to_json(results), perturbation_csv(results));
    return all ? kAllPass : kViolation;
  }
};

struct SharpnessCmd {
  Common common;
  int dim = 3;
  double t = 0.5;
  std::vector<double> alphas;
  std::vector<double> epsilons;

  void add(CLI::App* parent) {
    auto* c = parent->add_subcommand("sharpness", "Striped cones approaching the minimum constant");
    c->add_option("--dim", dim, "Dimension n of S^n_+")->capture_default_str()->check(CLI::Range(3, 12));
    c->add_option("--t", t, "Volume fraction of S^n_+")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    c->add_option("--alpha", alphas, "Cap heights, comma separated")->delimiter(',');
    c->add_option("--eps", epsilons, "Section slack per row, comma separated")->delimiter(',');
    common.add(c);
  }

  int run(std::ostream& out) {
    common.apply();
    const auto a = alphas.empty() ? default_sharpness_alphas() : alphas;
    // Without --eps each row uses eps = alpha, as the default schedule does.
    const auto e = epsilons.empty() ? (alphas.empty() ? default_sharpness_epsilons() : alphas) : epsilons;
    const auto rows = sharpness_schedule(dim, t, a, e);
    out << sharpness_csv(rows).str();
    emit(common.out, sharpness_to_json(dim, t, rows), sharpness_csv(rows));
    // The schedule probes a lower bound; a row under it is a violation.
    for (const auto& r : rows) {
      if (r.functional < r.bound * std::pow(r.volume, dim) - 10.0 * r.error - 1e-9 * r.functional) {
        return kViolation;
      }
    }
    return kAllPass;
  }
};

struct SearchCmd {
  Common common;
  std::string space = "s+:2";
  std::string body_class = "sym-star";
  std::string sense = "max";
  std::uint64_t seed = 1;
  int budget = 300;
  int nodes = 48;
  std::optional<double> volume;

  void add(CLI::App* parent) {
    auto* c = parent->add_subcommand("search", "Volume-preserving local search over planar profiles");
    c->add_option("--space", space, "s+:2, h:2 or r:2")->capture_default_str();
    c->add_option("--class", body_class, "star, sym-star or sym-convex")->capture_default_str();
    c->add_option("--sense", sense, "max or min")->capture_default_str();
    c->add_option("--seed", seed)->capture_default_str();
    c->add_option("--budget", budget, "Proposed steps")->capture_default_str()->check(CLI::NonNegativeNumber);
    c->add_option("--nodes", nodes, "Profile grid size")->capture_default_str();
    c->add_option("--volume", volume, "Target volume (default: ball of radius 0.8)")->check(CLI::PositiveNumber);
    common.add(c);
  }

  int run(std::ostream& out) {
    common.apply();
    SearchSettings s;
    s.space = space_flag(space);
    const BodyClass cls = parse_body_class(body_class);
    if (cls != BodyClass::Star && cls != BodyClass::SymmetricStar && cls != BodyClass::Convex) {
      throw ParseError("--class: search runs over star, sym-star or sym-convex profiles");
    }
    s.symmetric = cls != BodyClass::Star;
    s.convex = cls == BodyClass::Convex;
    if (sense == "max") {
      s.sense = SearchSense::Maximize;
    } else if (sense == "min") {
      s.sense = SearchSense::Minimize;
    } else {
      throw ParseError("--sense: expected max or min, got '" + sense + "'");
    }
    s.seed = seed;
    s.budget = budget;
    s.nodes = nodes;
    s.volume = volume;
    const SearchTrace trace = extremizer_search(s);
    if (common.out.empty()) {
      out << search_csv(trace).str();
    } else {
      out << "target volume " << num(trace.target_volume) << ", accepted " << trace.accepted << "/" << budget
          << ", best " << num(trace.best_objective, 12) << ", max drift " << num(trace.max_drift, 3) << "\n";
    }
    emit(common.out, search_to_json(trace), search_csv(trace));
    return kAllPass;
  }
};

// ---- body ----------------------------------------------------------------

struct BodyCmd {
  std::string out_path;
  std::string space = "s+:2";
  std::string body;
  std::string body_class;
  std::uint64_t seed = 1;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("body", "Print the JSON document of a body");
    c->add_option("--space", space, "Space: s+:n, h:n or r:n")->capture_default_str();
    auto* b = c->add_option("--body", body, "Body constructor");
    auto* k = c->add_option("--class", body_class, "Draw a random body of this class instead");
    b->excludes(k);
    c->add_option("--seed", seed, "Seed for --class")->capture_default_str();
    c->add_option("--out", out_path, "Write the document to a .json file");
  }

  int run(std::ostream& out) {
    const SpaceSpec s = space_flag(space);
    StarBody shape = [&] {
      if (!body.empty()) return with_flag("--body", [&] { return parse_body_spec(body, s); });
      if (body_class.empty()) throw UsageError("body: give --body or --class");
      Rng rng(seed);
      return random_body(parse_body_class(body_class), s, rng);
    }();
    const std::string text = body_to_json(shape).dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      if (out_format(out_path) != OutFormat::Json) throw UsageError("--out: body documents are JSON");
      write_file(out_path, text);
    }
    return kAllPass;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sections of star bodies in constant-curvature spaces", "busemann"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "busemann 0.1.0");

  FunctionalCmd functional;
  VerifyCmd verify;
  BodyCmd body;
  PerturbationCmd perturbation;
  SharpnessCmd sharpness;
  SearchCmd search;
  functional.add(app);
  verify.add(app);
  body.add(app);
  auto* experiment = app.add_subcommand("experiment", "Perturbation, sharpness and search experiments");
  experiment->require_subcommand(1);
  perturbation.add(experiment);
  sharpness.add(experiment);
  search.add(experiment);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsage;
  }

  try {
    if (app.got_subcommand("functional")) return functional.run(out);
    if (app.got_subcommand("verify")) return verify.run(out);
    if (app.got_subcommand("body")) return body.run(out);
    if (experiment->got_subcommand("perturbation")) return perturbation.run(out);
    if (experiment->got_subcommand("sharpness")) return sharpness.run(out);
    if (experiment->got_subcommand("search")) return search.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Convergence:
      case ErrorKind::Resource: return kNumeric;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace busemann::cli
