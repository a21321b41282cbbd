#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using busemann::cli::run;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "busemann-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"verify", "--theorem", "no-such-bound"}).code == 2);
    CHECK(call({"functional", "--space", "q:3", "--body", "ball:r=1"}).code == 2);
    const Result bad = call({"functional", "--body", "ball:r=oops"});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "--body"));
    CHECK(call({"functional", "--body", "ball:r=0.5", "--out", "result.txt"}).code == 2);
    CHECK(call({"functional", "--body", "ball:r=0.5", "--body-file", "x.json"}).code == 2);
  }

  TEST_CASE("help exits 0") {
    const Result r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "verify"));
  }

  TEST_CASE("domain violations exit 2") {
    CHECK(call({"functional", "--space", "s+:2", "--body", "ball:r=2"}).code == 2);
    CHECK(call({"functional", "--space", "s+:2", "--body", "ellipsoid:semiaxes=1/2"}).code == 2);
  }

  TEST_CASE("functional prints volume and functional") {
    const Result r = call({"functional", "--space", "s+:2", "--body", "ball:r=0.7"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "volume      1.4775401137"));
    CHECK(has(r.out, "functional  12.31504320"));
  }

  TEST_CASE("functional JSON and CSV outputs") {
    const fs::path json = scratch("functional.json");
    REQUIRE(call({"functional", "--space", "h:3", "--body", "ball:r=1", "--sections", "5", "--out", json.string()})
                .code == 0);
    const auto j = read_json(json);
    CHECK(j.at("kind") == "functional");
    CHECK(j.at("volume").at("value").get<double>() == doctest::Approx(3.14159265358979 * (std::sinh(2.0) - 2.0)));
    CHECK_FALSE(j.at("sections").empty());

    const fs::path csv = scratch("functional.csv");
    REQUIRE(call({"functional", "--space", "r:3", "--body", "ball:r=1", "--sections", "5", "--out", csv.string()})
                .code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(has(header, "section"));
  }

  TEST_CASE("body documents feed back into functional") {
    const fs::path doc = scratch("body.json");
    REQUIRE(call({"body", "--space", "s+:3", "--class", "star", "--seed", "3", "--out", doc.string()}).code == 0);
    const Result r = call({"functional", "--space", "s+:3", "--body-file", doc.string()});
    CHECK(r.code == 0);
    CHECK(call({"functional", "--body-file", doc.string()}).code == 0);
    const Result clash = call({"functional", "--space", "h:3", "--body-file", doc.string()});
    CHECK(clash.code == 2);
    CHECK(has(clash.err, "--space"));
    CHECK(call({"verify", "--theorem", "min-nd", "--space", "s+:2", "--body-file", doc.string()}).code == 2);
    const Result printed = call({"body", "--space", "r:2", "--body", "ellipsoid:semiaxes=1/2"});
    CHECK(printed.code == 0);
    CHECK(nlohmann::json::parse(printed.out).at("profile").at("kind") == "ellipsoid");

    const fs::path broken = scratch("broken.json");
    std::ofstream(broken) << "{\"format_version\": 1, \"space\": {";
    CHECK(call({"functional", "--body-file", broken.string()}).code == 2);
    CHECK(call({"functional", "--body-file", scratch("missing.json").string()}).code == 2);
  }

  TEST_CASE("verify passes and reports") {
    const Result r = call({"verify", "--theorem", "lune-max", "--w", "0.3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "pass"));
    const Result suite = call({"verify", "--theorem", "min-nd", "--random", "4", "--seed", "2"});
    CHECK(suite.code == 0);
    CHECK(has(suite.out, "min-nd: 4 pass, 0 fail, 0 not applicable"));
    const fs::path json = scratch("verify.json");
    REQUIRE(call({"verify", "--theorem", "busemann-euclidean", "--random", "3", "--class", "ellipsoid", "--out",
                  json.string()})
                .code == 0);
    const auto j = read_json(json);
    CHECK(j.at("kind") == "inequality-reports");
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("reports").size() == 3);
  }

  TEST_CASE("inapplicable bodies exit 2") {
    const Result r = call({"verify", "--theorem", "cone-max", "--body", "bumps:base=0.8,center=1/0,amplitude=0.3"});
    CHECK(r.code == 2);
    CHECK(has(r.out, "not-applicable"));
    CHECK(call({"verify", "--theorem", "busemann-euclidean", "--space", "s+:2", "--body", "ball:r=0.5"}).code == 2);
  }

  TEST_CASE("numbered theorem ids are rejected") {
    CHECK(call({"verify", "--theorem", "3.1", "--random", "1"}).code == 2);
  }

  TEST_CASE("perturbation experiment") {
    const Result r = call({"experiment", "perturbation", "--k", "2,4"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "predicted_sign"));
    const fs::path json = scratch("perturbation.json");
    REQUIRE(call({"experiment", "perturbation", "--k", "2", "--out", json.string()}).code == 0);
    const auto j = read_json(json);
    CHECK(j.at("kind") == "perturbation");
    CHECK(j.at("results")[0].at("predicted_sign") == 1);
    CHECK(call({"experiment", "perturbation", "--k", "3"}).code == 2);
  }

  TEST_CASE("sharpness experiment with one row") {
    const Result r = call({"experiment", "sharpness", "--alpha", "0.3", "--eps", "0.3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "rel_excess"));
    CHECK(call({"experiment", "sharpness", "--alpha", "0.3,0.2", "--eps", "0.3"}).code == 2);
  }

  TEST_CASE("search experiment") {
    const fs::path json = scratch("search.json");
    const Result r = call({"experiment", "search", "--budget", "30", "--nodes", "16", "--out", json.string()});
    CHECK(r.code == 0);
    const auto j = read_json(json);
    CHECK(j.at("kind") == "search");
    CHECK(j.at("steps").size() == 30);
    CHECK(call({"experiment", "search", "--space", "s+:3"}).code == 2);
  }
}
