#include <cmath>

#include "busemann/errors.hpp"
#include "busemann/random_bodies.hpp"
#include "busemann/serialize.hpp"
#include "doctest.h"

using namespace busemann;

namespace {

// Radii of two bodies agree on a few fixed directions.
void check_same_radii(const StarBody& a, const StarBody& b) {
  REQUIRE(a.dim() == b.dim());
  const int n = a.dim();
  for (int i = 0; i < 7; ++i) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = std::sin(1.3 * i + 0.7 * j + 0.1);
    const Direction u = Direction::normalized(v);
    CHECK(a.radius(u) == doctest::Approx(b.radius(u)).epsilon(1e-14));
  }
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("space labels") {
    CHECK(parse_space("s+:3").spherical());
    CHECK(parse_space("s:2").dim == 2);
    CHECK(parse_space("h:4").hyperbolic());
    CHECK(parse_space("e:2").euclidean());
    CHECK(parse_space("r:4").dim == 4);
    CHECK_THROWS_AS(parse_space("x:2"), ParseError);
    CHECK_THROWS_AS(parse_space("s+:two"), ParseError);
    const SpaceSpec s = space_from_json(space_to_json(SpaceSpec::make(-1, 5)));
    CHECK(s.hyperbolic());
    CHECK(s.dim == 5);
  }

  TEST_CASE("bodies round-trip through JSON") {
    std::vector<StarBody> bodies = {
        make_ball(SpaceSpec::make(1, 3), 0.7),
        make_ellipsoid({1.0, 2.0, 3.0}),
        make_lune(0.4, Direction::axis(2, 1)),
        make_complementary_cone(3, 0.3, Direction::axis(3, 0)),
        make_perturbed_ball(3, 0.8, 0.04, 4, Direction::axis(3, 2)),
    };
    for (BodyClass cls : {BodyClass::Star, BodyClass::SymmetricStar, BodyClass::Convex}) {
      for (auto& b : random_bodies(cls, SpaceSpec::make(1, 2), 3, 12)) bodies.push_back(b);
    }
    for (auto& b : random_bodies(BodyClass::Ellipsoid, SpaceSpec::make(0, 3), 2, 12)) bodies.push_back(b);
    for (auto& b : random_bodies(BodyClass::Cone, SpaceSpec::make(1, 3), 2, 12)) bodies.push_back(b);
    GridInterpolated g{2, 1, 5, {1.0, 1.2, 0.9, 1.1, 1.3}};
    bodies.push_back(make_grid_body(SpaceSpec::make(-1, 2), g, false));

    for (const StarBody& b : bodies) {
      const Json j = body_to_json(b);
      CAPTURE(j.dump());
      CHECK(j.at("format_version") == kFormatVersion);
      const StarBody back = body_from_json(Json::parse(j.dump()));
      CHECK(back.kind() == b.kind());
      CHECK(back.symmetric() == b.symmetric());
      check_same_radii(b, back);
      CHECK(body_to_json(back) == j);
    }
  }

  TEST_CASE("malformed documents are parse errors") {
    Json j = body_to_json(make_ball(SpaceSpec::make(1, 2), 0.5));
    Json typo = j;
    typo["profile"]["params"]["radius"] = 1.0;
    CHECK_THROWS_AS(body_from_json(typo), ParseError);
    Json version = j;
    version["format_version"] = 99;
    CHECK_THROWS_AS(body_from_json(version), ParseError);
    Json kind = j;
    kind["profile"]["kind"] = "blob";
    CHECK_THROWS_AS(body_from_json(kind), ParseError);
    Json type = j;
    type["profile"]["params"]["r"] = "wide";
    CHECK_THROWS_AS(body_from_json(type), ParseError);
    Json domain = j;
    domain["profile"]["params"]["r"] = -1.0;
    CHECK_THROWS_AS(body_from_json(domain), DomainError);
  }

  TEST_CASE("mini-language") {
    const auto s2 = SpaceSpec::make(1, 2);
    CHECK(parse_body_spec("ball:r=0.7", s2).radius_at_angle(1.0) == doctest::Approx(0.7));
    const StarBody e = parse_body_spec("ellipsoid:semiaxes=1/2/3", SpaceSpec::make(0, 3));
    CHECK(e.radius(Direction::axis(3, 2)) == doctest::Approx(3.0));
    const StarBody l = parse_body_spec("lune:w=0.3,axis=0/1", s2);
    CHECK(l.kind() == "lune");
    const StarBody c = parse_body_spec("cone:axis=1/0,lo=0.5,hi=1,mirrored=1", s2);
    CHECK(c.symmetric());
    CHECK(c.cone()->base.measure() == doctest::Approx(2 * 2 * std::acos(0.5)));
    const StarBody bump = parse_body_spec("bumps:base=0.6,center=1/0,amplitude=0.2,concentration=3,mirrored=1", s2);
    CHECK(bump.symmetric());
    const StarBody grid = parse_body_spec("grid:values=1/1.1/1/1.1,rows=1", SpaceSpec::make(0, 2));
    CHECK(grid.kind() == "grid");

    CHECK_THROWS_AS(parse_body_spec("ball", s2), ParseError);
    CHECK_THROWS_AS(parse_body_spec("ball:r", s2), ParseError);
    CHECK_THROWS_AS(parse_body_spec("ball:r=abc", s2), ParseError);
    CHECK_THROWS_AS(parse_body_spec("ball:q=0.3", s2), ParseError);
    CHECK_THROWS_AS(parse_body_spec("donut:r=1", s2), ParseError);
    CHECK_THROWS_AS(parse_body_spec("ball:r=0.4,symmetric=2", s2), ParseError);
  }

  TEST_CASE("report bundles") {
    InequalityReport a;
    a.theorem_id = "cone-max";
    a.body = "ball r=0.5";
    a.verdict = Verdict::Pass;
    InequalityReport b = a;
    b.verdict = Verdict::NotApplicable;
    const Json j = report_bundle("cone-max", {a, b});
    CHECK(j.at("kind") == "inequality-reports");
    CHECK(j.at("all_pass") == false);
    CHECK(j.at("counts").at("pass") == 1);
    CHECK(j.at("counts").at("not_applicable") == 1);
    CHECK(j.at("reports").size() == 2);
    CHECK(j.at("reports")[1].at("verdict") == "not-applicable");
  }

  TEST_CASE("CSV numbers and quoting") {
    CHECK(csv_number(0.5) == "0.5");
    CHECK(csv_number(1e-20) == "1e-20");
    CHECK(std::stod(csv_number(0.1 + 0.2)) == 0.1 + 0.2);
    CsvTable t{{"a", "b"}, {{"x,y", "say \"hi\""}, {"1", "line\nbreak"}}};
    CHECK(t.str() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,\"line\nbreak\"\n");
    InequalityReport r;
    r.theorem_id = "min-nd";
    r.body = "ball r=1";
    const CsvTable rc = reports_csv({r, r});
    CHECK(rc.rows.size() == 2);
    CHECK(rc.rows[0].size() == rc.columns.size());
  }
}
