#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/serialize.hpp"

using namespace cremona;

namespace {

ProjPoint pt(long a, long b, long c) { return ProjPoint(Rational(a), Rational(b), Rational(c)); }

}  // namespace

TEST_CASE("rationals and points") {
  CHECK(to_json(Rational(-3, 2)) == "-3/2");
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
  ProjPoint p = pt(2, -4, 6);
  CHECK(point_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(point_from_json(Json::array({"0", "0", "0"})), ParseError);
  CHECK_THROWS_AS(point_from_json(Json::array({"1", "2"})), ParseError);
}

TEST_CASE("polynomials round trip") {
  HomPoly x = HomPoly::variable(0), y = HomPoly::variable(1), z = HomPoly::variable(2);
  HomPoly f = x * x * y * Rational(-7, 3) + z * z * z + x * y * z;
  CHECK(poly_from_json(to_json(f)) == f);
  Json bad = to_json(f);
  bad["degree"] = 4;
  CHECK_THROWS_AS(poly_from_json(bad), ParseError);
}

TEST_CASE("arrangements round trip") {
  for (Family f : classified_families()) {
    auto arr = realize(f, 9, 2);
    auto back = arrangement_from_json(Json::parse(to_json(arr).dump()));
    CHECK(back.lines() == arr.lines());
  }
  Json j = to_json(realize(Family::Triangle, 6, 1));
  j["d"] = 7;
  CHECK_THROWS_AS(arrangement_from_json(j), ParseError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"lines": []})")), ParseError);
}

TEST_CASE("maps round trip and are re-verified") {
  auto m = quadratic_map_tangent(pt(0, 0, 1), ProjLine(Rational(0), Rational(1), Rational(0)), pt(2, 1, 5));
  auto back = map_from_json(Json::parse(to_json(m).dump()));
  CHECK(back.forward() == m.forward());
  CHECK(back.inverse() == m.inverse());
  CHECK(back.base_points() == m.base_points());
  CHECK(back.homaloidal_type() == m.homaloidal_type());

  // A broken inverse is rejected on load.
  Json j = to_json(m);
  j["inverse"][0] = to_json(HomPoly::variable(0) * HomPoly::variable(0));
  CHECK_THROWS(map_from_json(j));
}

TEST_CASE("certificates round trip and still replay") {
  auto cert = contract(realize(Family::TwoGeneral, 6, 1), 1);
  Json j = to_json(cert);
  auto back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.steps.size() == cert.steps.size());
  CHECK(back.terminal == cert.terminal);
  CHECK(verify_certificate(back).valid);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("classification JSON is deterministic") {
  ClassifyOptions o;
  o.kodaira_bound = 3;
  auto a = to_json(classify(realize(Family::Triangle, 12, 1), o)).dump();
  auto b = to_json(classify(realize(Family::Triangle, 12, 1), o)).dump();
  CHECK(a == b);
  Json j = Json::parse(a);
  for (const char* key : {"type", "config", "family", "adjoints", "vanishing_adjoints", "kodaira", "contractible",
                          "verdict", "reason", "witness"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["vanishing_adjoints"] == true);
  CHECK(j["contractible"] == false);
}
