#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cremona/cremona_map.hpp"
#include "cremona/linalg.hpp"

using namespace cremona;

namespace {

ProjPoint pt(long a, long b, long c) { return ProjPoint(Rational(a), Rational(b), Rational(c)); }
ProjLine ln(long a, long b, long c) { return ProjLine(Rational(a), Rational(b), Rational(c)); }

const HomPoly X = HomPoly::variable(0), Y = HomPoly::variable(1), Z = HomPoly::variable(2);

ProjPoint random_point(std::mt19937_64& rng, long range = 15) {
  std::uniform_int_distribution<long> c(-range, range);
  for (;;) {
    long a = c(rng), b = c(rng), e = c(rng);
    if (a || b || e) return pt(a, b, e);
  }
}

ProjLine random_line(std::mt19937_64& rng, long range = 15) {
  std::uniform_int_distribution<long> c(-range, range);
  for (;;) {
    long a = c(rng), b = c(rng), e = c(rng);
    if (a || b || e) return ln(a, b, e);
  }
}

void check_homaloidal(const CremonaMap& m) {
  long s = 0, s2 = 0;
  for (const auto& b : m.base_points()) {
    s += b.multiplicity;
    s2 += static_cast<long>(b.multiplicity) * b.multiplicity;
  }
  const long n = m.degree();
  CHECK(s == 3 * (n - 1));
  CHECK(s2 == n * n - 1);
}

// n e - sum mu_i mult_i: the expected degree of the strict transform.
int expected_degree(const CremonaMap& m, const HomPoly& f) {
  int deg = m.degree() * f.degree();
  for (const auto& b : m.base_points()) deg -= b.multiplicity * multiplicity_at(f, b);
  return deg;
}

QRow coefficients(const HomPoly& f) {
  QRow r;
  for (const auto& e : monomials_of_degree(f.degree())) r.push_back(f.coefficient(e));
  return r;
}

}  // namespace

TEST_CASE("standard quadratic map at the coordinate points") {
  auto s = quadratic_map(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1));
  CHECK(s.degree() == 2);
  CHECK(s.homaloidal_type() == "(2;1^3)");
  check_homaloidal(s);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    ProjPoint p = random_point(rng);
    const auto& v = p.coords();
    if (v[0] == 0 || v[1] == 0 || v[2] == 0) continue;
    CHECK(s.apply(p) == ProjPoint(v[1] * v[2], v[2] * v[0], v[0] * v[1]));
  }
  for (auto b : {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}) {
    CHECK(s.is_base_point(b));
    CHECK_FALSE(s.apply(b).has_value());
  }
  CHECK(s.apply(pt(1, 1, 1)) == pt(1, 1, 1));
  CHECK_THROWS_AS(quadratic_map(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)), DomainError);
}

TEST_CASE("quadratic maps are involutions on lines") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    ProjPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
    if (collinear(p, q, r)) continue;
    auto m = quadratic_map(p, q, r);
    check_homaloidal(m);
    ProjLine l = random_line(rng);
    if (incident(p, l) || incident(q, l) || incident(r, l)) continue;
    auto once = apply_to_arrangement(m, LineArrangement({l}));
    REQUIRE(once.surviving.size() == 1);
    CHECK(once.surviving[0].component.degree() == 2);
    auto twice = push_forward(m, {once.surviving[0].component});
    REQUIRE(twice.surviving.size() == 1);
    auto back = twice.surviving[0].component.as_line();
    REQUIRE(back.has_value());
    CHECK(*back == l);
  }
}

TEST_CASE("push_forward examples under the standard map") {
  auto s = quadratic_map(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1));
  auto r = push_forward(s, {line_component(ln(0, 0, 1))});
  CHECK(r.surviving.empty());
  REQUIRE(r.contracted.size() == 1);
  CHECK(r.contracted[0].point == pt(0, 0, 1));

  r = push_forward(s, {line_component(ln(1, 1, 1))});
  REQUIRE(r.surviving.size() == 1);
  CHECK(r.surviving[0].component.degree() == 2);
  // x + y + z pulls back to yz + zx + xy.
  CHECK(r.surviving[0].component.equation.monic() == (Y * Z + Z * X + X * Y).monic());

  r = push_forward(s, {line_component(ln(0, 1, -1))});
  REQUIRE(r.surviving.size() == 1);
  CHECK(r.surviving[0].component.as_line() == ln(0, 1, -1));
}

TEST_CASE("triangle at its vertices collapses to three points") {
  auto s = quadratic_map(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1));
  LineArrangement tri({ln(1, 0, 0), ln(0, 1, 0), ln(0, 0, 1)});
  auto c = apply(s, PlaneCurve::from_arrangement(tri));
  CHECK(c.components.empty());
  CHECK(c.degree() == 0);
  REQUIRE(c.points.size() == 3);
  std::vector<ProjPoint> pts = c.points;
  std::sort(pts.begin(), pts.end());
  std::vector<ProjPoint> want{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
  std::sort(want.begin(), want.end());
  CHECK(pts == want);
}

TEST_CASE("pencil keeps its degree under a quadratic map at its center") {
  const int d = 6;
  std::vector<ProjLine> lines;
  for (long k = 1; k <= d; ++k) lines.push_back(ln(1, k, 0));  // through [0:0:1]
  LineArrangement pencil(lines);
  auto m = quadratic_map(pt(0, 0, 1), pt(1, 7, 2), pt(-3, 2, 5));
  auto c = apply(m, PlaneCurve::from_arrangement(pencil));
  CHECK(c.degree() == d);
  REQUIRE(c.all_lines());
  auto arr = c.as_arrangement();
  REQUIRE(arr.has_value());
  CHECK(type_of(*arr).to_string() == "(6;6)");
}

TEST_CASE("tangent quadratic map") {
  CHECK_THROWS_AS(quadratic_map_tangent(pt(0, 0, 1), ln(0, 1, 0), pt(1, 0, 0)), DomainError);  // r on dir
  CHECK_THROWS_AS(quadratic_map_tangent(pt(0, 0, 1), ln(0, 0, 1), pt(1, 0, 0)), DomainError);  // dir misses p
  auto m = quadratic_map_tangent(pt(0, 0, 1), ln(0, 1, 0), pt(0, 1, 0));
  CHECK(m.degree() == 2);
  check_homaloidal(m);
  // The forms span x^2, xy, yz.
  std::vector<QRow> rows{coefficients(X * X), coefficients(X * Y), coefficients(Y * Z)};
  for (const auto& f : m.forward()) rows.push_back(coefficients(f));
  CHECK(exact_rank(rows, 6) == 3);
  auto r = push_forward(m, {line_component(ln(1, 2, 3))});
  REQUIRE(r.surviving.size() == 1);
  CHECK(r.surviving[0].component.degree() == 2);
  // The tangent line itself is contracted.
  r = push_forward(m, {line_component(ln(0, 1, 0))});
  CHECK(r.surviving.empty());
  CHECK(r.contracted.size() == 1);
}

TEST_CASE("de Jonquieres maps") {
  CHECK_THROWS_AS(dejonquieres_map(pt(0, 0, 1), {}), DomainError);
  CHECK_THROWS_AS(dejonquieres_map(pt(0, 0, 1), {pt(1, 0, 0)}), DomainError);
  // n = 2 spans the same net as the quadratic map with the same base points.
  ProjPoint c = pt(0, 0, 1), q = pt(1, 2, 1), r = pt(3, -1, 1);
  auto dj = dejonquieres_map(c, {q, r});
  auto quad = quadratic_map(c, q, r);
  CHECK(dj.degree() == 2);
  std::vector<QRow> rows;
  for (const auto& f : dj.forward()) rows.push_back(coefficients(f));
  for (const auto& f : quad.forward()) rows.push_back(coefficients(f));
  CHECK(exact_rank(rows, 6) == 3);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    ProjLine l = random_line(rng);
    auto a = push_forward(dj, {line_component(l)});
    auto b = push_forward(quad, {line_component(l)});
    CHECK(a.surviving.size() == b.surviving.size());
    if (!a.surviving.empty()) CHECK(a.surviving[0].component.degree() == b.surviving[0].component.degree());
  }
  // n = 3: center of multiplicity 2 and four simple points.
  auto dj3 = dejonquieres_map(c, {pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 2), pt(2, -3, 1)});
  CHECK(dj3.degree() == 3);
  CHECK(dj3.homaloidal_type() == "(3;2,1^4)");
  check_homaloidal(dj3);
}

TEST_CASE("quartic homaloidal net") {
  std::vector<BasePoint> bps{{pt(1, 0, 0), 2, std::nullopt}, {pt(0, 1, 0), 2, std::nullopt}, {pt(0, 0, 1), 2, std::nullopt},
                             {pt(1, 1, 1), 1, std::nullopt}, {pt(1, 2, 3), 1, std::nullopt}, {pt(2, -1, 1), 1, std::nullopt}};
  auto m = homaloidal_net_map(4, bps);
  CHECK(m.degree() == 4);
  CHECK(m.homaloidal_type() == "(4;2^3,1^3)");
  check_homaloidal(m);
  auto r = push_forward(m, {line_component(ln(0, 0, 1))});  // through two double points
  CHECK(r.surviving.empty());
  r = push_forward(m, {line_component(ln(3, 5, -7))});
  REQUIRE(r.surviving.size() == 1);
  CHECK(r.surviving[0].component.degree() == 4);
}

TEST_CASE("degree formula holds on every pushed-forward line") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 15; ++t) {
    // Half the lines pass through a base point.
    ProjPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
    if (collinear(p, q, r)) continue;
    auto m = quadratic_map(p, q, r);
    std::vector<Component> comps;
    std::vector<ProjLine> lines;
    for (int k = 0; k < 4; ++k) {
      ProjLine l = k % 2 ? random_line(rng) : join(k == 0 ? p : q, random_point(rng));
      if (std::find(lines.begin(), lines.end(), l) != lines.end()) continue;
      lines.push_back(l);
      comps.push_back(line_component(l));
    }
    auto img = push_forward(m, comps);
    for (const auto& s : img.surviving) CHECK(s.component.degree() == expected_degree(m, comps[s.source].equation));
    for (const auto& c : img.contracted) CHECK(expected_degree(m, comps[c.source].equation) == 0);
    CHECK(img.surviving.size() + img.contracted.size() == comps.size());
  }
}

TEST_CASE("composition") {
  auto s = quadratic_map(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1));
  auto seq = compose({s, s});
  CHECK(seq.size() == 2);
  LineArrangement arr({ln(1, 2, 3), ln(3, -1, 4)});
  auto back = seq.apply(PlaneCurve::from_arrangement(arr));
  REQUIRE(back.as_arrangement().has_value());
  CHECK(type_of(*back.as_arrangement()) == type_of(arr));
  std::vector<ProjLine> got = back.as_arrangement()->lines(), want = arr.lines();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  auto id = compose({});
  CHECK(id.size() == 0);
  auto same = id.apply(PlaneCurve::from_arrangement(arr));
  CHECK(same.as_arrangement()->lines() == arr.lines());
}

TEST_CASE("tracked points at base points") {
  auto s = quadratic_map(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1));
  CHECK(s.apply_to_tracked(pt(1, 2, 3)) == s.apply(pt(1, 2, 3)));
  CHECK_FALSE(s.apply_to_tracked(pt(1, 0, 0)).has_value());
  PlaneCurve c;
  c.components.push_back(line_component(ln(1, 1, 1)));
  c.points.push_back(pt(0, 1, 0));
  CHECK_THROWS_WITH_AS(apply(s, c), doctest::Contains("resurrection"), DomainError);

  // At the double base point of a tangent map the first exceptional curve
  // is contracted; its image is a base point of the inverse.
  auto t = quadratic_map_tangent(pt(0, 0, 1), ln(0, 1, 0), pt(0, 1, 0));
  auto img = t.apply_to_tracked(pt(0, 0, 1));
  REQUIRE(img.has_value());
  for (const auto& g : t.inverse()) CHECK(g.eval(*img) == 0);
  CHECK_FALSE(t.apply_to_tracked(pt(0, 1, 0)).has_value());
}
