#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cremona/hompoly.hpp"
#include "cremona/linalg.hpp"
#include "cremona/projective.hpp"

using namespace cremona;

namespace {

ProjPoint pt(long a, long b, long c) { return ProjPoint(Rational(a), Rational(b), Rational(c)); }
ProjLine ln(long a, long b, long c) { return ProjLine(Rational(a), Rational(b), Rational(c)); }

// mpq_class(a, b) is not reduced automatically.
Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

const HomPoly X = HomPoly::variable(0), Y = HomPoly::variable(1), Z = HomPoly::variable(2);

HomPoly random_form(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  HomPoly f(d);
  for (const auto& e : monomials_of_degree(d)) f += HomPoly::monomial(e, Rational(c(rng)));
  return f;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(parse_rational("+12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("incidence") {
  CHECK_FALSE(incident(pt(0, 0, 1), ln(0, 0, 1)));
  CHECK(incident(pt(1, 0, 0), ln(0, 0, 1)));
  CHECK(incident(pt(1, 1, 1), ln(1, 1, -2)));
}

TEST_CASE("meet and join") {
  CHECK(meet(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0, 1));
  CHECK(meet(ln(0, 0, 1), ln(1, 1, 1)) == pt(1, -1, 0));
  CHECK_THROWS_AS(meet(ln(1, 0, 0), ln(2, 0, 0)), DomainError);
  CHECK(join(pt(1, 0, 0), pt(0, 1, 0)) == ln(0, 0, 1));
  CHECK_THROWS_AS(join(pt(1, 2, 3), pt(2, 4, 6)), DomainError);
}

TEST_CASE("meet lies on both lines (random)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int i = 0; i < 200; ++i) {
    ProjLine a(Rational(c(rng)), Rational(c(rng)), Rational(c(rng) | 1));
    ProjLine b(Rational(c(rng) | 1), Rational(c(rng)), Rational(c(rng)));
    if (a == b) continue;
    ProjPoint p = meet(a, b);
    CHECK(incident(p, a));
    CHECK(incident(p, b));
  }
}

TEST_CASE("canonical form is scale invariant and idempotent") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-30, 30);
  for (int i = 0; i < 100; ++i) {
    Vec3 v{q(c(rng), 7), Rational(c(rng)), q(c(rng), 3)};
    if (is_zero(v)) continue;
    Rational lambda = q(c(rng) | 1, 11);
    Vec3 w{v[0] * lambda, v[1] * lambda, v[2] * lambda};
    CHECK(canonical(v) == canonical(w));
    CHECK(canonical(canonical(v)) == canonical(v));
    CHECK(ProjPoint(v) == ProjPoint(w));
  }
  CHECK_THROWS_AS(ProjPoint(Rational(0), Rational(0), Rational(0)), DomainError);
}

TEST_CASE("primitive integers") {
  auto p = primitive_integers({Rational(-1, 2), Rational(1, 3), Rational(0)});
  CHECK(p[0] == 3);
  CHECK(p[1] == -2);
  CHECK(p[2] == 0);
}

TEST_CASE("projectivity inverse and line action") {
  auto a = Projectivity::from_columns({Rational(1), Rational(2), Rational(0)}, {Rational(0), Rational(1), Rational(5)},
                                      {Rational(3), Rational(0), Rational(1)});
  auto prod = a * a.inverse();
  CHECK(prod.apply(pt(4, -1, 7)) == pt(4, -1, 7));
  ProjLine l = ln(2, -3, 1);
  ProjPoint p = pt(1, 1, 1);
  CHECK(incident(p, l));
  CHECK(incident(a.apply(p), a.apply(l)));
  auto sing = Projectivity::from_columns({Rational(1), Rational(0), Rational(0)}, {Rational(2), Rational(0), Rational(0)},
                                         {Rational(0), Rational(0), Rational(1)});
  CHECK_THROWS_AS(sing.inverse(), DomainError);
}

TEST_CASE("points on a line") {
  ProjLine l = ln(3, -7, 2);
  auto pts = points_on(l, 6);
  CHECK(pts.size() == 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(incident(pts[i], l));
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(pts[i] == pts[j]);
  }
  ProjPoint q = other_point_on(l, pts[0]);
  CHECK(incident(q, l));
  CHECK_FALSE(q == pts[0]);
}

TEST_CASE("substitute: standard quadratic pull-back of z") {
  CHECK(substitute(Z, {Y * Z, Z * X, X * Y}) == X * Y);
  CHECK_THROWS_AS(substitute(Z, {Y * Z, X, X * Y}), DomainError);
}

TEST_CASE("divide_out") {
  auto [q, k] = divide_out(X * X * Y, X);
  CHECK(q == Y);
  CHECK(k == 2);
  auto [q2, k2] = divide_out(X + Y, Z);
  CHECK(q2 == X + Y);
  CHECK(k2 == 0);
  CHECK_FALSE(exact_divide(X * X + Y * Y, X + Y).has_value());
}

TEST_CASE("substitute is multiplicative and divide_out reconstructs (random)") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    HomPoly f = random_form(2, rng), g = random_form(3, rng);
    std::array<HomPoly, 3> s{random_form(2, rng), random_form(2, rng), random_form(2, rng)};
    CHECK(substitute(f * g, s) == substitute(f, s) * substitute(g, s));
    HomPoly h = random_form(1, rng);
    if (h.is_zero() || g.is_zero()) continue;
    HomPoly prod = g * h.pow(3);
    auto [q, k] = divide_out(prod, h);
    CHECK(k >= 3);
    CHECK(q * h.pow(k) == prod);
  }
}

TEST_CASE("multiplicity and Hasse derivatives") {
  HomPoly f = X * X * Y + Y * Y * Y;  // triple point at [0:0:1]
  CHECK(f.multiplicity_at(pt(0, 0, 1)) == 3);
  CHECK(f.multiplicity_at(pt(1, 0, 0)) == 1);
  CHECK(f.multiplicity_at(pt(1, 1, 1)) == 0);
  CHECK(f.hasse_at({2, 1, 0}, pt(0, 0, 1).coords()) == 1);
  CHECK(HomPoly(4).multiplicity_at(pt(1, 2, 3)) == 5);
}

TEST_CASE("restriction coefficients and Taylor part") {
  // f = y^2 z - x^3 restricted to (0,0,1) + t (1, 1, 0): t^2 - t^3.
  HomPoly f = Y * Y * Z - X * X * X;
  auto r = restriction_coefficients(f, {Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(0)}, 4);
  CHECK(r == std::vector<Rational>{0, 0, 1, -1});
  CHECK(taylor_part(f, {Rational(0), Rational(0), Rational(1)}, 2) == Y * Y);
}

TEST_CASE("Jacobian of the standard quadratic map") {
  HomPoly j = jacobian_determinant({Y * Z, Z * X, X * Y});
  CHECK(j == X * Y * Z * Rational(2));
}

TEST_CASE("modular rank agrees with exact rank") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-5, 5);
  PrimeField f(random_prime_62(1));
  CHECK(is_prime_u64(f.modulus()));
  for (int t = 0; t < 20; ++t) {
    std::vector<QRow> q(6, QRow(7));
    for (auto& row : q) {
      for (auto& x : row) x = c(rng);
    }
    q[5] = q[0];
    for (std::size_t j = 0; j < 7; ++j) q[4][j] = q[1][j] * 2 - q[2][j];
    std::vector<ModRow> m;
    for (const auto& row : q) {
      ModRow r;
      for (const auto& x : row) r.push_back(*f.reduce(x));
      m.push_back(r);
    }
    auto prof = mod_rank_profile(m, 7, f);
    CHECK(prof.rank == exact_rank(q, 7));
    CHECK(prof.rank <= 4);
    auto ker = exact_kernel(q, 7);
    CHECK(ker.size() == 7 - exact_rank(q, 7));
    for (const auto& v : ker) {
      for (const auto& row : q) {
        Rational s = 0;
        for (std::size_t j = 0; j < 7; ++j) s += row[j] * v[j];
        CHECK(s == 0);
      }
    }
  }
}
