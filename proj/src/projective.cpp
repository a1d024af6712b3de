#include "cremona/projective.hpp"

#include <ostream>

namespace cremona {

Rational dot(const Vec3& a, const Vec3& b) {
  Rational s = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return s;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
          Rational(a[0] * b[1] - a[1] * b[0])};
}

bool is_zero(const Vec3& v) { return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]); }

Vec3 canonical(const Vec3& v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_zero(v[i])) {
      Rational s = v[i];
      return {Rational(v[0] / s), Rational(v[1] / s), Rational(v[2] / s)};
    }
  }
  return v;
}

std::array<Integer, 3> primitive_integers(const Vec3& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::array<Integer, 3> out;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 1;
  for (const auto& c : out) {
    if (c != 0) {
      sign = sgn(c);
      break;
    }
  }
  for (auto& c : out) c = c / g * sign;
  return out;
}

std::string to_string(const ProjPoint& p) {
  return "[" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + "]";
}

std::string line_to_string(const ProjLine& l) {
  return "(" + to_string(l[0]) + ")x+(" + to_string(l[1]) + ")y+(" + to_string(l[2]) + ")z";
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << to_string(p); }

bool incident(const ProjPoint& p, const ProjLine& l) { return is_zero(dot(p.coords(), l.coords())); }

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  Vec3 c = cross(l1.coords(), l2.coords());
  if (is_zero(c)) throw DomainError("coincident lines");
  return ProjPoint(c);
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  Vec3 c = cross(p.coords(), q.coords());
  if (is_zero(c)) throw DomainError("coincident points");
  return ProjLine(c);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return is_zero(dot(cross(p.coords(), q.coords()), r.coords()));
}

Projectivity::Projectivity() {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) rows_[i][j] = i == j ? 1 : 0;
  }
}

Projectivity::Projectivity(const std::array<Vec3, 3>& rows) : rows_(rows) {}

Projectivity Projectivity::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  std::array<Vec3, 3> rows;
  for (std::size_t i = 0; i < 3; ++i) rows[i] = {c0[i], c1[i], c2[i]};
  return Projectivity(rows);
}

Rational Projectivity::determinant() const { return dot(rows_[0], cross(rows_[1], rows_[2])); }

Projectivity Projectivity::inverse() const {
  Rational det = determinant();
  if (is_zero(det)) throw DomainError("singular projectivity");
  // Columns of the adjugate are cross products of rows.
  Vec3 c0 = cross(rows_[1], rows_[2]);
  Vec3 c1 = cross(rows_[2], rows_[0]);
  Vec3 c2 = cross(rows_[0], rows_[1]);
  std::array<Vec3, 3> inv;
  for (std::size_t i = 0; i < 3; ++i) {
    inv[i] = {Rational(c0[i] / det), Rational(c1[i] / det), Rational(c2[i] / det)};
  }
  return Projectivity(inv);
}

Projectivity Projectivity::operator*(const Projectivity& o) const {
  std::array<Vec3, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += rows_[i][k] * o.rows_[k][j];
      out[i][j] = s;
    }
  }
  return Projectivity(out);
}

Vec3 Projectivity::apply(const Vec3& v) const { return {dot(rows_[0], v), dot(rows_[1], v), dot(rows_[2], v)}; }

ProjLine Projectivity::apply(const ProjLine& l) const {
  Projectivity inv = inverse();
  Vec3 out;
  for (std::size_t j = 0; j < 3; ++j) {
    Rational s = 0;
    for (std::size_t k = 0; k < 3; ++k) s += l[k] * inv.rows_[k][j];
    out[j] = s;
  }
  return ProjLine(out);
}

ProjPoint other_point_on(const ProjLine& l, const ProjPoint& p) {
  const Vec3 probes[5] = {{Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(1)},
                          {Rational(1), Rational(1), Rational(1)},
                          {Rational(1), Rational(2), Rational(3)}};
  for (const auto& v : probes) {
    ProjLine m(v);
    if (m == l) continue;
    ProjPoint q = meet(l, m);
    if (!(q == p)) return q;
  }
  throw DomainError("other_point_on: no second point found");
}

std::vector<ProjPoint> points_on(const ProjLine& l, int count) {
  // Two distinct points of l, then a + k b for k = 1, 2, ...
  ProjPoint a = other_point_on(l, ProjPoint(Vec3{Rational(1), Rational(1), Rational(3)}));
  ProjPoint b = other_point_on(l, a);
  std::vector<ProjPoint> out{a};
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    Vec3 v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = a[i] + Rational(k) * b[i];
    out.emplace_back(v);
  }
  return out;
}

}  // namespace cremona
