#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

using Vec3 = std::array<Rational, 3>;

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

// Scales v so that its first nonzero coordinate is 1.
Vec3 canonical(const Vec3& v);

// Scales v to coprime integers with the first nonzero entry positive.
std::array<Integer, 3> primitive_integers(const Vec3& v);

// Homogeneous triple up to nonzero scale. The stored coordinates are always
// canonical, so == and < are projective.
template <typename Tag>
class ProjectiveTriple {
 public:
  ProjectiveTriple() : v_{Rational(0), Rational(0), Rational(1)} {}
  explicit ProjectiveTriple(const Vec3& v) {
    if (cremona::is_zero(v)) throw DomainError("zero vector is not a projective point/line");
    v_ = canonical(v);
  }
  ProjectiveTriple(const Rational& a, const Rational& b, const Rational& c) : ProjectiveTriple(Vec3{a, b, c}) {}

  const Vec3& coords() const { return v_; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const ProjectiveTriple& a, const ProjectiveTriple& b) { return a.v_ == b.v_; }
  friend bool operator<(const ProjectiveTriple& a, const ProjectiveTriple& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i];
    }
    return false;
  }

 private:
  Vec3 v_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = ProjectiveTriple<PointTag>;
// Dual coordinates: the line a x + b y + c z = 0.
using ProjLine = ProjectiveTriple<LineTag>;

std::string to_string(const ProjPoint& p);
std::string line_to_string(const ProjLine& l);
std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

bool incident(const ProjPoint& p, const ProjLine& l);

// Intersection of two distinct lines; throws DomainError("coincident lines").
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

// Line through two distinct points; throws DomainError("coincident points").
ProjLine join(const ProjPoint& p, const ProjPoint& q);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// 3x3 matrix acting on column vectors of point coordinates.
class Projectivity {
 public:
  Projectivity();  // identity
  explicit Projectivity(const std::array<Vec3, 3>& rows);

  // Matrix whose columns are the given vectors (p -> e1, q -> e2, r -> e3
  // under the inverse).
  static Projectivity from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  const std::array<Vec3, 3>& rows() const { return rows_; }
  Rational determinant() const;
  Projectivity inverse() const;  // throws DomainError when singular
  Projectivity operator*(const Projectivity& other) const;

  Vec3 apply(const Vec3& v) const;
  ProjPoint apply(const ProjPoint& p) const { return ProjPoint(apply(p.coords())); }
  // Image of a line under the point map: coefficients l * A^{-1}.
  ProjLine apply(const ProjLine& l) const;

 private:
  std::array<Vec3, 3> rows_;
};

// A point of l different from p (p need not lie on l).
ProjPoint other_point_on(const ProjLine& l, const ProjPoint& p);

// count distinct points of l with small coordinates.
std::vector<ProjPoint> points_on(const ProjLine& l, int count);

}  // namespace cremona
