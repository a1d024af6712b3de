#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cremona/projective.hpp"

namespace cremona {

using Monomial = std::array<int, 3>;  // exponents of x, y, z

// Sparse homogeneous polynomial in x, y, z over Q. Every stored exponent
// triple sums to degree(); zero coefficients are never stored. The zero
// polynomial still carries a degree.
class HomPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit HomPoly(int degree = 0);
  HomPoly(int degree, Terms terms);

  static HomPoly constant(const Rational& c);
  static HomPoly monomial(const Monomial& e, const Rational& c = 1);
  static HomPoly variable(int i);
  static HomPoly linear(const Vec3& coeffs);
  static HomPoly linear(const ProjLine& l) { return linear(l.coords()); }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& e) const;

  // Leading term in lex order x > y > z. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

  // Scalar multiple with leading coefficient 1 (zero stays zero).
  HomPoly monic() const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Rational& c);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(HomPoly a, const Rational& c) { return a *= c; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  HomPoly pow(int k) const;
  Rational eval(const Vec3& p) const;
  Rational eval(const ProjPoint& p) const { return eval(p.coords()); }

  HomPoly derivative(int var) const;

  // Hasse derivative D^(i,j,k) evaluated at p: sum of c * C(a,i) C(b,j) C(c,k) p^(e - ijk).
  Rational hasse_at(const Monomial& order, const Vec3& p) const;

  // Largest mu such that every derivative of order < mu vanishes at p.
  // Returns degree()+1 for the zero polynomial.
  int multiplicity_at(const ProjPoint& p) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& e, const Rational& c);

  int degree_;
  Terms terms_;
};

// f(g1, g2, g3); the g's must share one degree. Throws DomainError otherwise.
HomPoly substitute(const HomPoly& f, const std::array<HomPoly, 3>& g);

// f(A x) for a projectivity A.
HomPoly pull_back(const HomPoly& f, const Projectivity& a);

// Exact quotient f / g when g divides f, otherwise nullopt. g must be nonzero.
std::optional<HomPoly> exact_divide(const HomPoly& f, const HomPoly& g);

// Largest k with g^k | f, and f / g^k. g must be nonconstant; f nonzero.
std::pair<HomPoly, int> divide_out(const HomPoly& f, const HomPoly& g);

// 3x3 Jacobian determinant of a triple of forms.
HomPoly jacobian_determinant(const std::array<HomPoly, 3>& g);

// Coefficients of t^0, ..., t^(count-1) in f(p + t q).
std::vector<Rational> restriction_coefficients(const HomPoly& f, const Vec3& p, const Vec3& q, int count);

// Degree-m part of f(p + v) as a form in v (the tangent cone when m is the
// multiplicity at p).
HomPoly taylor_part(const HomPoly& f, const Vec3& p, int m);

// Number of monomials of degree d in three variables.
inline long monomial_count(int d) { return d < 0 ? 0 : static_cast<long>(d + 1) * (d + 2) / 2; }

// All exponent triples of degree d, in lex-ascending order.
std::vector<Monomial> monomials_of_degree(int d);

}  // namespace cremona
