#include "cremona/hompoly.hpp"

#include <sstream>
#include <vector>

namespace cremona {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<Rational> powers(const Rational& base, int up_to) {
  std::vector<Rational> out(static_cast<std::size_t>(up_to) + 1);
  out[0] = 1;
  for (int i = 1; i <= up_to; ++i) out[i] = out[i - 1] * base;
  return out;
}

}  // namespace

HomPoly::HomPoly(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("negative polynomial degree");
}

HomPoly::HomPoly(int degree, Terms terms) : HomPoly(degree) {
  for (auto& [e, c] : terms) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree) {
      throw DomainError("exponent triple does not match polynomial degree");
    }
    if (!cremona::is_zero(c)) terms_.emplace(e, c);
  }
}

HomPoly HomPoly::constant(const Rational& c) {
  HomPoly p(0);
  p.add_term({0, 0, 0}, c);
  return p;
}

HomPoly HomPoly::monomial(const Monomial& e, const Rational& c) {
  HomPoly p(e[0] + e[1] + e[2]);
  p.add_term(e, c);
  return p;
}

HomPoly HomPoly::variable(int i) {
  Monomial e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

HomPoly HomPoly::linear(const Vec3& coeffs) {
  HomPoly p(1);
  p.add_term({1, 0, 0}, coeffs[0]);
  p.add_term({0, 1, 0}, coeffs[1]);
  p.add_term({0, 0, 1}, coeffs[2]);
  return p;
}

Rational HomPoly::coefficient(const Monomial& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly::add_term(const Monomial& e, const Rational& c) {
  if (cremona::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (cremona::is_zero(it->second)) terms_.erase(it);
  }
}

HomPoly HomPoly::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading().second;
  HomPoly out = *this;
  for (auto& [e, c] : out.terms_) c /= lc;
  return out;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw DomainError("adding forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw DomainError("subtracting forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& c) {
  if (cremona::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  HomPoly out(a.degree_ + b.degree_);
  Rational t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Monomial e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      t = ca * cb;
      out.add_term(e, t);
    }
  }
  return out;
}

HomPoly HomPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative power");
  HomPoly result = constant(1);
  HomPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational HomPoly::eval(const Vec3& p) const {
  std::array<std::vector<Rational>, 3> pw{powers(p[0], degree_), powers(p[1], degree_), powers(p[2], degree_)};
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  return s;
}

HomPoly HomPoly::derivative(int var) const {
  if (degree_ == 0) return HomPoly(0);
  HomPoly out(degree_ - 1);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Monomial f = e;
    f[static_cast<std::size_t>(var)] -= 1;
    out.add_term(f, Rational(c * k));
  }
  return out;
}

Rational HomPoly::hasse_at(const Monomial& order, const Vec3& p) const {
  std::array<std::vector<Rational>, 3> pw{powers(p[0], degree_), powers(p[1], degree_), powers(p[2], degree_)};
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    if (e[0] < order[0] || e[1] < order[1] || e[2] < order[2]) continue;
    Integer b = binomial(e[0], order[0]) * binomial(e[1], order[1]) * binomial(e[2], order[2]);
    s += c * b * pw[0][e[0] - order[0]] * pw[1][e[1] - order[1]] * pw[2][e[2] - order[2]];
  }
  return s;
}

int HomPoly::multiplicity_at(const ProjPoint& p) const {
  if (is_zero()) return degree_ + 1;
  for (int mu = 0; mu <= degree_; ++mu) {
    for (const auto& ord : monomials_of_degree(mu)) {
      if (!cremona::is_zero(hasse_at(ord, p.coords()))) return mu;
    }
  }
  return degree_ + 1;  // unreachable for nonzero forms
}

std::string HomPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << cremona::to_string(c) << ")";
    const char* names = "xyz";
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) out.push_back({a, b, d - a - b});
  }
  return out;
}

HomPoly substitute(const HomPoly& f, const std::array<HomPoly, 3>& g) {
  int n = g[0].degree();
  if (g[1].degree() != n || g[2].degree() != n) throw DomainError("substitute: mismatched degrees");
  int d = f.degree();
  std::array<std::vector<HomPoly>, 3> pw;
  for (std::size_t i = 0; i < 3; ++i) {
    pw[i].push_back(HomPoly::constant(1));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * g[i]);
  }
  HomPoly out(n * d);
  // Group by the x exponent to reuse the partial products.
  std::map<int, HomPoly> by_a;
  for (const auto& [e, c] : f.terms()) {
    HomPoly yz = pw[1][e[1]] * pw[2][e[2]];
    yz *= c;
    auto [it, inserted] = by_a.try_emplace(e[0], yz);
    if (!inserted) it->second += yz;
  }
  for (const auto& [a, rest] : by_a) out += pw[0][a] * rest;
  return out;
}

HomPoly pull_back(const HomPoly& f, const Projectivity& a) {
  const auto& r = a.rows();
  return substitute(f, {HomPoly::linear(r[0]), HomPoly::linear(r[1]), HomPoly::linear(r[2])});
}

std::optional<HomPoly> exact_divide(const HomPoly& f, const HomPoly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (f.is_zero()) return HomPoly(std::max(0, f.degree() - g.degree()));
  if (g.degree() > f.degree()) return std::nullopt;
  HomPoly q(f.degree() - g.degree());
  HomPoly r = f;
  const auto& [eg, cg] = g.leading();
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading();
    if (er[0] < eg[0] || er[1] < eg[1] || er[2] < eg[2]) return std::nullopt;
    HomPoly t = HomPoly::monomial({er[0] - eg[0], er[1] - eg[1], er[2] - eg[2]}, Rational(cr / cg));
    q += t;
    r -= t * g;
  }
  return q;
}

std::pair<HomPoly, int> divide_out(const HomPoly& f, const HomPoly& g) {
  if (g.degree() < 1) throw DomainError("divide_out requires a nonconstant divisor");
  if (f.is_zero()) throw DomainError("divide_out of the zero polynomial");
  HomPoly cur = f;
  int k = 0;
  while (cur.degree() >= g.degree()) {
    auto q = exact_divide(cur, g);
    if (!q) break;
    cur = std::move(*q);
    ++k;
  }
  return {cur, k};
}

HomPoly jacobian_determinant(const std::array<HomPoly, 3>& g) {
  std::array<std::array<HomPoly, 3>, 3> j;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) j[r][c] = g[r].derivative(static_cast<int>(c));
  }
  HomPoly det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]);
  det -= j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]);
  det += j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
  return det;
}

std::vector<Rational> restriction_coefficients(const HomPoly& f, const Vec3& p, const Vec3& q, int count) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(count, 0)), Rational(0));
  if (count <= 0) return out;
  for (const auto& [e, c] : f.terms()) {
    // Product over the variables of (p_i + t q_i)^{e_i}, truncated at t^count.
    std::vector<Rational> acc{c};
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Rational> factor;
      Integer b = 1;
      for (int s = 0; s <= std::min(e[i], count - 1); ++s) {
        if (s > 0) b = b * (e[i] - s + 1) / s;
        Rational v(b);
        for (int k = 0; k < s; ++k) v *= q[i];
        for (int k = 0; k < e[i] - s; ++k) v *= p[i];
        factor.push_back(v);
      }
      std::vector<Rational> next(std::min(acc.size() + factor.size() - 1, out.size()), Rational(0));
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (is_zero(acc[a])) continue;
        for (std::size_t k = 0; k < factor.size() && a + k < next.size(); ++k) next[a + k] += acc[a] * factor[k];
      }
      acc = std::move(next);
    }
    for (std::size_t s = 0; s < acc.size(); ++s) out[s] += acc[s];
  }
  return out;
}

HomPoly taylor_part(const HomPoly& f, const Vec3& p, int m) {
  HomPoly::Terms terms;
  for (const auto& o : monomials_of_degree(m)) {
    Rational c = f.hasse_at(o, p);
    if (!is_zero(c)) terms.emplace(o, c);
  }
  return HomPoly(m, std::move(terms));
}

}  // namespace cremona
