#include "cremona/cremona_map.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cremona/linalg.hpp"
#include "cremona/linear_system.hpp"

namespace cremona {

namespace {

const Vec3 kBasis[3] = {{Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)},
                        {Rational(0), Rational(0), Rational(1)}};

// x -> A g(A^{-1} x).
std::array<HomPoly, 3> conjugate(const std::array<HomPoly, 3>& g, const Projectivity& a, const Projectivity& ainv) {
  std::array<HomPoly, 3> pulled;
  for (std::size_t j = 0; j < 3; ++j) pulled[j] = pull_back(g[j], ainv);
  std::array<HomPoly, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    HomPoly acc(g[0].degree());
    for (std::size_t j = 0; j < 3; ++j) {
      if (!is_zero(a.rows()[i][j])) acc += pulled[j] * a.rows()[i][j];
    }
    out[i] = acc;
  }
  return out;
}

// Completes the given independent vectors to a basis with coordinate
// vectors.
std::vector<Vec3> complete_basis(std::vector<Vec3> v) {
  for (const auto& e : kBasis) {
    if (v.size() == 3) break;
    std::vector<Vec3> t = v;
    t.push_back(e);
    bool ok = t.size() == 1 || (t.size() == 2 && !is_zero(cross(t[0], t[1]))) ||
              (t.size() == 3 && !is_zero(dot(cross(t[0], t[1]), t[2])));
    if (ok) v = t;
  }
  return v;
}

HomPoly line_poly(const ProjLine& l) { return HomPoly::linear(l).monic(); }

std::optional<ProjPoint> eval_map(const std::array<HomPoly, 3>& g, const ProjPoint& p) {
  Vec3 v{g[0].eval(p), g[1].eval(p), g[2].eval(p)};
  if (is_zero(v)) return std::nullopt;
  return ProjPoint(v);
}

// The forms of a map scaled by one common factor to integer coefficients,
// for fast evaluation at integer points.
Integer common_denominator(const std::array<HomPoly, 3>& g) {
  Integer l = 1;
  for (const auto& f : g) {
    for (const auto& [e, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

struct IntegerForm {
  int degree = 0;
  std::vector<std::pair<Monomial, Integer>> terms;

  IntegerForm(const HomPoly& f, const Integer& l) : degree(f.degree()) {
    for (const auto& [e, c] : f.terms()) {
      Rational s = c * l;
      terms.emplace_back(e, s.get_num());
    }
  }

  Integer eval(const std::array<Integer, 3>& p) const {
    std::array<std::vector<Integer>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) {
      pw[i].resize(static_cast<std::size_t>(degree) + 1);
      pw[i][0] = 1;
      for (int k = 1; k <= degree; ++k) pw[i][k] = pw[i][k - 1] * p[i];
    }
    Integer s = 0, t;
    for (const auto& [e, c] : terms) {
      t = c * pw[0][e[0]];
      t *= pw[1][e[1]];
      t *= pw[2][e[2]];
      s += t;
    }
    return s;
  }
};

// Right kernel of an exact matrix given as rows; columns are unknowns.
std::vector<QRow> kernel_of(const std::vector<QRow>& rows, std::size_t ncols) { return exact_kernel(rows, ncols); }

HomPoly poly_from_vector(int degree, const std::vector<Monomial>& mons, const QRow& v, std::size_t offset) {
  HomPoly::Terms t;
  for (std::size_t j = 0; j < mons.size(); ++j) {
    if (!is_zero(v[offset + j])) t.emplace(mons[j], v[offset + j]);
  }
  return HomPoly(degree, std::move(t));
}

// Curve of the given degree through the points; must be unique.
HomPoly interpolate_curve(int degree, const std::vector<Vec3>& pts) {
  auto mons = monomials_of_degree(degree);
  std::vector<QRow> rows;
  for (const auto& p : pts) {
    QRow r;
    for (const auto& e : mons) r.push_back(HomPoly::monomial(e).eval(p));
    rows.push_back(std::move(r));
  }
  auto k = kernel_of(rows, mons.size());
  if (k.size() != 1) throw DomainError("interpolation of an exceptional curve is not unique");
  return poly_from_vector(degree, mons, k[0], 0).monic();
}

}  // namespace

CremonaMap::CremonaMap(std::array<HomPoly, 3> forward, std::array<HomPoly, 3> inverse,
                       std::vector<BasePoint> base_points, std::vector<HomPoly> exceptional_curves, std::string kind)
    : forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      base_points_(std::move(base_points)),
      exceptional_(std::move(exceptional_curves)),
      kind_(std::move(kind)) {
  const int n = forward_[0].degree();
  if (n < 1) throw DomainError("Cremona map of degree < 1");
  for (std::size_t i = 0; i < 3; ++i) {
    if (forward_[i].degree() != n || inverse_[i].degree() != n) throw DomainError("Cremona map forms of mixed degree");
  }
  long s1 = 0, s2 = 0;
  for (const auto& b : base_points_) {
    if (b.multiplicity < 1) throw DomainError("base point multiplicity must be positive");
    s1 += b.multiplicity;
    s2 += static_cast<long>(b.multiplicity) * b.multiplicity;
  }
  if (s2 != static_cast<long>(n) * n - 1 || s1 != 3L * n - 3) {
    throw DomainError("base points violate the homaloidal identities for degree " + std::to_string(n));
  }
  for (const auto& b : base_points_) {
    if (!b.direction) {
      for (const auto& f : forward_) {
        if (f.multiplicity_at(b.point) < b.multiplicity) throw DomainError("forward forms miss a base point");
      }
    } else {
      if (!incident(b.point, *b.direction)) throw DomainError("infinitely near direction must pass through its point");
      int proper = 0;
      for (const auto& o : base_points_) {
        if (!o.direction && o.point == b.point) proper = o.multiplicity;
      }
      Vec3 q = other_point_on(*b.direction, b.point).coords();
      for (const auto& f : forward_) {
        auto r = restriction_coefficients(f, b.point.coords(), q, proper + b.multiplicity);
        for (const auto& c : r) {
          if (!is_zero(c)) throw DomainError("forward forms miss an infinitely near base point");
        }
      }
    }
  }
  // inverse(forward(x)) must be proportional to x. Each identity
  // psi_i(phi) x_k - psi_k(phi) x_i = 0 is a form of degree n^2 + 1, so it
  // holds identically iff it vanishes on an (n^2+2) x (n^2+2) grid in the
  // chart z = 1.
  const int side = n * n + 2;
  const Integer lf = common_denominator(forward_), li = common_denominator(inverse_);
  std::array<IntegerForm, 3> fw{IntegerForm(forward_[0], lf), IntegerForm(forward_[1], lf), IntegerForm(forward_[2], lf)};
  std::array<IntegerForm, 3> iv{IntegerForm(inverse_[0], li), IntegerForm(inverse_[1], li), IntegerForm(inverse_[2], li)};
  bool nontrivial = false;
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      std::array<Integer, 3> x{Integer(a), Integer(b), Integer(1)};
      std::array<Integer, 3> y{fw[0].eval(x), fw[1].eval(x), fw[2].eval(x)};
      std::array<Integer, 3> v{iv[0].eval(y), iv[1].eval(y), iv[2].eval(y)};
      if (v[0] != 0 || v[1] != 0 || v[2] != 0) nontrivial = true;
      if (v[0] * x[1] != v[1] * x[0] || v[0] * x[2] != v[2] * x[0] || v[1] * x[2] != v[2] * x[1]) {
        throw DomainError("inverse does not invert the forward map");
      }
    }
  }
  if (!nontrivial) throw DomainError("inverse composes to zero");
  HomPoly jac = jacobian_determinant(inverse_);
  for (const auto& e : exceptional_) {
    if (e.degree() < 1) throw DomainError("constant exceptional curve");
    if (!exact_divide(jac, e)) throw DomainError("exceptional curve does not divide the Jacobian");
  }
}

std::string CremonaMap::homaloidal_type() const {
  SystemType t;
  t.degree = degree();
  for (const auto& b : base_points_) t.mults.push_back(b.multiplicity);
  std::sort(t.mults.rbegin(), t.mults.rend());
  return t.to_string();
}

bool CremonaMap::is_base_point(const ProjPoint& p) const { return !eval_map(forward_, p).has_value(); }

std::optional<ProjPoint> CremonaMap::apply(const ProjPoint& p) const { return eval_map(forward_, p); }

std::optional<ProjPoint> CremonaMap::apply_to_tracked(const ProjPoint& p) const {
  if (auto q = apply(p)) return q;
  int proper = 0, above = 0;
  std::vector<ProjLine> dirs;
  for (const auto& b : base_points_) {
    if (!(b.point == p)) continue;
    if (b.direction) {
      above += b.multiplicity;
      dirs.push_back(*b.direction);
    } else {
      proper += b.multiplicity;
    }
  }
  if (proper == 0 || above != proper) return std::nullopt;
  // Limit of phi(p + t w) for directions w off the infinitely near ones;
  // two directions must agree.
  const Vec3 probes[4] = {{Rational(1), Rational(2), Rational(5)},
                          {Rational(3), Rational(-1), Rational(2)},
                          {Rational(-2), Rational(7), Rational(1)},
                          {Rational(5), Rational(3), Rational(-4)}};
  std::optional<ProjPoint> found;
  int agreeing = 0;
  for (const auto& w : probes) {
    ProjPoint wp(w);
    if (wp == p) continue;
    bool along = false;
    for (const auto& d : dirs) along = along || incident(wp, d);
    if (along) continue;
    std::array<std::vector<Rational>, 3> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = restriction_coefficients(forward_[i], p.coords(), w, degree() + 1);
    std::optional<ProjPoint> lim;
    for (int s = 0; s <= degree() && !lim; ++s) {
      Vec3 v{r[0][s], r[1][s], r[2][s]};
      if (!is_zero(v)) lim = ProjPoint(v);
    }
    if (!lim) continue;
    if (found && !(*found == *lim)) return std::nullopt;
    found = lim;
    if (++agreeing == 2) break;
  }
  return agreeing == 2 ? found : std::nullopt;
}

std::optional<ProjPoint> CremonaMap::apply_inverse(const ProjPoint& p) const { return eval_map(inverse_, p); }

CremonaMap quadratic_map(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (collinear(p, q, r)) throw DomainError("quadratic map: base points are collinear or coincident");
  Projectivity a = Projectivity::from_columns(p.coords(), q.coords(), r.coords());
  Projectivity ainv = a.inverse();
  auto x = HomPoly::variable(0), y = HomPoly::variable(1), z = HomPoly::variable(2);
  std::array<HomPoly, 3> sigma{y * z, x * z, x * y};
  auto forms = conjugate(sigma, a, ainv);
  std::vector<HomPoly> exc{line_poly(join(q, r)), line_poly(join(r, p)), line_poly(join(p, q))};
  return CremonaMap(forms, forms, {{p, 1, {}}, {q, 1, {}}, {r, 1, {}}}, exc, "quadratic");
}

CremonaMap quadratic_map_tangent(const ProjPoint& p, const ProjLine& dir, const ProjPoint& r) {
  if (!incident(p, dir)) throw DomainError("tangent quadratic map: direction line misses its point");
  if (r == p || incident(r, dir)) throw DomainError("tangent quadratic map: third base point on the direction line");
  ProjPoint q = other_point_on(dir, p);
  Projectivity a = Projectivity::from_columns(q.coords(), r.coords(), p.coords());
  Projectivity ainv = a.inverse();
  auto x = HomPoly::variable(0), y = HomPoly::variable(1), z = HomPoly::variable(2);
  // Normal form: p = [0:0:1] tangent to y = 0, r = [0:1:0].
  std::array<HomPoly, 3> fwd{x * x, x * y, y * z};
  std::array<HomPoly, 3> inv{x * y, y * y, x * z};
  std::vector<HomPoly> exc{pull_back(x, ainv).monic(), pull_back(y, ainv).monic()};
  return CremonaMap(conjugate(fwd, a, ainv), conjugate(inv, a, ainv), {{p, 1, {}}, {p, 1, dir}, {r, 1, {}}}, exc,
                    "quadratic-tangent");
}

CremonaMap dejonquieres_map(const ProjPoint& center, const std::vector<ProjPoint>& simples) {
  if (simples.empty()) throw DomainError("de Jonquieres map of degree 1 is not supported");
  if (simples.size() % 2 != 0) throw DomainError("de Jonquieres map needs an even number of simple points");
  const int n = static_cast<int>(simples.size()) / 2 + 1;
  auto frame = complete_basis({center.coords()});
  // frame[0] = center -> e3.
  Projectivity a = Projectivity::from_columns(frame[1], frame[2], frame[0]);
  Projectivity ainv = a.inverse();
  const ProjPoint e3(kBasis[2]);
  std::vector<ProjPoint> s;
  for (const auto& p : simples) {
    if (p == center) throw DomainError("inadmissible base scheme: simple point at the center");
    s.push_back(ainv.apply(p));
  }

  SolveOptions opt;
  opt.want_basis = true;
  LinearSystemSpec hs;
  hs.degree = n - 1;
  if (n > 2) hs.conditions.push_back({e3, n - 2});
  for (const auto& p : s) hs.conditions.push_back({p, 1});
  auto hsol = solve_system(hs, opt);
  if (hsol.dim != 0) throw DomainError("inadmissible base scheme");
  HomPoly h = hsol.basis[0].monic();

  LinearSystemSpec gs;
  gs.degree = n;
  gs.conditions.push_back({e3, n - 1});
  for (const auto& p : s) gs.conditions.push_back({p, 1});
  auto gsol = solve_system(gs, opt);
  if (gsol.dim != 2) throw DomainError("inadmissible base scheme");

  auto x = HomPoly::variable(0), y = HomPoly::variable(1), z = HomPoly::variable(2);
  HomPoly xh = x * h, yh = y * h;
  auto mons = monomials_of_degree(n);
  auto as_row = [&](const HomPoly& f) {
    QRow r;
    for (const auto& e : mons) r.push_back(f.coefficient(e));
    return r;
  };
  std::optional<HomPoly> g;
  for (const auto& cand : gsol.basis) {
    if (exact_rank({as_row(xh), as_row(yh), as_row(cand)}, mons.size()) == 3) {
      g = cand.monic();
      break;
    }
  }
  if (!g) throw DomainError("inadmissible base scheme");

  // h = a z + b and g = c z + e with a, b, c, e free of z.
  auto split = [](const HomPoly& f) {
    HomPoly::Terms lin, con;
    for (const auto& [m, c] : f.terms()) {
      if (m[2] == 1) lin.emplace(Monomial{m[0], m[1], 0}, c);
      else if (m[2] == 0) con.emplace(m, c);
      else throw DomainError("inadmissible base scheme");
    }
    return std::make_pair(HomPoly(f.degree() - 1, std::move(lin)), HomPoly(f.degree(), std::move(con)));
  };
  auto [ha, hb] = split(h);
  auto [gc, ge] = split(*g);
  if ((ha * ge - hb * gc).is_zero()) throw DomainError("inadmissible base scheme: degenerate fibered determinant");

  std::array<HomPoly, 3> fwd{xh, yh, *g};
  HomPoly k = gc - z * ha;
  std::array<HomPoly, 3> inv{x * k, y * k, z * hb - ge};
  std::vector<HomPoly> exc_normal{k.monic()};
  for (const auto& p : s) exc_normal.push_back((x * p[1] - y * p[0]).monic());
  std::vector<HomPoly> exc;
  for (const auto& e : exc_normal) exc.push_back(pull_back(e, ainv).monic());

  std::vector<BasePoint> bps{{center, n - 1, {}}};
  for (const auto& p : simples) bps.push_back({p, 1, {}});
  return CremonaMap(conjugate(fwd, a, ainv), conjugate(inv, a, ainv), bps, exc, "dejonquieres");
}

CremonaMap homaloidal_net_map(int degree, const std::vector<BasePoint>& base_points) {
  LinearSystemSpec spec;
  spec.degree = degree;
  for (const auto& b : base_points) {
    if (b.direction) throw DomainError("homaloidal_net_map takes proper base points only");
    spec.conditions.push_back({b.point, b.multiplicity});
  }
  SolveOptions opt;
  opt.want_basis = true;
  auto sol = solve_system(spec, opt);
  if (sol.dim != 2) throw DomainError("base points do not define a net");
  std::array<HomPoly, 3> fwd{sol.basis[0].monic(), sol.basis[1].monic(), sol.basis[2].monic()};

  // Inverse by interpolation: x_k psi_i(phi(x)) = x_i psi_k(phi(x)) at
  // sample points.
  auto mons = monomials_of_degree(degree);
  const std::size_t nm = mons.size();
  std::mt19937_64 rng(0x6e6574);
  std::uniform_int_distribution<int> coord(-9, 9);
  std::vector<QRow> rows;
  std::size_t samples = 0;
  while (samples < 2 * nm + 4) {
    Vec3 v{Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))};
    if (is_zero(v)) continue;
    auto img = eval_map(fwd, ProjPoint(v));
    if (!img) continue;
    std::vector<Rational> vals;
    for (const auto& e : mons) vals.push_back(HomPoly::monomial(e).eval(img->coords()));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = i + 1; k < 3; ++k) {
        QRow r(3 * nm, Rational(0));
        for (std::size_t j = 0; j < nm; ++j) {
          r[i * nm + j] = v[k] * vals[j];
          r[k * nm + j] = -v[i] * vals[j];
        }
        rows.push_back(std::move(r));
      }
    }
    ++samples;
  }
  auto ker = kernel_of(rows, 3 * nm);
  if (ker.size() != 1) throw DomainError("inverse of the homaloidal net is not determined");
  std::array<HomPoly, 3> inv;
  for (std::size_t i = 0; i < 3; ++i) inv[i] = poly_from_vector(degree, mons, ker[0], i * nm);

  // The exceptional curve over Q is traced by the leading Taylor part of
  // the forward forms at Q.
  std::vector<HomPoly> exc;
  for (const auto& b : base_points) {
    std::array<HomPoly, 3> t;
    for (std::size_t j = 0; j < 3; ++j) t[j] = taylor_part(fwd[j], b.point.coords(), b.multiplicity);
    std::vector<Vec3> pts;
    while (pts.size() < static_cast<std::size_t>(monomial_count(b.multiplicity) + 4)) {
      Vec3 v{Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))};
      Vec3 w{t[0].eval(v), t[1].eval(v), t[2].eval(v)};
      if (!is_zero(w)) pts.push_back(w);
    }
    exc.push_back(interpolate_curve(b.multiplicity, pts));
  }
  return CremonaMap(fwd, inv, base_points, exc, "homaloidal-net");
}

int multiplicity_at(const HomPoly& f, const BasePoint& b) {
  int m = f.multiplicity_at(b.point);
  if (!b.direction || m == 0) return m;
  HomPoly cone = taylor_part(f, b.point.coords(), m);
  Vec3 q = other_point_on(*b.direction, b.point).coords();
  Vec3 w;
  for (const auto& e : kBasis) {
    if (!is_zero(dot(cross(b.point.coords(), q), e))) {
      w = e;
      break;
    }
  }
  auto r = restriction_coefficients(cone, q, w, m + 1);
  for (int k = 0; k <= m; ++k) {
    if (!is_zero(r[static_cast<std::size_t>(k)])) return k;
  }
  return m;
}

std::optional<ProjLine> Component::as_line() const {
  if (equation.degree() != 1) return std::nullopt;
  return ProjLine(Vec3{equation.coefficient({1, 0, 0}), equation.coefficient({0, 1, 0}),
                       equation.coefficient({0, 0, 1})});
}

Component line_component(const ProjLine& l) { return {line_poly(l), points_on(l, 8)}; }

namespace {

// More rational points on a conic by projecting from a known one.
void refresh_conic_samples(Component& c) {
  if (c.degree() != 2 || c.samples.empty() || c.samples.size() >= 8) return;
  std::set<ProjPoint> have(c.samples.begin(), c.samples.end());
  const Vec3 s = c.samples.front().coords();
  for (int k = 1; k < 40 && have.size() < 8; ++k) {
    Vec3 w{Rational(k), Rational(1), Rational(k * k - 3)};
    auto r = restriction_coefficients(c.equation, s, w, 3);
    if (is_zero(r[2]) || is_zero(r[1])) continue;
    Rational t = -r[1] / r[2];
    Vec3 p;
    for (std::size_t i = 0; i < 3; ++i) p[i] = s[i] + t * w[i];
    if (is_zero(p)) continue;
    have.insert(ProjPoint(p));
  }
  c.samples.assign(have.begin(), have.end());
}

}  // namespace

CurveImage push_forward(const CremonaMap& phi, const std::vector<Component>& components) {
  CurveImage out;
  const int n = phi.degree();
  for (std::size_t idx = 0; idx < components.size(); ++idx) {
    const Component& comp = components[idx];
    HomPoly g = substitute(comp.equation, phi.inverse());
    for (const auto& e : phi.exceptional_curves()) {
      if (g.degree() == 0) break;
      g = divide_out(g, e).first;
    }
    long expected = static_cast<long>(n) * comp.degree();
    for (const auto& b : phi.base_points()) expected -= static_cast<long>(b.multiplicity) * multiplicity_at(comp.equation, b);
    if (g.degree() != expected) {
      throw DomainError("degree formula violated: image degree " + std::to_string(g.degree()) + ", expected " +
                        std::to_string(expected));
    }
    std::vector<ProjPoint> pool = comp.samples;
    if (auto l = comp.as_line()) {
      auto extra = points_on(*l, 16);
      pool.insert(pool.end(), extra.begin(), extra.end());
    }
    if (g.degree() == 0) {
      std::optional<ProjPoint> img;
      for (const auto& s : pool) {
        if ((img = phi.apply(s))) break;
      }
      if (!img) throw DomainError("contracted component has no sample off the base locus");
      out.contracted.push_back({idx, *img});
      continue;
    }
    Component image;
    image.equation = g.monic();
    if (auto l = image.as_line()) {
      image = line_component(*l);
    } else {
      std::set<ProjPoint> seen;
      for (const auto& s : pool) {
        if (auto img = phi.apply(s)) seen.insert(*img);
      }
      image.samples.assign(seen.begin(), seen.end());
      refresh_conic_samples(image);
    }
    out.surviving.push_back({std::move(image), idx});
  }
  return out;
}

CurveImage apply_to_arrangement(const CremonaMap& phi, const LineArrangement& arr) {
  return push_forward(phi, PlaneCurve::from_arrangement(arr).components);
}

PlaneCurve PlaneCurve::from_arrangement(const LineArrangement& arr) {
  PlaneCurve c;
  for (const auto& l : arr.lines()) c.components.push_back(line_component(l));
  return c;
}

int PlaneCurve::degree() const {
  int d = 0;
  for (const auto& c : components) d += c.degree();
  return d;
}

bool PlaneCurve::all_lines() const {
  return std::all_of(components.begin(), components.end(), [](const Component& c) { return c.degree() == 1; });
}

std::optional<LineArrangement> PlaneCurve::as_arrangement() const {
  if (components.empty() || !all_lines()) return std::nullopt;
  std::vector<ProjLine> lines;
  for (const auto& c : components) lines.push_back(*c.as_line());
  return LineArrangement(std::move(lines));
}

PlaneCurve apply(const CremonaMap& phi, const PlaneCurve& c) {
  std::set<ProjPoint> pts;
  for (const auto& p : c.points) {
    auto img = phi.apply_to_tracked(p);
    if (!img) throw DomainError("resurrection: tracked point " + to_string(p) + " is a base point");
    pts.insert(*img);
  }
  auto image = push_forward(phi, c.components);
  PlaneCurve out;
  for (auto& s : image.surviving) out.components.push_back(std::move(s.component));
  for (const auto& k : image.contracted) pts.insert(k.point);
  out.points.assign(pts.begin(), pts.end());
  return out;
}

PlaneCurve MapSequence::apply(PlaneCurve c) const {
  for (const auto& m : maps_) c = cremona::apply(m, c);
  return c;
}

MapSequence compose(std::vector<CremonaMap> maps) { return MapSequence(std::move(maps)); }

}  // namespace cremona
