#include "cremona/linear_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cremona/linalg.hpp"

namespace cremona {

std::string SystemType::to_string() const {
  std::ostringstream os;
  os << "(" << degree << ";";
  for (std::size_t i = 0; i < mults.size();) {
    std::size_t j = i;
    while (j < mults.size() && mults[j] == mults[i]) ++j;
    os << (i ? "," : "") << mults[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

int virtual_dim(const LinearSystemSpec& s) {
  long v = static_cast<long>(s.degree) * (s.degree + 3) / 2;
  for (const auto& c : s.conditions) v -= static_cast<long>(c.multiplicity) * (c.multiplicity + 1) / 2;
  if (s.tangent) v -= s.tangent->order;
  return static_cast<int>(v);
}

namespace {

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

struct Cond {
  ProjPoint point;
  int mu;
};

// One linear condition on the coefficients of a form in transformed
// coordinates.
struct RowSpec {
  std::size_t point = 0;  // index into the transformed point list, or npos for the tangent rows
  Monomial order{0, 0, 0};
  int tangent_power = -1;
};

class ConditionMatrix {
 public:
  ConditionMatrix(std::vector<Monomial> cols, std::vector<std::array<Integer, 3>> points,
                  std::vector<int> mus, std::optional<std::pair<std::array<Integer, 3>, std::array<Integer, 3>>> tangent,
                  int tangent_order)
      : cols_(std::move(cols)), points_(std::move(points)), tangent_(std::move(tangent)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (const auto& ord : monomials_of_degree(mus[i] - 1)) rows_.push_back({i, ord, -1});
    }
    if (tangent_) {
      for (int s = 0; s < tangent_order; ++s) rows_.push_back({0, {0, 0, 0}, s});
    }
  }

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return cols_.size(); }
  const std::vector<Monomial>& cols() const { return cols_; }

  std::vector<ModRow> modular(const PrimeField& f) const {
    int deg = cols_.empty() ? 0 : cols_[0][0] + cols_[0][1] + cols_[0][2];
    std::vector<std::vector<std::uint64_t>> pascal(static_cast<std::size_t>(deg) + 1);
    for (int n = 0; n <= deg; ++n) {
      pascal[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) pascal[n][k] = f.add(pascal[n - 1][k - 1], pascal[n - 1][k]);
    }
    auto C = [&](int n, int k) -> std::uint64_t { return (k < 0 || k > n) ? 0 : pascal[n][k]; };
    auto pow_table = [&](const Integer& z) {
      std::vector<std::uint64_t> t(static_cast<std::size_t>(deg) + 1);
      std::uint64_t b = *f.reduce(z);
      t[0] = 1;
      for (int i = 1; i <= deg; ++i) t[i] = f.mul(t[i - 1], b);
      return t;
    };
    std::vector<std::array<std::vector<std::uint64_t>, 3>> pw;
    for (const auto& p : points_) pw.push_back({pow_table(p[0]), pow_table(p[1]), pow_table(p[2])});
    std::array<std::vector<std::uint64_t>, 3> tp, tq;
    if (tangent_) {
      for (int i = 0; i < 3; ++i) {
        tp[i] = pow_table(tangent_->first[i]);
        tq[i] = pow_table(tangent_->second[i]);
      }
    }
    std::vector<ModRow> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
      ModRow row(cols_.size(), 0);
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        const auto& e = cols_[j];
        if (r.tangent_power < 0) {
          const auto& o = r.order;
          if (e[0] < o[0] || e[1] < o[1] || e[2] < o[2]) continue;
          const auto& P = pw[r.point];
          std::uint64_t v = f.mul(f.mul(C(e[0], o[0]), C(e[1], o[1])), C(e[2], o[2]));
          v = f.mul(v, f.mul(P[0][e[0] - o[0]], f.mul(P[1][e[1] - o[1]], P[2][e[2] - o[2]])));
          row[j] = v;
        } else {
          int s = r.tangent_power;
          std::uint64_t acc = 0;
          for (int s0 = 0; s0 <= std::min(s, e[0]); ++s0) {
            for (int s1 = 0; s0 + s1 <= s && s1 <= e[1]; ++s1) {
              int s2 = s - s0 - s1;
              if (s2 > e[2]) continue;
              std::uint64_t v = f.mul(f.mul(C(e[0], s0), C(e[1], s1)), C(e[2], s2));
              v = f.mul(v, f.mul(tq[0][s0], f.mul(tq[1][s1], tq[2][s2])));
              v = f.mul(v, f.mul(tp[0][e[0] - s0], f.mul(tp[1][e[1] - s1], tp[2][e[2] - s2])));
              acc = f.add(acc, v);
            }
          }
          row[j] = acc;
        }
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  QRow exact_row(std::size_t index) const {
    const auto& r = rows_[index];
    QRow row(cols_.size(), Rational(0));
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const auto& e = cols_[j];
      Integer v;
      if (r.tangent_power < 0) {
        const auto& o = r.order;
        if (e[0] < o[0] || e[1] < o[1] || e[2] < o[2]) continue;
        const auto& P = points_[r.point];
        v = binom(e[0], o[0]) * binom(e[1], o[1]) * binom(e[2], o[2]);
        for (int i = 0; i < 3; ++i) {
          Integer t;
          mpz_pow_ui(t.get_mpz_t(), P[i].get_mpz_t(), static_cast<unsigned long>(e[i] - o[i]));
          v *= t;
        }
      } else {
        int s = r.tangent_power;
        v = 0;
        for (int s0 = 0; s0 <= std::min(s, e[0]); ++s0) {
          for (int s1 = 0; s0 + s1 <= s && s1 <= e[1]; ++s1) {
            int s2 = s - s0 - s1;
            if (s2 > e[2]) continue;
            Integer t = binom(e[0], s0) * binom(e[1], s1) * binom(e[2], s2);
            std::array<int, 3> ss{s0, s1, s2};
            for (int i = 0; i < 3; ++i) {
              Integer a, b;
              mpz_pow_ui(a.get_mpz_t(), tangent_->second[i].get_mpz_t(), static_cast<unsigned long>(ss[i]));
              mpz_pow_ui(b.get_mpz_t(), tangent_->first[i].get_mpz_t(), static_cast<unsigned long>(e[i] - ss[i]));
              t *= a * b;
            }
            v += t;
          }
        }
      }
      row[j] = Rational(v);
    }
    return row;
  }

 private:
  std::vector<Monomial> cols_;
  std::vector<std::array<Integer, 3>> points_;
  std::optional<std::pair<std::array<Integer, 3>, std::array<Integer, 3>>> tangent_;
  std::vector<RowSpec> rows_;
};

std::vector<Cond> merged_conditions(const LinearSystemSpec& s) {
  std::map<ProjPoint, int> best;
  for (const auto& c : s.conditions) {
    if (c.multiplicity <= 0) continue;
    auto& v = best[c.point];
    v = std::max(v, c.multiplicity);
  }
  std::vector<Cond> out;
  for (const auto& [p, mu] : best) out.push_back({p, mu});
  std::stable_sort(out.begin(), out.end(), [](const Cond& a, const Cond& b) { return a.mu > b.mu; });
  return out;
}

// Splits off lines whose conditions exceed the degree (Bezout). Returns false
// when the system is found empty.
bool bezout_reduce(int& degree, std::vector<Cond>& conds, HomPoly& fixed) {
  std::map<ProjLine, std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    for (std::size_t j = i + 1; j < conds.size(); ++j) {
      auto& members = lines[join(conds[i].point, conds[j].point)];
      members.push_back(i);
      members.push_back(j);
    }
  }
  for (auto& [l, m] : lines) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : conds) {
      if (c.mu > degree) return false;
    }
    for (const auto& [l, members] : lines) {
      long load = 0;
      for (auto i : members) load += std::max(conds[i].mu, 0);
      if (load <= degree) continue;
      degree -= 1;
      if (degree < 0) return false;
      for (auto i : members) {
        if (conds[i].mu > 0) conds[i].mu -= 1;
      }
      fixed = fixed * HomPoly::linear(l);
      changed = true;
      break;
    }
  }
  conds.erase(std::remove_if(conds.begin(), conds.end(), [](const Cond& c) { return c.mu <= 0; }), conds.end());
  std::stable_sort(conds.begin(), conds.end(), [](const Cond& a, const Cond& b) { return a.mu > b.mu; });
  return degree >= 0;
}

}  // namespace

SystemSolution solve_system(const LinearSystemSpec& s, const SolveOptions& opt) {
  SystemSolution out;
  out.fixed_lines = HomPoly::constant(1);
  if (s.degree < 0) return out;
  int degree = s.degree;
  std::vector<Cond> conds = merged_conditions(s);
  if (!s.tangent) {
    if (!bezout_reduce(degree, conds, out.fixed_lines)) return out;
  } else {
    for (const auto& c : conds) {
      if (c.mu > degree) return out;
    }
  }

  // Move up to three non-collinear condition points to coordinate points.
  std::vector<std::size_t> frame;
  if (!conds.empty()) frame.push_back(0);
  for (std::size_t i = 1; i < conds.size() && frame.size() < 2; ++i) frame.push_back(i);
  for (std::size_t i = 2; i < conds.size() && frame.size() < 3; ++i) {
    if (!collinear(conds[frame[0]].point, conds[frame[1]].point, conds[i].point)) frame.push_back(i);
  }
  std::vector<Vec3> cols;
  // Frame slots: e3 holds the heaviest point, then e1, then e2.
  std::array<std::optional<std::size_t>, 3> slot;  // slot[k] = condition at coordinate point e_k
  std::array<Vec3, 3> basis_vectors;
  {
    std::vector<Vec3> chosen;
    for (auto i : frame) chosen.push_back(conds[i].point.coords());
    const Vec3 std_basis[3] = {{Rational(1), Rational(0), Rational(0)},
                               {Rational(0), Rational(1), Rational(0)},
                               {Rational(0), Rational(0), Rational(1)}};
    for (int k = 0; chosen.size() < 3 && k < 3; ++k) {
      std::vector<Vec3> trial = chosen;
      trial.push_back(std_basis[k]);
      bool independent = false;
      if (trial.size() == 1) independent = true;
      if (trial.size() == 2) independent = !is_zero(cross(trial[0], trial[1]));
      if (trial.size() == 3) independent = !is_zero(dot(cross(trial[0], trial[1]), trial[2]));
      if (independent) chosen = trial;
    }
    // chosen[0] -> e3, chosen[1] -> e1, chosen[2] -> e2.
    basis_vectors = {chosen[1], chosen[2], chosen[0]};
    if (frame.size() > 0) slot[2] = frame[0];
    if (frame.size() > 1) slot[0] = frame[1];
    if (frame.size() > 2) slot[1] = frame[2];
  }
  Projectivity a = Projectivity::from_columns(basis_vectors[0], basis_vectors[1], basis_vectors[2]);
  Projectivity ainv = a.inverse();

  std::array<int, 3> slot_mu{0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    if (slot[k]) slot_mu[k] = conds[*slot[k]].mu;
  }
  std::vector<Monomial> columns;
  for (const auto& e : monomials_of_degree(degree)) {
    // Vanishing order at e_k of a monomial is the total degree in the other two variables.
    if (e[1] + e[2] < slot_mu[0]) continue;
    if (e[0] + e[2] < slot_mu[1]) continue;
    if (e[0] + e[1] < slot_mu[2]) continue;
    columns.push_back(e);
  }
  std::vector<std::array<Integer, 3>> pts;
  std::vector<int> mus;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    if (std::find(frame.begin(), frame.end(), i) != frame.end()) continue;
    pts.push_back(primitive_integers(ainv.apply(conds[i].point.coords())));
    mus.push_back(conds[i].mu);
  }
  std::optional<std::pair<std::array<Integer, 3>, std::array<Integer, 3>>> tangent;
  int tangent_order = 0;
  if (s.tangent) {
    Vec3 p = ainv.apply(s.tangent->point.coords());
    Vec3 q = ainv.apply(other_point_on(s.tangent->direction, s.tangent->point).coords());
    tangent = std::make_pair(primitive_integers(p), primitive_integers(q));
    tangent_order = s.tangent->order;
  }
  ConditionMatrix mat(columns, pts, mus, tangent, tangent_order);
  if (mat.ncols() == 0) return out;

  std::vector<QRow> all_exact;
  std::vector<QRow> kernel;
  bool certified = false;
  for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
    PrimeField field(random_prime_62(opt.prime_seed + static_cast<std::uint64_t>(attempt) * 7919));
    auto profile = mod_rank_profile(mat.modular(field), mat.ncols(), field);
    if (profile.rank == mat.ncols()) return out;  // a nonzero maximal minor mod p is nonzero over Q
    std::vector<QRow> selected;
    for (auto r : profile.independent_rows) selected.push_back(mat.exact_row(r));
    kernel = exact_kernel(selected, mat.ncols());
    if (all_exact.empty()) {
      for (std::size_t r = 0; r < mat.nrows(); ++r) all_exact.push_back(mat.exact_row(r));
    }
    certified = true;
    for (const auto& v : kernel) {
      for (const auto& row : all_exact) {
        Rational acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (!is_zero(row[j]) && !is_zero(v[j])) acc += row[j] * v[j];
        }
        if (!is_zero(acc)) {
          certified = false;
          break;
        }
      }
      if (!certified) break;
    }
  }
  if (!certified) {
    kernel = exact_kernel(all_exact, mat.ncols());
  }
  out.dim = static_cast<int>(kernel.size()) - 1;
  if (opt.want_basis) {
    for (const auto& v : kernel) {
      HomPoly::Terms terms;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!is_zero(v[j])) terms.emplace(mat.cols()[j], v[j]);
      }
      HomPoly g(degree, std::move(terms));
      out.basis.push_back(out.fixed_lines * pull_back(g, ainv));
    }
  }
  return out;
}

int actual_dim(const LinearSystemSpec& s) { return solve_system(s).dim; }

bool satisfies(const HomPoly& f, const LinearSystemSpec& s) {
  if (f.is_zero() || f.degree() != s.degree) return false;
  for (const auto& c : s.conditions) {
    if (c.multiplicity <= 0) continue;
    for (int order = 0; order < c.multiplicity; ++order) {
      for (const auto& o : monomials_of_degree(order)) {
        if (!is_zero(f.hasse_at(o, c.point.coords()))) return false;
      }
    }
  }
  if (s.tangent) {
    Vec3 q = other_point_on(s.tangent->direction, s.tangent->point).coords();
    for (const auto& v : restriction_coefficients(f, s.tangent->point.coords(), q, s.tangent->order)) {
      if (!is_zero(v)) return false;
    }
  }
  return true;
}

SystemType adjoint_type(const CurveType& t, int n, int m) {
  if (m < n || n < 1) throw DomainError("adjoint systems require m >= n >= 1");
  SystemType out;
  out.degree = n * t.d - 3 * m;
  for (int mi : t.mults) {
    if (n * mi - m > 0) out.mults.push_back(n * mi - m);
  }
  return out;
}

LinearSystemSpec adjoint_system(const LineArrangement& arr, int n, int m) {
  if (m < n || n < 1) throw DomainError("adjoint systems require m >= n >= 1");
  LinearSystemSpec s;
  s.degree = n * arr.d() - 3 * m;
  for (const auto& sp : singular_points(arr)) {
    int mu = n * sp.multiplicity() - m;
    if (mu > 0) s.conditions.push_back({sp.point, mu});
  }
  return s;
}

int adjoint_dim(const LineArrangement& arr, int n, int m) {
  auto s = adjoint_system(arr, n, m);
  if (s.degree < 0) return -1;
  return actual_dim(s);
}

AdjointSequence adjoint_sequence(const LineArrangement& arr, int n, int extra_terms) {
  AdjointSequence seq;
  seq.n = n;
  int extra = -1;
  for (int m = n;; ++m) {
    int dim = adjoint_dim(arr, n, m);
    if (extra >= 0) {
      seq.dims.push_back(dim);
      if (++extra >= extra_terms) break;
      continue;
    }
    seq.dims.push_back(dim);
    if (dim == -1) {
      if (extra_terms == 0) break;
      extra = 0;
    }
  }
  return seq;
}

VanishingReport vanishing_adjoints(const LineArrangement& arr) {
  VanishingReport rep;
  for (int m = 1; arr.d() - 3 * m >= 0; ++m) {
    int dim = adjoint_dim(arr, 1, m);
    rep.dims.push_back(dim);
    if (dim >= 0 && !rep.first_nonempty_m) {
      rep.vanishing = false;
      rep.first_nonempty_m = m;
    }
  }
  return rep;
}

PlurigenusReport log_plurigenus(const LineArrangement& arr, int m, bool want_witness) {
  if (m < 1) throw DomainError("plurigenus index must be positive");
  PlurigenusReport rep;
  rep.m = m;
  auto s = adjoint_system(arr, m, m);
  if (s.degree < 0) return rep;
  SolveOptions opt;
  opt.want_basis = want_witness;
  auto sol = solve_system(s, opt);
  rep.value = sol.dim + 1;
  if (want_witness && !sol.basis.empty()) rep.witness = sol.basis.front();
  return rep;
}

KodairaBound kodaira_bounded(const LineArrangement& arr, int bound) {
  if (bound < 1) throw DomainError("Kodaira bound must be positive");
  KodairaBound out;
  out.bound = bound;
  for (int m = 1; m <= bound; ++m) {
    auto rep = log_plurigenus(arr, m, true);
    if (rep.value > 0) {
      out.negative = false;
      out.first_positive = rep;
      return out;
    }
  }
  return out;
}

}  // namespace cremona
