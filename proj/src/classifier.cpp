#include "cremona/classifier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace cremona {

std::string describe(const PlaneCurve& c) {
  if (c.components.empty()) return "points";
  if (auto arr = c.as_arrangement()) return type_of(*arr).to_string();
  std::vector<int> degs;
  for (const auto& k : c.components) degs.push_back(k.degree());
  std::sort(degs.rbegin(), degs.rend());
  std::ostringstream os;
  os << "curves{";
  for (std::size_t i = 0; i < degs.size(); ++i) os << (i ? "," : "") << degs[i];
  os << "}";
  return os.str();
}

ReplayReport verify_certificate(const Certificate& cert) {
  ReplayReport rep;
  PlaneCurve state = PlaneCurve::from_arrangement(cert.source);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    try {
      state = apply(cert.steps[i].map, state);
    } catch (const DomainError& e) {
      rep.failed_step = static_cast<int>(i);
      rep.reason = e.what();
      return rep;
    }
    std::string seen = describe(state);
    rep.observed.push_back(seen);
    if (seen != cert.steps[i].expected) {
      rep.failed_step = static_cast<int>(i);
      rep.reason = "expected " + cert.steps[i].expected + ", got " + seen;
      return rep;
    }
  }
  rep.terminal = state.points;
  if (!state.components.empty()) {
    rep.failed_step = static_cast<int>(cert.steps.size());
    rep.reason = "components remain after the last step: " + describe(state);
    return rep;
  }
  if (!cert.terminal.empty() && cert.terminal != state.points) {
    rep.failed_step = static_cast<int>(cert.steps.size());
    rep.reason = "terminal points differ from the recorded ones";
    return rep;
  }
  rep.valid = true;
  return rep;
}

namespace {

std::vector<int> lines_through(const LineArrangement& arr, const ProjPoint& p) {
  std::vector<int> out;
  for (int i = 0; i < arr.d(); ++i) {
    if (incident(p, arr[static_cast<std::size_t>(i)])) out.push_back(i);
  }
  return out;
}

bool is_component(const LineArrangement& arr, const ProjLine& l) {
  return std::find(arr.lines().begin(), arr.lines().end(), l) != arr.lines().end();
}

// Arrangement lines through a point of multiplicity mult (the first such
// point in the canonical order).
std::optional<SingularPoint> point_of_multiplicity(const std::vector<SingularPoint>& sp, int mult,
                                                   const std::optional<ProjPoint>& skip = std::nullopt) {
  for (const auto& s : sp) {
    if (s.multiplicity() == mult && (!skip || !(s.point == *skip))) return s;
  }
  return std::nullopt;
}

// Pseudo-random general choices that avoid a set of points.
class General {
 public:
  explicit General(std::uint64_t seed) : rng_(seed) {}

  ProjPoint on_line(const ProjLine& l, const std::set<ProjPoint>& avoid) {
    auto base = points_on(l, 2);
    std::uniform_int_distribution<int> k(-60, 60);
    for (;;) {
      int t = k(rng_);
      Vec3 v;
      for (std::size_t i = 0; i < 3; ++i) v[i] = base[0][i] * Rational(7) + Rational(t) * base[1][i];
      if (is_zero(v)) continue;
      ProjPoint p(v);
      if (!avoid.count(p)) return p;
    }
  }

  ProjPoint in_plane(const std::set<ProjPoint>& avoid, const LineArrangement* off = nullptr) {
    std::uniform_int_distribution<int> k(-40, 40);
    for (;;) {
      Vec3 v{Rational(k(rng_)), Rational(k(rng_)), Rational(k(rng_))};
      if (is_zero(v)) continue;
      ProjPoint p(v);
      if (avoid.count(p)) continue;
      if (off && !lines_through(*off, p).empty()) continue;
      return p;
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct RetryRecipe : DomainError {
  using DomainError::DomainError;
};

// Components carry labels so recipes can refer to the lines of the source
// configuration after several maps.
struct Labeled {
  PlaneCurve curve;
  std::vector<int> labels;

  const Component& line(int label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return curve.components[i];
    }
    throw RetryRecipe("label " + std::to_string(label) + " was contracted");
  }
  ProjLine L(int label) const { return *line(label).as_line(); }
  ProjPoint P(int a, int b) const { return meet(L(a), L(b)); }
};

class Builder {
 public:
  Builder(const LineArrangement& arr, std::string recipe) {
    cert_.source = arr;
    cert_.recipe = std::move(recipe);
    state_.curve = PlaneCurve::from_arrangement(arr);
    for (int i = 0; i < arr.d(); ++i) state_.labels.push_back(i + 1);
  }

  const Labeled& state() const { return state_; }
  std::set<ProjPoint> tracked() const { return {state_.curve.points.begin(), state_.curve.points.end()}; }

  void push(CremonaMap m, const std::string& note, const std::optional<std::string>& expect = std::nullopt) {
    Labeled next;
    std::set<ProjPoint> pts;
    for (const auto& p : state_.curve.points) {
      auto img = m.apply_to_tracked(p);
      if (!img) throw RetryRecipe("base point at a tracked point");
      pts.insert(*img);
    }
    auto img = push_forward(m, state_.curve.components);
    for (auto& s : img.surviving) {
      next.curve.components.push_back(std::move(s.component));
      next.labels.push_back(state_.labels[s.source]);
    }
    for (const auto& c : img.contracted) pts.insert(c.point);
    next.curve.points.assign(pts.begin(), pts.end());
    std::string seen = describe(next.curve);
    if (expect && seen != *expect) throw RetryRecipe("step '" + note + "' gave " + seen + ", expected " + *expect);
    state_ = std::move(next);
    cert_.steps.push_back({std::move(m), seen, note});
  }

  Certificate finish() {
    cert_.terminal = state_.curve.points;
    return cert_;
  }

 private:
  Certificate cert_;
  Labeled state_;
};

std::string type_string(int d, std::vector<int> mults) {
  mults.erase(std::remove_if(mults.begin(), mults.end(), [](int m) { return m < 2; }), mults.end());
  return make_type(d, mults).to_string();
}

std::vector<int> with_nodes(std::vector<int> m, long nodes) {
  for (long i = 0; i < nodes; ++i) m.push_back(2);
  return m;
}

// All lines of the union pass through one point: de Jonquieres of degree
// l + 1 + eps with one simple point on each line.
void pencil_step(Builder& b, General& g) {
  auto arr = *b.state().curve.as_arrangement();
  const int d = arr.d();
  auto avoid = b.tracked();
  ProjPoint center;
  if (d == 1) {
    center = g.on_line(arr[0], avoid);
  } else {
    center = meet(arr[0], arr[1]);
  }
  avoid.insert(center);
  const int eps = d % 2;
  std::vector<ProjPoint> simples;
  for (const auto& l : arr.lines()) {
    ProjPoint p = g.on_line(l, avoid);
    avoid.insert(p);
    simples.push_back(p);
  }
  if (eps == 1) simples.push_back(g.in_plane(avoid, &arr));
  b.push(dejonquieres_map(center, simples), "pencil: de Jonquieres centred at the common point", "points");
}

// d - 1 lines through P0 and one more line L.
void near_pencil_step(Builder& b, General& g) {
  auto arr = *b.state().curve.as_arrangement();
  auto sp = singular_points(arr);
  const int d = arr.d();
  const ProjPoint p0 = sp.front().point;
  const int ell = d - 1;
  std::vector<ProjLine> through, other;
  for (const auto& l : arr.lines()) (incident(p0, l) ? through : other).push_back(l);
  const ProjLine L = other.front();
  auto avoid = b.tracked();
  avoid.insert(p0);
  const int mu = ell % 2 == 0 ? (ell + 2) / 2 : (ell + 3) / 2;
  std::vector<ProjPoint> simples;
  for (int i = 0; i < mu; ++i) simples.push_back(meet(L, through[static_cast<std::size_t>(i)]));
  for (const auto& p : simples) avoid.insert(p);
  for (int i = mu; i < ell; ++i) {
    ProjPoint p = g.on_line(through[static_cast<std::size_t>(i)], avoid);
    avoid.insert(p);
    simples.push_back(p);
  }
  for (int i = 0; i < 2 * mu - 2 - ell; ++i) {
    ProjPoint p = g.in_plane(avoid, &arr);
    avoid.insert(p);
    simples.push_back(p);
  }
  if (mu == 2) {
    b.push(quadratic_map(p0, simples[0], simples[1]), "near pencil: quadratic map", "points");
  } else {
    b.push(dejonquieres_map(p0, simples), "near pencil: de Jonquieres centred at P0", "points");
  }
}

// (d; d-2, 3, 2^{2(d-3)}): quadratic at P0, L1 n L3, L2 n L4 with L1, L2
// through P1 only and L3, L4 through P0 only.
void two_point_step(Builder& b) {
  auto arr = *b.state().curve.as_arrangement();
  auto sp = singular_points(arr);
  const int d = arr.d();
  const ProjPoint p0 = sp[0].point;
  auto p1 = point_of_multiplicity(sp, 3, p0);
  std::vector<ProjLine> l12, l34;
  for (const auto& l : arr.lines()) {
    bool a = incident(p0, l), c = incident(p1->point, l);
    if (c && !a) l12.push_back(l);
    if (a && !c) l34.push_back(l);
  }
  auto m = quadratic_map(p0, meet(l12[0], l34[0]), meet(l12[1], l34[1]));
  b.push(std::move(m), "two-point descent: quadratic at P0, L1nL3, L2nL4",
         type_string(d - 2, with_nodes({d - 4, 3}, 2L * (d - 5))));
}

// (d; d-2, 2^{2d-3}): same move with L1, L2 the lines missing P0.
void two_general_step(Builder& b) {
  auto arr = *b.state().curve.as_arrangement();
  auto sp = singular_points(arr);
  const int d = arr.d();
  const ProjPoint p0 = sp[0].point;
  std::vector<ProjLine> l12, l34;
  for (const auto& l : arr.lines()) (incident(p0, l) ? l34 : l12).push_back(l);
  auto m = quadratic_map(p0, meet(l12[0], l34[0]), meet(l12[1], l34[1]));
  b.push(std::move(m), "two-line descent: quadratic at P0, L1nL3, L2nL4",
         type_string(d - 2, with_nodes({d - 4}, 2L * d - 7)));
}

// What is left is a line or a conic (possibly two lines) plus points.
void conic_finisher(Builder& b, General& g) {
  const auto& st = b.state().curve;
  auto avoid = b.tracked();
  if (st.components.size() == 1 && st.components[0].degree() == 1) {
    ProjLine r = *st.components[0].as_line();
    ProjPoint q1 = g.on_line(r, avoid);
    avoid.insert(q1);
    ProjPoint q2 = g.on_line(r, avoid);
    avoid.insert(q2);
    LineArrangement a({r});
    b.push(quadratic_map(q1, q2, g.in_plane(avoid, &a)), "line finisher", "points");
    return;
  }
  // Cheap moves first: two lines through a free node contract under one
  // quadratic map; an irreducible conic becomes a line.
  if (st.components.size() == 2 && st.all_lines()) {
    ProjLine r1 = *st.components[0].as_line(), r2 = *st.components[1].as_line();
    ProjPoint node = meet(r1, r2);
    if (!avoid.count(node)) {
      avoid.insert(node);
      ProjPoint q1 = g.on_line(r1, avoid);
      avoid.insert(q1);
      ProjPoint q2 = g.on_line(r2, avoid);
      b.push(quadratic_map(node, q1, q2), "two-line finisher: quadratic at the node", "points");
      return;
    }
    // Node already carries a contracted curve: contract r1 and keep r2 a line.
    ProjPoint q1 = g.on_line(r1, avoid);
    avoid.insert(q1);
    ProjPoint q1b = g.on_line(r1, avoid);
    avoid.insert(q1b);
    ProjPoint q2 = g.on_line(r2, avoid);
    b.push(quadratic_map(q1, q1b, q2), "two-line finisher: contract one line");
    conic_finisher(b, g);
    return;
  }
  if (st.components.size() == 1 && st.components[0].degree() == 2) {
    std::vector<ProjPoint> on;
    for (const auto& s : st.components[0].samples) {
      if (on.size() < 3 && !avoid.count(s)) on.push_back(s);
    }
    if (on.size() == 3) {
      b.push(quadratic_map(on[0], on[1], on[2]), "conic finisher: quadratic at three points of the conic");
      if (b.state().curve.components.size() == 1 && b.state().curve.components[0].degree() == 1) {
        conic_finisher(b, g);
        return;
      }
      throw RetryRecipe("conic did not become a line");
    }
  }
  std::vector<BasePoint> bps;
  if (st.components.size() == 2 && st.all_lines()) {
    ProjLine r1 = *st.components[0].as_line(), r2 = *st.components[1].as_line();
    avoid.insert(meet(r1, r2));
    auto pick = [&](const ProjLine& l, int mult) {
      ProjPoint p = g.on_line(l, avoid);
      avoid.insert(p);
      bps.push_back({p, mult, {}});
    };
    pick(r1, 2);
    pick(r1, 2);
    pick(r2, 2);
    pick(r2, 1);
    pick(r2, 1);
    LineArrangement a({r1, r2});
    bps.push_back({g.in_plane(avoid, &a), 1, {}});
  } else if (st.components.size() == 1 && st.components[0].degree() == 2) {
    int taken = 0;
    for (const auto& s : st.components[0].samples) {
      if (taken == 5) break;
      if (avoid.count(s)) continue;
      bps.push_back({s, taken < 3 ? 2 : 1, {}});
      avoid.insert(s);
      ++taken;
    }
    if (taken < 5) throw DomainError("conic finisher: not enough rational points on the conic");
    ProjPoint q6;
    do {
      q6 = g.in_plane(avoid);
    } while (is_zero(st.components[0].equation.eval(q6)));
    bps.push_back({q6, 1, {}});
  } else {
    throw DomainError("conic finisher needs a line or a conic, got " + describe(st));
  }
  b.push(homaloidal_net_map(4, bps), "conic finisher: quartic net (4;2^3,1^3)", "points");
}

// The degree 9 configuration with P0 sextuple, P1 triple and L1 = P0P1.
void degree9_steps(Builder& b, General& g) {
  auto arr = *b.state().curve.as_arrangement();
  auto sp = singular_points(arr);
  const ProjPoint p0 = sp[0].point;
  const ProjPoint p1 = point_of_multiplicity(sp, 3)->point;
  // Relabel: L1 shared, L2..L6 through P0, L7, L8 through P1, L9 free.
  std::map<int, int> relabel;  // new label -> old label
  int next_p0 = 2, next_p1 = 7;
  for (int i = 0; i < arr.d(); ++i) {
    const auto& l = arr[static_cast<std::size_t>(i)];
    bool a = incident(p0, l), c = incident(p1, l);
    int label = a && c ? 1 : a ? next_p0++ : c ? next_p1++ : 9;
    relabel[label] = i + 1;
  }
  auto L = [&](const Labeled& s, int label) { return s.L(relabel.at(label)); };
  auto P = [&](const Labeled& s, int i, int j) { return meet(L(s, i), L(s, j)); };

  const auto& s0 = b.state();
  b.push(dejonquieres_map(p0, {p1, P(s0, 4, 7), P(s0, 5, 8), P(s0, 6, 9), P(s0, 7, 9), P(s0, 8, 9)}),
         "degree 9: de Jonquieres |4L-3P0-P1-P47-P58-P69-P79-P89|", "(5;2^10)");
  const auto& s1 = b.state();
  b.push(quadratic_map(P(s1, 2, 8), P(s1, 3, 7), P(s1, 3, 9)), "degree 9: quadratic at P28, P37, P39", "(4;2^6)");
  const auto& s2 = b.state();
  auto avoid = b.tracked();
  ProjPoint q8 = g.on_line(L(s2, 8), avoid);
  b.push(quadratic_map(P(s2, 2, 7), P(s2, 2, 9), q8), "degree 9: quadratic at P27, P29, Q8", "(3;2^3)");
  const auto& s3 = b.state();
  avoid = b.tracked();
  ProjPoint q9 = g.on_line(L(s3, 9), avoid);
  b.push(quadratic_map_tangent(P(s3, 7, 8), L(s3, 7), q9), "degree 9: quadratic at P78 tangent to L7, Q9", "(2;2)");
}

enum class Recipe { Pencil, NearPencil, TwoPoint, TwoGeneral, Degree9 };

std::optional<Recipe> recipe_for(const LineArrangement& arr) {
  const int d = arr.d();
  CurveType t = type_of(arr);
  const int m0 = t.m(0);
  if (m0 == d) return Recipe::Pencil;
  if (m0 == d - 1) return Recipe::NearPencil;
  if (m0 == d - 2 && d >= 5 && t == make_type(d, with_nodes({d - 2, 3}, 2L * (d - 3)))) return Recipe::TwoPoint;
  if (m0 == d - 2 && d >= 4 && t == make_type(d, with_nodes({d - 2}, 2L * d - 3))) return Recipe::TwoGeneral;
  if (is_degree9_special(arr)) return Recipe::Degree9;
  return std::nullopt;
}

std::string recipe_name(Recipe r) {
  switch (r) {
    case Recipe::Pencil: return "pencil";
    case Recipe::NearPencil: return "near-pencil";
    case Recipe::TwoPoint: return "two-point descent";
    case Recipe::TwoGeneral: return "two-line descent";
    case Recipe::Degree9: return "degree-9 special";
  }
  return "";
}

}  // namespace

bool is_degree9_special(const LineArrangement& arr) {
  return arr.d() == 9 && identify_family(arr) == Family::TripleShared;
}

std::optional<Family> identify_family(const LineArrangement& arr) {
  const int d = arr.d();
  CurveType t = type_of(arr);
  for (Family f : classified_families()) {
    if (d < family_min_degree(f) || !(family_type(f, d) == t)) continue;
    if (f == Family::TripleShared || f == Family::TripleConcurrent) {
      auto sp = singular_points(arr);
      auto p1 = point_of_multiplicity(sp, 3, sp[0].point);
      if (!p1) continue;
      bool shared = is_component(arr, join(sp[0].point, p1->point));
      return shared ? Family::TripleShared : Family::TripleConcurrent;
    }
    return f;
  }
  return std::nullopt;
}

Certificate contract(const LineArrangement& arr, std::uint64_t seed) {
  auto first = recipe_for(arr);
  if (!first) throw DomainError("no recipe for " + type_of(arr).to_string());
  std::string last_error;
  for (int attempt = 0; attempt < 24; ++attempt) {
    General g(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    Builder b(arr, recipe_name(*first));
    try {
      for (int guard = 0; guard < 64; ++guard) {
        const auto& st = b.state().curve;
        if (st.components.empty()) break;
        if (!st.all_lines()) {
          conic_finisher(b, g);
          continue;
        }
        auto cur = *st.as_arrangement();
        auto r = recipe_for(cur);
        if (!r) throw DomainError("no recipe for intermediate " + type_of(cur).to_string());
        switch (*r) {
          case Recipe::Pencil: pencil_step(b, g); break;
          case Recipe::NearPencil: near_pencil_step(b, g); break;
          case Recipe::TwoPoint: two_point_step(b); break;
          case Recipe::TwoGeneral: two_general_step(b); break;
          case Recipe::Degree9:
            degree9_steps(b, g);
            conic_finisher(b, g);
            break;
        }
      }
      Certificate cert = b.finish();
      auto rep = verify_certificate(cert);
      if (rep.valid) return cert;
      last_error = rep.reason;
    } catch (const RetryRecipe& e) {
      last_error = e.what();
    } catch (const DomainError& e) {
      // Map construction can fail for unlucky general choices.
      last_error = e.what();
      if (std::string(e.what()).rfind("no recipe", 0) == 0) throw;
    }
  }
  throw DomainError("recipe failed after retries: " + last_error);
}

NonContractWitness noncontract_witness(const LineArrangement& arr, std::uint64_t seed) {
  auto fam = identify_family(arr);
  static const std::set<Family> group{Family::Quadruple,   Family::ThreeTriples,     Family::TwoTriples,
                                      Family::TripleShared, Family::TripleConcurrent, Family::Triangle};
  if (!fam || !group.count(*fam)) throw DomainError("no ad_{2,3} witness recipe for " + type_of(arr).to_string());
  const int d = arr.d();
  auto sp = singular_points(arr);
  const ProjPoint p0 = sp[0].point;
  std::map<ProjLine, int> mult;
  std::vector<ProjLine> free_lines;
  for (const auto& l : arr.lines()) {
    if (incident(p0, l)) mult[l] = 1;
    else free_lines.push_back(l);
  }
  // Each meeting point V of lines missing P0 has multiplicity m_V in C and
  // needs 2 m_V - 3 in the member; the line P0V carries it.
  std::set<ProjPoint> vertices;
  for (std::size_t i = 0; i < free_lines.size(); ++i) {
    for (std::size_t j = i + 1; j < free_lines.size(); ++j) vertices.insert(meet(free_lines[i], free_lines[j]));
  }
  for (const auto& v : vertices) {
    int mv = static_cast<int>(lines_through(arr, v).size());
    auto& slot = mult[join(p0, v)];
    slot = std::max(slot, 2 * mv - 3);
  }
  int total = 0;
  for (const auto& [l, k] : mult) total += k;
  const int general = 2 * d - 9 - total;
  if (general < 0) throw DomainError("degree too small for the ad_{2,3} witness");
  General g(seed);
  std::set<ProjPoint> avoid;
  for (const auto& s : sp) avoid.insert(s.point);
  for (int i = 0; i < general;) {
    ProjLine l = join(p0, g.in_plane(avoid, &arr));
    if (mult.count(l)) continue;
    mult[l] = 1;
    ++i;
  }
  NonContractWitness w;
  w.member = HomPoly::constant(1);
  for (const auto& [l, k] : mult) {
    w.factors.emplace_back(l, k);
    w.member = w.member * HomPoly::linear(l).pow(k);
  }
  w.verified = satisfies(w.member, adjoint_system(arr, 2, 3));
  return w;
}

bool jung_is_minimal(const CurveType& t) { return t.d >= t.m(0) + t.m(1) + t.m(2); }

int marletta_index(const CurveType& t) { return (t.d - t.m(0)) / 2; }

namespace {

struct CaseRule {
  std::string name;
  bool collinear;
  int sides;        // triangle sides that are components (collinear: the joining line)
  int missing;      // components through none of P0, P1, P2
  int max_mult;     // bound for the other singular points
  int max_at_bound; // how many may reach the bound (-1: any)
};

std::vector<CaseRule> rules_for(int excess) {
  switch (excess) {
    case 3: return {{"triangle", false, 3, 0, 3, -1}};
    case 2:
      return {{"collinear", true, 1, 0, 3, -1}, {"triangle", false, 3, 1, 4, 2}, {"two-sides", false, 2, 0, 3, -1}};
    case 1:
      return {{"collinear", true, 1, 1, 4, -1},
              {"triangle", false, 3, 2, 5, 1},
              {"two-sides", false, 2, 1, 4, -1},
              {"one-side", false, 1, 0, 3, -1}};
  }
  return {};
}

std::vector<std::string> check_rule(const LineArrangement& arr, const std::vector<SingularPoint>& sp,
                                    const std::array<std::size_t, 3>& idx, const CaseRule& r) {
  std::vector<std::string> v;
  const ProjPoint& a = sp[idx[0]].point;
  const ProjPoint& b = sp[idx[1]].point;
  const ProjPoint& c = sp[idx[2]].point;
  bool col = collinear(a, b, c);
  if (col != r.collinear) v.push_back(r.collinear ? "P0, P1, P2 are not collinear" : "P0, P1, P2 are collinear");
  if (col && r.collinear) {
    if (!is_component(arr, join(a, b))) v.push_back("the line through P0, P1, P2 is not a component");
  } else if (!col && !r.collinear) {
    int sides = is_component(arr, join(a, b)) + is_component(arr, join(b, c)) + is_component(arr, join(a, c));
    if (sides != r.sides) {
      v.push_back(std::to_string(sides) + " triangle sides are components, expected " + std::to_string(r.sides));
    }
  }
  int missing = 0;
  for (const auto& l : arr.lines()) {
    if (!incident(a, l) && !incident(b, l) && !incident(c, l)) ++missing;
  }
  if (missing != r.missing) {
    v.push_back(std::to_string(missing) + " components miss P0, P1, P2, expected " + std::to_string(r.missing));
  }
  int at_bound = 0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (i == idx[0] || i == idx[1] || i == idx[2]) continue;
    int m = sp[i].multiplicity();
    if (m > r.max_mult) {
      v.push_back("another singular point has multiplicity " + std::to_string(m) + " > " +
                  std::to_string(r.max_mult));
      break;
    }
    if (m == r.max_mult) ++at_bound;
  }
  if (r.max_at_bound >= 0 && at_bound > r.max_at_bound) {
    v.push_back(std::to_string(at_bound) + " other points reach multiplicity " + std::to_string(r.max_mult));
  }
  return v;
}

}  // namespace

StructureReport structure_check(const LineArrangement& arr, const CurveType& claimed) {
  StructureReport rep;
  const int d = arr.d();
  rep.m = claimed.m(0) + claimed.m(1) + claimed.m(2);
  const int excess = rep.m - d;
  if (excess < 1 || excess > 3) throw DomainError("structure_check needs m in {d+1, d+2, d+3}");
  rep.rule = "m=d+" + std::to_string(excess);
  if (claimed.d != d) {
    rep.violations.push_back("claimed degree differs from the arrangement");
    return rep;
  }
  auto sp = singular_points(arr);
  std::array<std::vector<std::size_t>, 3> cand;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (sp[i].multiplicity() == claimed.m(k)) cand[k].push_back(i);
    }
    if (cand[k].empty()) {
      rep.violations.push_back("no singular point of multiplicity " + std::to_string(claimed.m(k)) + " for P" +
                               std::to_string(k));
    }
  }
  if (!rep.violations.empty()) return rep;
  std::vector<std::string> best;
  bool have_best = false;
  for (auto i : cand[0]) {
    for (auto j : cand[1]) {
      for (auto k : cand[2]) {
        if (i == j || j == k || i == k) continue;
        for (const auto& r : rules_for(excess)) {
          auto v = check_rule(arr, sp, {i, j, k}, r);
          if (v.empty()) {
            rep.holds = true;
            rep.case_name = r.name;
            rep.chosen = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
            rep.violations.clear();
            return rep;
          }
          if (!have_best || v.size() < best.size()) {
            best = v;
            have_best = true;
            rep.case_name = r.name;
            rep.chosen = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
          }
        }
      }
    }
  }
  rep.violations = have_best ? best : std::vector<std::string>{"no admissible choice of P0, P1, P2"};
  return rep;
}

StructureReport structure_check(const LineArrangement& arr) { return structure_check(arr, type_of(arr)); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

Classification classify(const LineArrangement& arr, const ClassifyOptions& opt) {
  Classification c;
  const int d = arr.d();
  c.type = type_of(arr);
  c.config = render(config_of(arr).config);
  c.family = identify_family(arr);
  c.adjoints = adjoint_sequence(arr, 1);
  c.vanishing = vanishing_adjoints(arr);
  c.vanishing_by_rank = c.vanishing.vanishing;
  static const std::set<Family> d2{Family::Pencil, Family::NearPencil, Family::TwoPointTriple, Family::TwoGeneral};
  if (d >= 12) c.vanishing_by_type = c.family.has_value();
  if (opt.compute_kodaira) {
    c.kodaira = kodaira_bounded(arr, opt.kodaira_bound);
    c.kodaira_computed = true;
  }

  if (!c.vanishing_by_rank) {
    c.contractible = Verdict::No;
    c.reason = "ad_{1," + std::to_string(*c.vanishing.first_nonempty_m) +
               "} is nonempty and adjoint dimensions are Cremona invariants";
    return c;
  }
  if (c.family && d2.count(*c.family)) {
    c.certificate = contract(arr, opt.seed);
    c.contractible = Verdict::Yes;
    c.reason = "type " + family_tag(*c.family) + " is contracted by its recipe";
    return c;
  }
  if (is_degree9_special(arr)) {
    c.certificate = contract(arr, opt.seed);
    c.contractible = Verdict::Yes;
    c.reason = "degree 9 special configuration is contracted by its recipe";
    return c;
  }
  if (c.family) {
    try {
      c.witness = noncontract_witness(arr, opt.seed);
    } catch (const DomainError&) {
      // No factor recipe at this degree; the rank check below still applies.
    }
    if (c.witness && c.witness->verified) {
      c.contractible = Verdict::No;
      c.reason = "ad_{2,3} contains the witness built for " + family_tag(*c.family);
      return c;
    }
  }
  if (d >= 12) {
    c.contractible = Verdict::Unknown;
    c.reason = "vanishing adjoints but the type is not listed";
    return c;
  }
  // d < 12: invariants first, then recipes, then bounded search.
  SolveOptions so;
  so.want_basis = true;
  auto ad23 = adjoint_system(arr, 2, 3);
  if (ad23.degree >= 0) {
    auto sol = solve_system(ad23, so);
    if (sol.dim >= 0) {
      NonContractWitness w;
      w.member = sol.basis[0];
      w.verified = satisfies(w.member, ad23);
      c.witness = w;
      c.contractible = Verdict::No;
      c.reason = "ad_{2,3} is nonempty";
      return c;
    }
  }
  if (recipe_for(arr)) {
    c.certificate = contract(arr, opt.seed);
    c.contractible = Verdict::Yes;
    c.reason = "contracted by the " + recipe_name(*recipe_for(arr)) + " recipe";
    return c;
  }
  c.search = search_contraction(arr, opt.budget);
  if (c.search->certificate) {
    c.certificate = c.search->certificate;
    c.contractible = Verdict::Yes;
    c.reason = "contraction found by search";
  } else {
    c.contractible = Verdict::Unknown;
    c.reason = "search budget exhausted";
  }
  return c;
}

}  // namespace cremona
