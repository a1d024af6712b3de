#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cremona/classifier.hpp"

namespace cremona {

namespace {

struct Node {
  PlaneCurve curve;
  std::vector<CertificateStep> steps;
};

// A candidate quadratic move; tangent when dir is set (base points p,
// p along dir, r).
struct Move {
  int score;  // predicted image degree
  std::size_t node;
  std::size_t order;
  ProjPoint a, b, c;
  std::optional<ProjLine> dir;
};

std::string key_of(const PlaneCurve& c) {
  std::vector<std::string> parts;
  for (const auto& k : c.components) parts.push_back(k.equation.to_string());
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (const auto& p : parts) os << p << ";";
  os << "|";
  for (const auto& p : c.points) os << to_string(p) << ";";
  return os.str();
}

std::vector<ProjPoint> candidates(const LineArrangement& arr, const std::set<ProjPoint>& tracked, std::mt19937_64& rng) {
  std::vector<ProjPoint> out;
  std::set<ProjPoint> seen(tracked);
  for (const auto& s : singular_points(arr)) {
    if (seen.insert(s.point).second) out.push_back(s.point);
  }
  std::uniform_int_distribution<int> k(-50, 50);
  for (const auto& l : arr.lines()) {
    auto base = points_on(l, 2);
    for (int tries = 0; tries < 32; ++tries) {
      Vec3 v;
      int t = k(rng);
      for (std::size_t i = 0; i < 3; ++i) v[i] = base[0][i] * Rational(5) + Rational(t) * base[1][i];
      if (is_zero(v)) continue;
      ProjPoint p(v);
      bool on_other = false;
      for (const auto& m : arr.lines()) {
        if (!(m == l) && incident(p, m)) on_other = true;
      }
      if (on_other || !seen.insert(p).second) continue;
      out.push_back(p);
      break;
    }
  }
  for (int tries = 0; tries < 64; ++tries) {
    Vec3 v{Rational(k(rng)), Rational(k(rng)), Rational(k(rng))};
    if (is_zero(v)) continue;
    ProjPoint p(v);
    bool on_any = false;
    for (const auto& m : arr.lines()) on_any = on_any || incident(p, m);
    if (on_any || !seen.insert(p).second) continue;
    out.push_back(p);
    break;
  }
  return out;
}

}  // namespace

SearchResult search_contraction(const LineArrangement& arr, const SearchBudget& budget) {
  SearchResult res;
  std::vector<Node> frontier{{PlaneCurve::from_arrangement(arr), {}}};
  std::set<std::string> visited{key_of(frontier[0].curve)};
  for (int depth = 1; depth <= budget.depth; ++depth) {
    res.depth_reached = depth;
    std::vector<Move> moves;
    std::size_t order = 0;
    for (std::size_t ni = 0; ni < frontier.size(); ++ni) {
      const auto& node = frontier[ni];
      auto cur = *node.curve.as_arrangement();
      std::set<ProjPoint> tracked(node.curve.points.begin(), node.curve.points.end());
      std::mt19937_64 rng(budget.seed * 1000003ULL + static_cast<std::uint64_t>(depth) * 7919ULL + ni);
      auto pts = candidates(cur, tracked, rng);
      const std::size_t n = pts.size();
      // inc[i][l]: point i lies on line l.
      std::vector<std::vector<char>> inc(n, std::vector<char>(static_cast<std::size_t>(cur.d())));
      for (std::size_t i = 0; i < n; ++i) {
        for (int l = 0; l < cur.d(); ++l) inc[i][static_cast<std::size_t>(l)] = incident(pts[i], cur[static_cast<std::size_t>(l)]);
      }
      auto score_of = [&](const std::vector<int>& count) {
        int s = 0;
        for (int c : count) {
          if (c == 0) return -1;  // that line would become a conic
          s += 2 - c;
        }
        return s;
      };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            std::vector<int> count(static_cast<std::size_t>(cur.d()));
            for (std::size_t l = 0; l < count.size(); ++l) count[l] = inc[i][l] + inc[j][l] + inc[k][l];
            if (std::any_of(count.begin(), count.end(), [](int c) { return c > 2; })) continue;
            int s = score_of(count);
            if (s < 0 || collinear(pts[i], pts[j], pts[k])) continue;
            moves.push_back({s, ni, order++, pts[i], pts[j], pts[k], std::nullopt});
          }
        }
      }
      // Tangent moves at a point of the union along one of its lines.
      for (std::size_t i = 0; i < n; ++i) {
        for (int l = 0; l < cur.d(); ++l) {
          if (!inc[i][static_cast<std::size_t>(l)]) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || inc[k][static_cast<std::size_t>(l)]) continue;
            std::vector<int> count(static_cast<std::size_t>(cur.d()));
            for (std::size_t m = 0; m < count.size(); ++m) count[m] = inc[i][m] + inc[k][m] + (static_cast<int>(m) == l);
            if (std::any_of(count.begin(), count.end(), [](int c) { return c > 2; })) continue;
            int s = score_of(count);
            if (s < 0) continue;
            moves.push_back({s, ni, order++, pts[i], pts[i], pts[k], cur[static_cast<std::size_t>(l)]});
          }
        }
      }
    }
    std::stable_sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
      return std::tie(x.score, x.order) < std::tie(y.score, y.order);
    });
    std::vector<Node> next;
    for (const auto& mv : moves) {
      if (static_cast<int>(next.size()) >= budget.width) break;
      const Node& parent = frontier[mv.node];
      try {
        CremonaMap m = mv.dir ? quadratic_map_tangent(mv.a, *mv.dir, mv.c) : quadratic_map(mv.a, mv.b, mv.c);
        PlaneCurve img = apply(m, parent.curve);
        ++res.expanded;
        if (!img.all_lines()) continue;
        std::string key = key_of(img);
        if (!visited.insert(key).second) continue;
        Node child{img, parent.steps};
        child.steps.push_back({m, describe(img), mv.dir ? "search: tangent quadratic" : "search: quadratic"});
        if (img.components.empty()) {
          Certificate cert{arr, "search", child.steps, img.points};
          if (verify_certificate(cert).valid) {
            res.certificate = cert;
            return res;
          }
          continue;
        }
        next.push_back(std::move(child));
      } catch (const DomainError&) {
        continue;
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  res.exhausted = true;
  return res;
}

}  // namespace cremona
