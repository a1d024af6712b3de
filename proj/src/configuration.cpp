#include "cremona/configuration.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace cremona {

LineArrangement::LineArrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
  if (lines_.empty()) throw DomainError("arrangement needs at least one line");
  std::set<ProjLine> seen(lines_.begin(), lines_.end());
  if (seen.size() != lines_.size()) throw DomainError("arrangement lines must be pairwise distinct");
}

void IncidenceConfig::normalize() {
  if (d < 1) throw ParseError("configuration degree must be positive");
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ParseError("repeated line index in a block");
    if (b.size() < 3) throw ParseError("block size < 3");
    for (int i : b) {
      if (i < 1 || i > d) throw ParseError("line index out of range: " + std::to_string(i));
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                            std::back_inserter(common));
      if (common.size() >= 2) throw ParseError("two blocks share two or more lines");
    }
  }
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) {
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i) + " in '" +
                       std::string(s) + "'");
    }
    ++i;
  }
  int integer() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected integer at position " + std::to_string(start));
    return std::stoi(std::string(s.substr(start, i - start)));
  }
  bool done() {
    skip();
    return i == s.size();
  }
};

}  // namespace

IncidenceConfig parse_config(std::string_view text) {
  Cursor c{text};
  IncidenceConfig cfg;
  c.expect('(');
  cfg.d = c.integer();
  c.expect(';');
  bool first = true;
  while (!c.peek(')')) {
    if (!first) c.expect(',');
    first = false;
    c.expect('{');
    std::vector<int> block;
    block.push_back(c.integer());
    while (c.peek(',')) {
      c.expect(',');
      block.push_back(c.integer());
    }
    c.expect('}');
    cfg.blocks.push_back(std::move(block));
  }
  c.expect(')');
  if (!c.done()) throw ParseError("trailing characters after configuration");
  cfg.normalize();
  return cfg;
}

std::string render(const IncidenceConfig& cfg) {
  std::ostringstream os;
  os << "(" << cfg.d << ";";
  for (std::size_t b = 0; b < cfg.blocks.size(); ++b) {
    os << (b ? ",{" : "{");
    for (std::size_t i = 0; i < cfg.blocks[b].size(); ++i) os << (i ? "," : "") << cfg.blocks[b][i];
    os << "}";
  }
  os << ")";
  return os.str();
}

std::vector<SingularPoint> singular_points(const LineArrangement& arr) {
  std::map<ProjPoint, std::set<int>> by_point;
  for (int i = 0; i < arr.d(); ++i) {
    for (int j = i + 1; j < arr.d(); ++j) {
      auto& s = by_point[meet(arr[i], arr[j])];
      s.insert(i);
      s.insert(j);
    }
  }
  std::vector<SingularPoint> out;
  for (auto& [p, s] : by_point) out.push_back({p, std::vector<int>(s.begin(), s.end())});
  std::stable_sort(out.begin(), out.end(),
                   [](const SingularPoint& a, const SingularPoint& b) { return a.multiplicity() > b.multiplicity(); });
  return out;
}

ConfigOf config_of(const LineArrangement& arr) {
  ConfigOf out;
  out.config.d = arr.d();
  std::vector<std::pair<std::vector<int>, ProjPoint>> blocks;
  for (const auto& sp : singular_points(arr)) {
    if (sp.multiplicity() < 3) continue;
    std::vector<int> b;
    for (int i : sp.lines) b.push_back(i + 1);
    blocks.emplace_back(std::move(b), sp.point);
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  for (auto& [b, p] : blocks) {
    out.config.blocks.push_back(b);
    out.block_points.push_back(p);
  }
  return out;
}

std::string CurveType::to_string() const {
  std::ostringstream os;
  os << "(" << d << ";";
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

CurveType make_type(int d, std::vector<int> mults) {
  if (d < 1) throw DomainError("type degree must be positive");
  std::sort(mults.begin(), mults.end(), std::greater<>());
  long pairs = 0;
  for (int m : mults) {
    if (m < 2) throw DomainError("type multiplicities must be >= 2");
    if (m > d) throw DomainError("multiplicity exceeds degree");
    pairs += static_cast<long>(m) * (m - 1) / 2;
  }
  if (pairs > static_cast<long>(d) * (d - 1) / 2) throw DomainError("inconsistent type");
  return CurveType{d, std::move(mults)};
}

CurveType parse_type(std::string_view text) {
  Cursor c{text};
  c.expect('(');
  int d = c.integer();
  c.expect(';');
  std::vector<int> mults;
  bool first = true;
  while (!c.peek(')')) {
    if (!first) c.expect(',');
    first = false;
    int m = c.integer();
    int rep = 1;
    if (c.peek('^')) {
      c.expect('^');
      bool brace = c.peek('{');
      if (brace) c.expect('{');
      rep = c.integer();
      if (brace) c.expect('}');
    }
    for (int i = 0; i < rep; ++i) mults.push_back(m);
  }
  c.expect(')');
  if (!c.done()) throw ParseError("trailing characters after type");
  return make_type(d, std::move(mults));
}

CurveType type_of(const IncidenceConfig& cfg) {
  std::vector<int> mults;
  long pairs = static_cast<long>(cfg.d) * (cfg.d - 1) / 2;
  for (const auto& b : cfg.blocks) {
    int m = static_cast<int>(b.size());
    mults.push_back(m);
    pairs -= static_cast<long>(m) * (m - 1) / 2;
  }
  if (pairs < 0) throw DomainError("inconsistent configuration");
  for (long i = 0; i < pairs; ++i) mults.push_back(2);
  return make_type(cfg.d, std::move(mults));
}

CurveType type_of(const LineArrangement& arr) {
  std::vector<int> mults;
  for (const auto& sp : singular_points(arr)) mults.push_back(sp.multiplicity());
  return make_type(arr.d(), std::move(mults));
}

long node_count(const CurveType& t) {
  long n = static_cast<long>(t.d) * (t.d - 1) / 2;
  for (int m : t.mults) {
    if (m >= 3) n -= static_cast<long>(m) * (m - 1) / 2;
  }
  if (n < 0) throw DomainError("inconsistent type");
  return n;
}

TypeAnalysis analyze(const CurveType& t) {
  int m0 = t.m(0);
  if (t.d == m0) throw PencilCase();
  if (t.d < m0) throw DomainError("multiplicity exceeds degree");
  TypeAnalysis a;
  a.h = (t.d - m0) / 2;
  a.epsilon = (t.d - m0) % 2;
  a.delta = t.d / 3;
  a.eta = t.d % 3;
  a.mu = m0 - a.delta;
  a.nu = a.mu >= 0 ? a.mu / 2 : -((-a.mu + 1) / 2);
  a.tau = a.mu - 2 * a.nu;
  a.m = m0 + t.m(1) + t.m(2);
  int m2 = t.m(2);
  std::size_t i = 3;
  a.k = 2;
  while (i < t.mults.size() && t.mults[i] == m2) {
    a.k = static_cast<int>(i);
    ++i;
  }
  a.l = 0;
  while (i < t.mults.size() && t.mults[i] == m2 - 1) {
    ++a.l;
    ++i;
  }
  return a;
}

std::vector<Family> classified_families() {
  return {Family::Pencil,       Family::NearPencil, Family::TwoPointTriple, Family::TwoGeneral,
          Family::Quadruple,    Family::ThreeTriples, Family::TwoTriples,   Family::TripleShared,
          Family::TripleConcurrent, Family::Triangle};
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::Pencil: return "(d;d)";
    case Family::NearPencil: return "(d;d-1,2^{d-1})";
    case Family::TwoPointTriple: return "(d;d-2,3,2^{2(d-3)})";
    case Family::TwoGeneral: return "(d;d-2,2^{2d-3})";
    case Family::Quadruple: return "(d;d-3,4,2^{3(d-4)})";
    case Family::ThreeTriples: return "(d;d-3,3^3,2^{3(d-5)})";
    case Family::TwoTriples: return "(d;d-3,3^2,2^{3(d-4)})";
    case Family::TripleShared: return "(d;d-3,3,2^{3(d-3)})/shared";
    case Family::TripleConcurrent: return "(d;d-3,3,2^{3(d-3)})/concurrent";
    case Family::Triangle: return "(d;d-3,2^{3(d-2)})";
    case Family::Control: return "control:(d;d-4,2^{...})";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view tag) {
  std::string t;
  for (char c : tag) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  for (Family f : {Family::Pencil, Family::NearPencil, Family::TwoPointTriple, Family::TwoGeneral, Family::Quadruple,
                   Family::ThreeTriples, Family::TwoTriples, Family::TripleShared, Family::TripleConcurrent,
                   Family::Triangle, Family::Control}) {
    if (t == family_tag(f)) return f;
  }
  // The bare triple type defaults to the configuration with the shared line.
  if (t == "(d;d-3,3,2^{3(d-3)})") return Family::TripleShared;
  if (t == "control") return Family::Control;
  return std::nullopt;
}

int family_min_degree(Family f) {
  switch (f) {
    case Family::Pencil: return 1;
    case Family::NearPencil: return 4;
    case Family::TwoPointTriple: return 5;
    case Family::TwoGeneral: return 5;
    case Family::Quadruple: return 7;
    case Family::ThreeTriples: return 6;
    case Family::TwoTriples: return 6;
    case Family::TripleShared: return 6;
    case Family::TripleConcurrent: return 6;
    case Family::Triangle: return 6;
    case Family::Control: return 7;
  }
  return 1;
}

namespace {

std::vector<int> range_block(int lo, int hi) {
  std::vector<int> b;
  for (int i = lo; i <= hi; ++i) b.push_back(i);
  return b;
}

}  // namespace

IncidenceConfig family_config(Family f, int d) {
  if (d < family_min_degree(f)) {
    throw DomainError("degree " + std::to_string(d) + " below the validity range of family " + family_tag(f));
  }
  IncidenceConfig cfg;
  cfg.d = d;
  auto& b = cfg.blocks;
  // Lines 1..k pass through P0; the remaining lines are labelled a = d-2,
  // b = d-1, c = d where the family needs them.
  switch (f) {
    case Family::Pencil:
      if (d >= 3) b.push_back(range_block(1, d));
      break;
    case Family::NearPencil: b.push_back(range_block(1, d - 1)); break;
    case Family::TwoPointTriple:
      b.push_back(range_block(1, d - 2));
      b.push_back({1, d - 1, d});
      break;
    case Family::TwoGeneral: b.push_back(range_block(1, d - 2)); break;
    case Family::Quadruple:
      b.push_back(range_block(1, d - 3));
      b.push_back({1, d - 2, d - 1, d});
      break;
    case Family::ThreeTriples:
      b.push_back(range_block(1, d - 3));
      b.push_back({1, d - 2, d - 1});
      b.push_back({2, d - 2, d});
      b.push_back({3, d - 1, d});
      break;
    case Family::TwoTriples:
      b.push_back(range_block(1, d - 3));
      b.push_back({1, d - 2, d - 1});
      b.push_back({2, d - 2, d});
      break;
    case Family::TripleShared:
      b.push_back(range_block(4, d));
      b.push_back({2, 3, 4});
      break;
    case Family::TripleConcurrent:
      b.push_back(range_block(4, d));
      b.push_back({1, 2, 3});
      break;
    case Family::Triangle: b.push_back(range_block(4, d)); break;
    case Family::Control: b.push_back(range_block(5, d)); break;
  }
  cfg.normalize();
  return cfg;
}

CurveType family_type(Family f, int d) { return type_of(family_config(f, d)); }

namespace {

class CoordinateDraw {
 public:
  CoordinateDraw(std::uint64_t seed, long bound) : rng_(seed), dist_(-bound, bound) {}
  Vec3 vec() {
    for (;;) {
      Vec3 v{Rational(dist_(rng_)), Rational(dist_(rng_)), Rational(dist_(rng_))};
      if (!is_zero(v)) return v;
    }
  }
  ProjPoint point() { return ProjPoint(vec()); }
  ProjLine line() { return ProjLine(vec()); }
  ProjPoint point_on(const ProjLine& l) {
    for (;;) {
      ProjLine m = line();
      if (m == l) continue;
      return meet(l, m);
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

std::optional<LineArrangement> try_realize(const IncidenceConfig& cfg, CoordinateDraw& draw) {
  std::vector<std::optional<ProjPoint>> points(cfg.blocks.size());
  std::vector<ProjLine> lines;
  for (int i = 1; i <= cfg.d; ++i) {
    std::vector<ProjPoint> fixed;
    std::vector<std::size_t> open;
    for (std::size_t b = 0; b < cfg.blocks.size(); ++b) {
      if (!std::binary_search(cfg.blocks[b].begin(), cfg.blocks[b].end(), i)) continue;
      if (points[b]) {
        fixed.push_back(*points[b]);
      } else {
        open.push_back(b);
      }
    }
    ProjLine line;
    if (fixed.size() >= 2) {
      if (fixed[0] == fixed[1]) return std::nullopt;
      line = join(fixed[0], fixed[1]);
      for (std::size_t k = 2; k < fixed.size(); ++k) {
        if (!incident(fixed[k], line)) return std::nullopt;
      }
    } else if (fixed.size() == 1) {
      ProjPoint q = draw.point();
      if (q == fixed[0]) return std::nullopt;
      line = join(fixed[0], q);
    } else {
      line = draw.line();
    }
    for (auto b : open) points[b] = draw.point_on(line);
    lines.push_back(line);
  }
  std::set<ProjLine> distinct(lines.begin(), lines.end());
  if (distinct.size() != lines.size()) return std::nullopt;
  LineArrangement arr(std::move(lines));
  if (!(config_of(arr).config == cfg)) return std::nullopt;
  return arr;
}

}  // namespace

LineArrangement realize_config(const IncidenceConfig& cfg, std::uint64_t seed, long bound, int max_attempts) {
  IncidenceConfig norm = cfg;
  norm.normalize();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    CoordinateDraw draw(seed * 1000003ull + static_cast<std::uint64_t>(attempt), bound);
    if (auto arr = try_realize(norm, draw)) return *arr;
  }
  throw DomainError("realization retries exhausted for " + render(norm) + " (seed " + std::to_string(seed) + ")");
}

LineArrangement realize(Family f, int d, std::uint64_t seed, long bound) {
  return realize_config(family_config(f, d), seed, bound);
}

}  // namespace cremona
