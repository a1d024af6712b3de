#include "cremona/serialize.hpp"

#include <fstream>
#include <sstream>

namespace cremona {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected a triple of rational strings");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json vec_to_json(const Vec3& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Json points_to_json(const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string or an integer");
}

Json to_json(const ProjPoint& p) { return vec_to_json(p.coords()); }

ProjPoint point_from_json(const Json& j) {
  try {
    return ProjPoint(vec_from_json(j));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json line_to_json(const ProjLine& l) { return vec_to_json(l.coords()); }

ProjLine line_from_json(const Json& j) {
  try {
    return ProjLine(vec_from_json(j));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const HomPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e[0], e[1], e[2], to_string(c)}));
  Json j;
  j["degree"] = f.degree();
  j["terms"] = std::move(terms);
  return j;
}

HomPoly poly_from_json(const Json& j) {
  const int d = int_field(j, "degree");
  if (d < 0) throw ParseError("negative degree");
  HomPoly::Terms terms;
  for (const auto& t : array_field(j, "terms")) {
    if (!t.is_array() || t.size() != 4) throw ParseError("term must be [i, j, k, \"c\"]");
    Monomial e{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer() || t[i].get<int>() < 0) throw ParseError("bad exponent");
      e[i] = t[i].get<int>();
    }
    if (e[0] + e[1] + e[2] != d) throw ParseError("term degree differs from the polynomial degree");
    Rational c = rational_from_json(t[3]);
    if (is_zero(c)) continue;
    if (!terms.emplace(e, c).second) throw ParseError("repeated monomial");
  }
  return HomPoly(d, std::move(terms));
}

Json to_json(const LineArrangement& arr) {
  Json lines = Json::array();
  for (const auto& l : arr.lines()) lines.push_back(line_to_json(l));
  Json j;
  j["d"] = arr.d();
  j["lines"] = std::move(lines);
  return j;
}

LineArrangement arrangement_from_json(const Json& j) {
  const int d = int_field(j, "d");
  std::vector<ProjLine> lines;
  for (const auto& l : array_field(j, "lines")) lines.push_back(line_from_json(l));
  if (static_cast<int>(lines.size()) != d) throw ParseError("\"d\" does not match the number of lines");
  return LineArrangement(std::move(lines));
}

Json to_json(const BasePoint& b) {
  Json j;
  j["point"] = to_json(b.point);
  j["multiplicity"] = b.multiplicity;
  if (b.direction) j["direction"] = line_to_json(*b.direction);
  return j;
}

BasePoint base_point_from_json(const Json& j) {
  BasePoint b;
  b.point = point_from_json(field(j, "point"));
  b.multiplicity = int_field(j, "multiplicity");
  if (b.multiplicity < 1) throw ParseError("base point multiplicity must be positive");
  if (j.contains("direction")) b.direction = line_from_json(j.at("direction"));
  return b;
}

Json to_json(const CremonaMap& m) {
  Json j;
  j["kind"] = m.kind();
  j["degree"] = m.degree();
  j["type"] = m.homaloidal_type();
  Json bps = Json::array();
  for (const auto& b : m.base_points()) bps.push_back(to_json(b));
  j["base_points"] = std::move(bps);
  Json fwd = Json::array(), inv = Json::array(), exc = Json::array();
  for (const auto& f : m.forward()) fwd.push_back(to_json(f));
  for (const auto& f : m.inverse()) inv.push_back(to_json(f));
  for (const auto& f : m.exceptional_curves()) exc.push_back(to_json(f));
  j["forward"] = std::move(fwd);
  j["inverse"] = std::move(inv);
  j["exceptional"] = std::move(exc);
  return j;
}

CremonaMap map_from_json(const Json& j) {
  auto triple = [&](const char* key) {
    const Json& a = array_field(j, key);
    if (a.size() != 3) throw ParseError(std::string("'") + key + "' must hold three forms");
    return std::array<HomPoly, 3>{poly_from_json(a[0]), poly_from_json(a[1]), poly_from_json(a[2])};
  };
  auto fwd = triple("forward");
  auto inv = triple("inverse");
  std::vector<BasePoint> bps;
  for (const auto& b : array_field(j, "base_points")) bps.push_back(base_point_from_json(b));
  std::vector<HomPoly> exc;
  for (const auto& f : array_field(j, "exceptional")) exc.push_back(poly_from_json(f));
  std::string kind = j.contains("kind") ? string_field(j, "kind") : "map";
  CremonaMap m(std::move(fwd), std::move(inv), std::move(bps), std::move(exc), kind);
  if (j.contains("degree") && int_field(j, "degree") != m.degree()) throw ParseError("stated degree differs from the forms");
  return m;
}

Json to_json(const Certificate& c) {
  Json j;
  j["source"] = to_json(c.source);
  j["recipe"] = c.recipe;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step;
    step["map"] = to_json(s.map);
    step["expected"] = s.expected;
    step["note"] = s.note;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["terminal"] = points_to_json(c.terminal);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.source = arrangement_from_json(field(j, "source"));
  c.recipe = j.contains("recipe") ? string_field(j, "recipe") : "";
  for (const auto& s : array_field(j, "steps")) {
    c.steps.push_back({map_from_json(field(s, "map")), string_field(s, "expected"),
                       s.contains("note") ? string_field(s, "note") : ""});
  }
  for (const auto& p : array_field(j, "terminal")) c.terminal.push_back(point_from_json(p));
  return c;
}

Json to_json(const ReplayReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["failed_step"] = r.failed_step;
  j["reason"] = r.reason;
  j["observed"] = r.observed;
  j["terminal"] = points_to_json(r.terminal);
  return j;
}

Json to_json(const AdjointSequence& a) {
  Json j;
  j["n"] = a.n;
  j["dims"] = a.dims;
  j["first_empty_m"] = a.first_empty_m();
  return j;
}

Json to_json(const PlurigenusReport& p) {
  Json j;
  j["m"] = p.m;
  j["value"] = p.value;
  if (p.witness) j["witness"] = to_json(*p.witness);
  return j;
}

Json to_json(const KodairaBound& k) {
  Json j;
  j["negative"] = k.negative;
  j["bound"] = k.bound;
  if (k.first_positive) j["first_positive"] = to_json(*k.first_positive);
  return j;
}

Json to_json(const NonContractWitness& w) {
  Json j;
  j["n"] = w.n;
  j["m"] = w.m;
  Json factors = Json::array();
  for (const auto& [l, e] : w.factors) {
    Json f;
    f["line"] = line_to_json(l);
    f["multiplicity"] = e;
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  j["member"] = to_json(w.member);
  j["verified"] = w.verified;
  return j;
}

Json to_json(const SearchResult& s) {
  Json j;
  j["found"] = s.certificate.has_value();
  j["exhausted"] = s.exhausted;
  j["expanded"] = s.expanded;
  j["depth_reached"] = s.depth_reached;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["type"] = c.type.to_string();
  j["config"] = c.config;
  j["family"] = c.family ? Json(family_tag(*c.family)) : Json(nullptr);
  j["adjoints"] = to_json(c.adjoints);
  j["vanishing_adjoints"] = c.vanishing_by_rank;
  j["adjoint_dims_all_m"] = c.vanishing.dims;
  j["first_nonempty_m"] = c.vanishing.first_nonempty_m ? Json(*c.vanishing.first_nonempty_m) : Json(nullptr);
  j["vanishing_by_type"] = c.vanishing_by_type ? Json(*c.vanishing_by_type) : Json(nullptr);
  if (c.kodaira_computed) {
    j["kodaira"] = to_json(c.kodaira);
  } else {
    j["kodaira"] = nullptr;
  }
  switch (c.contractible) {
    case Verdict::Yes: j["contractible"] = true; break;
    case Verdict::No: j["contractible"] = false; break;
    case Verdict::Unknown: j["contractible"] = nullptr; break;
  }
  j["verdict"] = to_string(c.contractible);
  j["reason"] = c.reason;
  j["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  j["search"] = c.search ? to_json(*c.search) : Json(nullptr);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace cremona
