// Command-line front end for the classifier. Exit status: 0 success,
// 1 domain error (or a certificate that fails to verify), 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cremona/serialize.hpp"

using namespace cremona;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string config;
  std::string lines;
  std::string family;
  int d = 0;
  long bound = 10000;
};

struct Common {
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string output;
};

LineArrangement load_input(const Input& in, std::uint64_t seed) {
  int given = !in.config.empty() + !in.lines.empty() + !in.family.empty();
  if (given != 1) throw UsageError("give exactly one of --config, --lines, --realize");
  if (!in.lines.empty()) return arrangement_from_json(read_json_file(in.lines));
  if (!in.config.empty()) {
    if (in.d != 0) throw UsageError("--d only applies to --realize");
    return realize_config(parse_config(in.config), seed, in.bound);
  }
  auto fam = parse_family(in.family);
  if (!fam) {
    // A concrete configuration is accepted here too.
    IncidenceConfig cfg;
    try {
      cfg = parse_config(in.family);
    } catch (const ParseError&) {
      throw UsageError("unknown family '" + in.family + "'");
    }
    return realize_config(cfg, seed, in.bound);
  }
  if (in.d <= 0) throw UsageError("--realize needs --d");
  return realize(*fam, in.d, seed, in.bound);
}

void add_input(CLI::App* app, Input& in) {
  app->add_option("--config", in.config, "configuration notation, e.g. \"(6;{1,2,3},{1,4,5})\"");
  app->add_option("--lines", in.lines, "arrangement JSON file {\"d\":..,\"lines\":[[a,b,c],..]}");
  app->add_option("--realize", in.family, "family type, e.g. \"(d;d-3,2^{3(d-2)})\"");
  app->add_option("--d", in.d, "degree for --realize")->check(CLI::PositiveNumber);
  app->add_option("--bound", in.bound, "coordinate bound for realizations")->check(CLI::PositiveNumber);
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed,--realize-seed", c.seed, "seed for realizations and general choices")
      ->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app->add_option("-o,--output", c.output, "write the result to this file");
}

void emit(const Common& c, const Json& j, const std::string& text) {
  std::string body = c.format == "json" ? j.dump(2) + "\n" : text;
  if (c.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write " + c.output);
  out << body;
}

std::string dims_text(const std::vector<int>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
  return os.str();
}

std::string adjoint_text(const AdjointSequence& a) {
  std::ostringstream os;
  os << "adjoints n=" << a.n << ":";
  for (std::size_t i = 0; i < a.dims.size(); ++i) os << " ad_{" << a.n << "," << a.n + static_cast<int>(i) << "}=" << a.dims[i];
  os << "\nfirst empty m: " << a.first_empty_m() << "\n";
  return os.str();
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream os;
  os << "recipe: " << cert.recipe << "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    os << "  step " << i + 1 << ": " << s.map.kind() << " " << s.map.homaloidal_type() << " -> " << s.expected;
    if (!s.note.empty()) os << "  [" << s.note << "]";
    os << "\n";
  }
  os << "  terminal points: " << cert.terminal.size() << "\n";
  return os.str();
}

std::vector<ProjPoint> parse_points(const std::string& text) {
  std::vector<ProjPoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::stringstream is(item);
    std::string c;
    Vec3 v;
    std::size_t k = 0;
    while (std::getline(is, c, ',')) {
      if (k == 3) throw ParseError("point '" + item + "' has more than three coordinates");
      v[k++] = parse_rational(c);
    }
    if (k != 3) throw ParseError("point '" + item + "' needs three coordinates");
    out.emplace_back(v);
  }
  return out;
}

// quadratic:P;Q;R   tangent:P;L;R (L a line a,b,c)   dejonquieres:C;S1;...;S2n-2
CremonaMap parse_map(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("map spec must look like kind:points");
  std::string kind = spec.substr(0, colon);
  auto pts = parse_points(spec.substr(colon + 1));
  if (kind == "quadratic") {
    if (pts.size() != 3) throw ParseError("quadratic needs three points");
    return quadratic_map(pts[0], pts[1], pts[2]);
  }
  if (kind == "tangent") {
    if (pts.size() != 3) throw ParseError("tangent needs a point, a line and a point");
    return quadratic_map_tangent(pts[0], ProjLine(pts[1].coords()), pts[2]);
  }
  if (kind == "dejonquieres") {
    if (pts.size() < 3) throw ParseError("dejonquieres needs a center and 2n-2 simple points");
    return dejonquieres_map(pts[0], std::vector<ProjPoint>(pts.begin() + 1, pts.end()));
  }
  throw ParseError("unknown map kind '" + kind + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Cremona contractibility of plane line arrangements"};
  app.require_subcommand(1);
  Input in;
  Common common;
  int n = 1;
  int kodaira_bound = 12;
  SearchBudget budget;
  std::string map_spec, map_file, cert_file;

  auto* classify_cmd = app.add_subcommand("classify", "adjoints, Kodaira bound and contractibility verdict");
  auto* adjoints_cmd = app.add_subcommand("adjoints", "adjoint dimension sequence for one n");
  auto* pluri_cmd = app.add_subcommand("plurigenera", "log plurigenera P_1..P_M");
  auto* transform_cmd = app.add_subcommand("transform", "push the arrangement through one Cremona map");
  auto* contract_cmd = app.add_subcommand("contract", "build and verify a contraction certificate");
  auto* verify_cmd = app.add_subcommand("verify", "replay a certificate file");
  auto* realize_cmd = app.add_subcommand("realize", "exact realization as arrangement JSON");

  for (auto* c : {classify_cmd, adjoints_cmd, pluri_cmd, transform_cmd, contract_cmd, realize_cmd}) {
    add_input(c, in);
    add_common(c, common);
  }
  add_common(verify_cmd, common);
  for (auto* c : {classify_cmd, pluri_cmd}) {
    c->add_option("--kodaira-bound", kodaira_bound, "bound M for P_1..P_M")->check(CLI::PositiveNumber);
  }
  for (auto* c : {classify_cmd, contract_cmd}) {
    c->add_option("--budget-depth", budget.depth, "search depth")->check(CLI::PositiveNumber);
    c->add_option("--budget-width", budget.width, "search beam width")->check(CLI::PositiveNumber);
  }
  adjoints_cmd->add_option("-n", n, "n of ad_{n,m}")->check(CLI::PositiveNumber);
  transform_cmd->add_option("--map", map_spec, "quadratic:P;Q;R | tangent:P;L;R | dejonquieres:C;S1;..");
  transform_cmd->add_option("--map-file", map_file, "map JSON file");
  verify_cmd->add_option("certificate", cert_file, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    budget.seed = common.seed;
    if (*verify_cmd) {
      auto rep = verify_certificate(certificate_from_json(read_json_file(cert_file)));
      std::ostringstream os;
      if (rep.valid) {
        os << "PASS: " << rep.observed.size() << " steps replayed, " << rep.terminal.size() << " terminal points\n";
      } else {
        os << "FAIL at step " << rep.failed_step + 1 << ": " << rep.reason << "\n";
      }
      emit(common, to_json(rep), os.str());
      return rep.valid ? 0 : 1;
    }

    LineArrangement arr = load_input(in, common.seed);

    if (*realize_cmd) {
      // The output is meant to be fed back through --lines.
      if (realize_cmd->get_option("--format")->count() == 0) common.format = "json";
      std::ostringstream os;
      os << "d = " << arr.d() << "  " << type_of(arr).to_string() << "  " << render(config_of(arr).config) << "\n";
      for (const auto& l : arr.lines()) os << "  " << line_to_string(l) << "\n";
      emit(common, to_json(arr), os.str());
      return 0;
    }
    if (*adjoints_cmd) {
      auto seq = adjoint_sequence(arr, n);
      emit(common, to_json(seq), adjoint_text(seq));
      return 0;
    }
    if (*pluri_cmd) {
      Json values = Json::array();
      std::ostringstream os;
      for (int m = 1; m <= kodaira_bound; ++m) {
        auto p = log_plurigenus(arr, m, false);
        values.push_back(p.value);
        os << "P_" << m << " = " << p.value << "\n";
      }
      auto k = kodaira_bounded(arr, kodaira_bound);
      os << "kappa = -infinity up to M=" << kodaira_bound << ": " << (k.negative ? "yes" : "no") << "\n";
      Json j;
      j["plurigenera"] = values;
      j["kodaira"] = to_json(k);
      emit(common, j, os.str());
      return 0;
    }
    if (*transform_cmd) {
      if (map_spec.empty() == map_file.empty()) throw UsageError("give exactly one of --map, --map-file");
      CremonaMap m = map_file.empty() ? parse_map(map_spec) : map_from_json(read_json_file(map_file));
      auto img = apply_to_arrangement(m, arr);
      Json j;
      j["map"] = to_json(m);
      Json surv = Json::array(), contr = Json::array();
      std::ostringstream os;
      os << "map " << m.kind() << " " << m.homaloidal_type() << "\n";
      for (const auto& s : img.surviving) {
        int predicted = m.degree();
        for (const auto& b : m.base_points()) {
          predicted -= b.multiplicity * multiplicity_at(HomPoly::linear(arr[s.source]), b);
        }
        Json e;
        e["source"] = s.source + 1;
        e["image"] = to_json(s.component.equation);
        e["degree"] = s.component.degree();
        e["predicted_degree"] = predicted;
        surv.push_back(std::move(e));
        os << "  L" << s.source + 1 << " -> degree " << s.component.degree() << " (formula " << predicted << ")";
        if (auto l = s.component.as_line()) os << " " << line_to_string(*l);
        os << "\n";
      }
      for (const auto& c : img.contracted) {
        Json e;
        e["source"] = c.source + 1;
        e["point"] = to_json(c.point);
        contr.push_back(std::move(e));
        os << "  L" << c.source + 1 << " -> point " << to_string(c.point) << "\n";
      }
      j["surviving"] = std::move(surv);
      j["contracted"] = std::move(contr);
      emit(common, j, os.str());
      return 0;
    }
    if (*contract_cmd) {
      Certificate cert;
      try {
        cert = contract(arr, common.seed);
      } catch (const DomainError& e) {
        if (std::string(e.what()).rfind("no recipe", 0) != 0) throw;
        auto res = search_contraction(arr, budget);
        if (!res.certificate) throw DomainError("no recipe applies and the search budget was exhausted");
        cert = *res.certificate;
      }
      emit(common, to_json(cert), certificate_text(cert));
      return 0;
    }
    if (*classify_cmd) {
      ClassifyOptions opt;
      opt.seed = common.seed;
      opt.kodaira_bound = kodaira_bound;
      opt.budget = budget;
      auto c = classify(arr, opt);
      std::ostringstream os;
      os << "type: " << c.type.to_string() << "\nconfig: " << c.config << "\n";
      if (c.family) os << "family: " << family_tag(*c.family) << "\n";
      os << "adjoint dims (n=1): " << dims_text(c.adjoints.dims) << "\n";
      os << "ad_{1,m} dims, m = 1..floor(d/3): " << dims_text(c.vanishing.dims) << "\n";
      os << "vanishing adjoints: " << (c.vanishing_by_rank ? "yes" : "no") << "\n";
      if (c.kodaira_computed) {
        os << "log Kodaira dimension -infinity up to M=" << c.kodaira.bound << ": " << (c.kodaira.negative ? "yes" : "no");
        if (c.kodaira.first_positive) os << " (P_" << c.kodaira.first_positive->m << " = " << c.kodaira.first_positive->value << ")";
        os << "\n";
      }
      os << "contractible: " << to_string(c.contractible) << "\nreason: " << c.reason << "\n";
      if (c.certificate) os << certificate_text(*c.certificate);
      if (c.witness) os << "witness: degree " << c.witness->member.degree() << ", verified " << (c.witness->verified ? "yes" : "no") << "\n";
      emit(common, to_json(c), os.str());
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
