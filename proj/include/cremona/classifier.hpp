#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/configuration.hpp"
#include "cremona/cremona_map.hpp"
#include "cremona/linear_system.hpp"

namespace cremona {

// Short description of a state: the type of a union of lines, "points" when
// nothing but points is left, otherwise the component degrees, e.g.
// "curves{2,1}".
std::string describe(const PlaneCurve& c);

struct CertificateStep {
  CremonaMap map;
  std::string expected;  // describe() of the image after this step
  std::string note;
};

struct Certificate {
  LineArrangement source;
  std::string recipe;
  std::vector<CertificateStep> steps;
  std::vector<ProjPoint> terminal;  // points left at the end, sorted
};

struct ReplayReport {
  bool valid = false;
  int failed_step = -1;  // -1 when valid, steps.size() for a bad terminal state
  std::string reason;
  std::vector<std::string> observed;
  std::vector<ProjPoint> terminal;
};

// Replays a certificate from its source arrangement and checks every
// intermediate state and the final point set.
ReplayReport verify_certificate(const Certificate& cert);

// Family of an arrangement among the classification types, telling the two
// configurations of the single-triple type apart.
std::optional<Family> identify_family(const LineArrangement& arr);

// Whether the arrangement is the degree 9 configuration with a sextuple and
// a triple point sharing a line.
bool is_degree9_special(const LineArrangement& arr);

// Constructive contraction for the pencil, the near pencil, the two (d;d-2)
// families (by quadratic descent) and the degree 9 special configuration.
// The result is replay-verified; general choices are redrawn from the seed
// until replay succeeds. Throws DomainError("no recipe ...") otherwise.
Certificate contract(const LineArrangement& arr, std::uint64_t seed = 1);

struct NonContractWitness {
  int n = 2, m = 3;
  std::vector<std::pair<ProjLine, int>> factors;  // member = product of factors^mult
  HomPoly member{0};
  bool verified = false;  // member satisfies all conditions of ad_{2,3}
};

// Product-of-lines member of ad_{2,3} for the (d-3) families. Throws
// DomainError for other inputs.
NonContractWitness noncontract_witness(const LineArrangement& arr, std::uint64_t seed = 1);

bool jung_is_minimal(const CurveType& t);
int marletta_index(const CurveType& t);

struct StructureReport {
  int m = 0;               // m0 + m1 + m2 of the claimed type
  std::string rule;       // "m=d+1", "m=d+2" or "m=d+3"
  bool holds = false;
  std::string case_name;   // collinear, triangle, two-sides, one-side
  std::vector<int> chosen;  // indices into singular_points() of P0, P1, P2
  std::vector<std::string> violations;
};

// Checks the structural assertions attached to m in {d+1, d+2, d+3}:
// position of P0, P1, P2, which triangle sides are components, how many
// components miss all three points, and the multiplicities of the other
// singular points. Multiplicities are taken from the claimed type; points
// with these multiplicities must exist in the arrangement.
StructureReport structure_check(const LineArrangement& arr, const CurveType& claimed);
StructureReport structure_check(const LineArrangement& arr);

struct SearchBudget {
  int depth = 6;
  int width = 64;
  std::uint64_t seed = 1;
};

struct SearchResult {
  std::optional<Certificate> certificate;
  bool exhausted = false;
  long expanded = 0;
  int depth_reached = 0;
};

// Beam search over quadratic maps (including the tangent kind) keeping all
// images unions of lines. "Exhausted" says nothing about contractibility.
SearchResult search_contraction(const LineArrangement& arr, const SearchBudget& budget = {});

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct ClassifyOptions {
  std::uint64_t seed = 1;
  int kodaira_bound = 12;
  bool compute_kodaira = true;
  SearchBudget budget;
};

struct Classification {
  CurveType type;
  std::string config;
  std::optional<Family> family;
  AdjointSequence adjoints;         // n = 1
  VanishingReport vanishing;        // ad_m for all m with d - 3m >= 0
  bool vanishing_by_rank = false;   // every ad_m empty
  std::optional<bool> vanishing_by_type;  // d >= 12 only
  bool kodaira_computed = false;
  KodairaBound kodaira;
  Verdict contractible = Verdict::Unknown;
  std::string reason;
  std::optional<Certificate> certificate;
  std::optional<NonContractWitness> witness;
  std::optional<SearchResult> search;
};

Classification classify(const LineArrangement& arr, const ClassifyOptions& opt = {});

}  // namespace cremona
