#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

// A reduced union of d >= 1 pairwise distinct lines.
class LineArrangement {
 public:
  LineArrangement() = default;
  explicit LineArrangement(std::vector<ProjLine> lines);

  int d() const { return static_cast<int>(lines_.size()); }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const ProjLine& operator[](std::size_t i) const { return lines_[i]; }
  friend bool operator==(const LineArrangement&, const LineArrangement&) = default;

 private:
  std::vector<ProjLine> lines_;
};

// (d; {i,...}, {j,...}, ...) with 1-based line indices. Blocks list the
// points of multiplicity >= 3; nodes are implicit.
struct IncidenceConfig {
  int d = 0;
  std::vector<std::vector<int>> blocks;

  // Sorts each block and orders blocks by size (descending), then
  // lexicographically; then checks the invariants.
  void normalize();
  friend bool operator==(const IncidenceConfig&, const IncidenceConfig&) = default;
};

IncidenceConfig parse_config(std::string_view text);
std::string render(const IncidenceConfig& cfg);

// A point lying on at least two lines of an arrangement.
struct SingularPoint {
  ProjPoint point;
  std::vector<int> lines;  // 0-based, increasing
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

// All intersection points, sorted by multiplicity (descending) and then by
// canonical coordinates. This order fixes the labels P0, P1, ...
std::vector<SingularPoint> singular_points(const LineArrangement& arr);

struct ConfigOf {
  IncidenceConfig config;
  std::vector<ProjPoint> block_points;  // parallel to config.blocks
};

ConfigOf config_of(const LineArrangement& arr);

// (d; m0, m1, ..., mr) with m0 >= ... >= mr >= 2.
struct CurveType {
  int d = 0;
  std::vector<int> mults;

  // m_i, or 1 past the end of the list.
  int m(std::size_t i) const { return i < mults.size() ? mults[i] : 1; }
  std::string to_string() const;  // exponential notation, e.g. (12;10,3,2^18)
  friend bool operator==(const CurveType&, const CurveType&) = default;
};

CurveType make_type(int d, std::vector<int> mults);  // sorts and validates
CurveType parse_type(std::string_view text);         // "(12;10,3,2^18)"
CurveType type_of(const IncidenceConfig& cfg);
CurveType type_of(const LineArrangement& arr);

long node_count(const CurveType& t);

class PencilCase : public DomainError {
 public:
  PencilCase() : DomainError("pencil case: d - m0 = 0") {}
};

struct TypeAnalysis {
  int h = 0, epsilon = 0;            // d - m0 = 2h + epsilon
  int delta = 0, eta = 0;            // d = 3 delta + eta
  int mu = 0, nu = 0, tau = 0;       // m0 = delta + mu, mu = 2 nu + tau
  int m = 0;                         // m0 + m1 + m2
  int k = 2;                         // m2 = ... = mk
  int l = 0;                         // m2 - 1 = m_{k+1} = ... = m_{k+l}
};

// Throws PencilCase when d == m0.
TypeAnalysis analyze(const CurveType& t);

// The families of the d >= 12 classification plus the test fixtures built
// on them.
enum class Family {
  Pencil,            // (d;d)
  NearPencil,        // (d;d-1,2^{d-1})
  TwoPointTriple,    // (d;d-2,3,2^{2(d-3)})
  TwoGeneral,        // (d;d-2,2^{2d-3})
  Quadruple,         // (d;d-3,4,2^{3(d-4)})
  ThreeTriples,      // (d;d-3,3^3,2^{3(d-5)})
  TwoTriples,        // (d;d-3,3^2,2^{3(d-4)})
  TripleShared,      // (d;d-3,3,2^{3(d-3)}), P0P1 is a component
  TripleConcurrent,  // (d;d-3,3,2^{3(d-3)}), P0P1 is not a component
  Triangle,          // (d;d-3,2^{3(d-2)})
  Control,           // (d;d-4,2^{...}) with four general lines
};

std::vector<Family> classified_families();  // the nine types, both configurations of the triple type
std::string family_tag(Family f);
std::optional<Family> parse_family(std::string_view tag);
int family_min_degree(Family f);
IncidenceConfig family_config(Family f, int d);
CurveType family_type(Family f, int d);

// Greedy exact realization of a configuration with pseudo-random integer
// coordinates in [-bound, bound]; verified with config_of and redrawn on
// unintended concurrences. Throws DomainError after max_attempts.
LineArrangement realize_config(const IncidenceConfig& cfg, std::uint64_t seed, long bound = 10000,
                               int max_attempts = 64);
LineArrangement realize(Family f, int d, std::uint64_t seed, long bound = 10000);

}  // namespace cremona
