#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/configuration.hpp"
#include "cremona/hompoly.hpp"

namespace cremona {

struct PointCondition {
  ProjPoint point;
  int multiplicity = 1;
};

// Restricted to `direction`, the form vanishes to order >= `order` at `point`.
struct TangentCondition {
  ProjPoint point;
  ProjLine direction;
  int order = 2;
};

// Forms of degree `degree` with the given vanishing conditions.
struct LinearSystemSpec {
  int degree = 0;
  std::vector<PointCondition> conditions;
  std::optional<TangentCondition> tangent;
};

// Numerical type of a plane system, e.g. (9; 9, 2, 1^18). Degree may be
// negative.
struct SystemType {
  int degree = 0;
  std::vector<int> mults;
  std::string to_string() const;
  friend bool operator==(const SystemType&, const SystemType&) = default;
};

int virtual_dim(const LinearSystemSpec& s);

struct SolveOptions {
  bool want_basis = false;
  std::uint64_t prime_seed = 0x5eed;
};

struct SystemSolution {
  int dim = -1;                // projective dimension, -1 when empty
  HomPoly fixed_lines{0};      // lines split off because they carry too many conditions
  std::vector<HomPoly> basis;  // exact basis (dim + 1 forms) when requested
};

// Exact projective dimension. "Empty" is certified by a full-rank minor mod
// p (which then is nonzero over Q); "dimension k >= 0" by the mod-p upper
// bound together with k+1 exact kernel vectors checked against every
// condition.
SystemSolution solve_system(const LinearSystemSpec& s, const SolveOptions& opt = {});
int actual_dim(const LinearSystemSpec& s);

// Exact check that f satisfies every condition of s.
bool satisfies(const HomPoly& f, const LinearSystemSpec& s);

// (nd - 3m; n m_0 - m, ..., n m_q - m), non-positive entries dropped.
// Throws DomainError when m < n.
SystemType adjoint_type(const CurveType& t, int n, int m);

LinearSystemSpec adjoint_system(const LineArrangement& arr, int n, int m);
int adjoint_dim(const LineArrangement& arr, int n, int m);

struct AdjointSequence {
  int n = 1;
  std::vector<int> dims;  // m = n, n+1, ...; ends at the first -1
  int first_empty_m() const { return n + static_cast<int>(dims.size()) - 1; }
};

// Stops at the first -1; extra_terms > 0 appends further values of m past
// it (used to check stabilization).
AdjointSequence adjoint_sequence(const LineArrangement& arr, int n, int extra_terms = 0);

// ad_m = ad_{1,m} for every m = 1 .. floor(d/3); past that the degree is
// negative. Emptiness of one ad_m does not imply it for larger m, so
// "vanishing adjoints" needs all of them.
struct VanishingReport {
  std::vector<int> dims;  // index m - 1
  bool vanishing = true;
  std::optional<int> first_nonempty_m;
};

VanishingReport vanishing_adjoints(const LineArrangement& arr);

struct PlurigenusReport {
  int m = 1;
  long value = 0;
  std::optional<HomPoly> witness;
};

PlurigenusReport log_plurigenus(const LineArrangement& arr, int m, bool want_witness = true);

struct KodairaBound {
  bool negative = true;  // P_1 = ... = P_M = 0
  int bound = 12;
  std::optional<PlurigenusReport> first_positive;
};

KodairaBound kodaira_bounded(const LineArrangement& arr, int bound = 12);

}  // namespace cremona
