#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/configuration.hpp"
#include "cremona/hompoly.hpp"

namespace cremona {

struct BasePoint {
  ProjPoint point;
  int multiplicity = 1;
  // Set for a point infinitely near to `point` in the direction of this line.
  std::optional<ProjLine> direction;
  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

// A plane Cremona map with an explicit inverse. Construction verifies
// birationality symbolically, the homaloidal identities, the base point
// multiplicities, and that every exceptional curve divides the Jacobian of
// the inverse; any failure throws DomainError.
class CremonaMap {
 public:
  CremonaMap(std::array<HomPoly, 3> forward, std::array<HomPoly, 3> inverse, std::vector<BasePoint> base_points,
             std::vector<HomPoly> exceptional_curves, std::string kind = "map");

  int degree() const { return forward_[0].degree(); }
  const std::array<HomPoly, 3>& forward() const { return forward_; }
  const std::array<HomPoly, 3>& inverse() const { return inverse_; }
  const std::vector<BasePoint>& base_points() const { return base_points_; }
  // Target-side curves contracted by the inverse.
  const std::vector<HomPoly>& exceptional_curves() const { return exceptional_; }
  const std::string& kind() const { return kind_; }

  // (n; mu_0, ...) with multiplicities non-increasing.
  std::string homaloidal_type() const;

  bool is_base_point(const ProjPoint& p) const;
  // nullopt exactly at the (proper) base points.
  std::optional<ProjPoint> apply(const ProjPoint& p) const;
  // Image of a point that an earlier map created by contracting a curve.
  // Off the base locus this is apply(p). At a base point whose infinitely
  // near base points absorb its whole multiplicity, the strict transform
  // of its exceptional curve is contracted and its image point is returned;
  // at any other base point the curve would come back: nullopt.
  std::optional<ProjPoint> apply_to_tracked(const ProjPoint& p) const;
  std::optional<ProjPoint> apply_inverse(const ProjPoint& p) const;

 private:
  std::array<HomPoly, 3> forward_, inverse_;
  std::vector<BasePoint> base_points_;
  std::vector<HomPoly> exceptional_;
  std::string kind_;
};

// Conjugate of [yz : zx : xy] by the projectivity taking the coordinate
// points to p, q, r. An involution.
CremonaMap quadratic_map(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// Net of conics through p and r, tangent to dir at p.
CremonaMap quadratic_map_tangent(const ProjPoint& p, const ProjLine& dir, const ProjPoint& r);

// Degree n = simples.size()/2 + 1 with center P0 of multiplicity n-1.
// Throws DomainError("inadmissible base scheme") when the net degenerates.
CremonaMap dejonquieres_map(const ProjPoint& center, const std::vector<ProjPoint>& simples);

// Map given by a complete homaloidal net with proper base points,
// obtained by interpolation. Used for the quartic net (4; 2^3, 1^3).
CremonaMap homaloidal_net_map(int degree, const std::vector<BasePoint>& base_points);

// Multiplicity of f at the base point (infinitely near points use the
// tangent cone of f along the direction).
int multiplicity_at(const HomPoly& f, const BasePoint& b);

// An irreducible reduced plane curve with known rational points on it.
struct Component {
  HomPoly equation;
  std::vector<ProjPoint> samples;
  int degree() const { return equation.degree(); }
  std::optional<ProjLine> as_line() const;
};

Component line_component(const ProjLine& l);

struct CurveImage {
  struct Surviving {
    Component component;
    std::size_t source;
  };
  struct Contracted {
    std::size_t source;
    ProjPoint point;
  };
  std::vector<Surviving> surviving;
  std::vector<Contracted> contracted;
};

// Strict transform of each component: f(inverse), with every exceptional
// curve divided out completely. Checks the degree formula per component and
// throws DomainError when it fails.
CurveImage push_forward(const CremonaMap& phi, const std::vector<Component>& components);
CurveImage apply_to_arrangement(const CremonaMap& phi, const LineArrangement& arr);

// Curve components together with the points earlier maps contracted
// components to.
struct PlaneCurve {
  std::vector<Component> components;
  std::vector<ProjPoint> points;

  static PlaneCurve from_arrangement(const LineArrangement& arr);
  int degree() const;
  bool all_lines() const;
  // The components as a line arrangement; nullopt unless all are lines and
  // there is at least one.
  std::optional<LineArrangement> as_arrangement() const;
};

// Image under phi. A tracked point that is a base point of phi would be
// blown up to a curve; that throws DomainError("resurrection: ...").
PlaneCurve apply(const CremonaMap& phi, const PlaneCurve& c);

// Lazily composed maps, applied left to right.
class MapSequence {
 public:
  MapSequence() = default;
  explicit MapSequence(std::vector<CremonaMap> maps) : maps_(std::move(maps)) {}
  void push_back(CremonaMap m) { maps_.push_back(std::move(m)); }
  const std::vector<CremonaMap>& maps() const { return maps_; }
  std::size_t size() const { return maps_.size(); }
  PlaneCurve apply(PlaneCurve c) const;

 private:
  std::vector<CremonaMap> maps_;
};

MapSequence compose(std::vector<CremonaMap> maps);

}  // namespace cremona
