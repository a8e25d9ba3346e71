#pragma once

#include <span>
#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring {

/// Answers "does this point lie in ext(G)?" for a fixed set of curves G.
///
/// ext(G) is the unbounded component of the closed upper halfplane minus the
/// union of G. The oracle builds the planar arrangement of G's segments, the
/// baseline, and a frame strictly enclosing G. Every curve touches the
/// baseline, so the arrangement is connected and each face has one boundary
/// cycle; the exterior is the face whose cycle touches the frame. A query
/// shoots a vertical ray tilted infinitesimally to +x (lexicographic crossing
/// rule), takes the first edge above the point, and reads off the face below it.
///
/// The structure lives only as long as the oracle; nothing is cached globally.
class ExteriorOracle {
 public:
  explicit ExteriorOracle(std::span<const GroundedCurve* const> curves);

  /// Points on the curves are never exterior; points below the baseline neither.
  bool contains(const Point& p) const;

  /// True iff some point of the polyline lies in ext(G).
  /// Throws Error(DegenerateProbe) if the polyline overlaps a curve collinearly.
  bool meets(std::span<const Point> polyline) const;
  bool meets(const GroundedCurve& probe) const { return meets(probe.vertices); }

  /// One sample point inside each maximal piece of the polyline that avoids the curves.
  std::vector<Point> piece_samples(std::span<const Point> polyline) const;

  /// Split parameters along segment [a, b] where it meets the curves (always includes 0 and 1).
  std::vector<Rational> split_parameters(const Point& a, const Point& b) const;

  std::size_t face_count() const { return face_exterior_.size(); }

 private:
  struct Edge {
    int from;
    int to;
    bool frame;
    bool curve;
  };

  std::vector<std::pair<Point, Point>> segments_;
  std::vector<Point> points_;
  std::vector<Edge> edges_;
  std::vector<int> next_;
  std::vector<int> face_;
  std::vector<bool> face_exterior_;
  bool empty_ = true;
  Rational left_, right_, top_;
};

/// True iff the probe curve has a point in ext of the curves `g` of `f`.
bool exterior_membership(const CurveFamily& f, const CurveSet& g, const GroundedCurve& probe);
/// True iff the point lies in ext of the curves `g` of `f`.
bool exterior_membership(const CurveFamily& f, const CurveSet& g, const Point& probe);

/// True iff some point of the polyline lies in the exterior of every oracle simultaneously.
bool meets_common_exterior(std::span<const Point> polyline, std::span<const ExteriorOracle* const> oracles);

}  // namespace outerstring
