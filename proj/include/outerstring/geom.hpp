#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "outerstring/curve_set.hpp"
#include "outerstring/errors.hpp"
#include "outerstring/rational.hpp"

namespace outerstring {

struct Point {
  Rational x;
  Rational y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Polyline with exact vertices; vertices[0] is the basepoint on the baseline y = 0,
/// every other vertex lies strictly above it.
struct GroundedCurve {
  std::string id;
  std::vector<Point> vertices;

  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  const Point& basepoint() const { return vertices.front(); }
};

/// A position along a curve. (segment, t) is canonical: t < 1 unless the
/// point is the final vertex, so each point of a simple curve has one encoding.
struct CurvePoint {
  std::size_t segment = 0;
  Rational t;
  Point at;
};

inline bool operator<(const CurvePoint& a, const CurvePoint& b) {
  return a.segment < b.segment || (a.segment == b.segment && a.t < b.t);
}
inline bool operator==(const CurvePoint& a, const CurvePoint& b) {
  return a.segment == b.segment && a.t == b.t;
}
inline bool operator<=(const CurvePoint& a, const CurvePoint& b) { return !(b < a); }

CurvePoint curve_point(const GroundedCurve& c, std::size_t segment, const Rational& t);
inline CurvePoint curve_start(const GroundedCurve& c) { return curve_point(c, 0, Rational(0)); }
inline CurvePoint curve_end(const GroundedCurve& c) {
  return curve_point(c, c.segment_count() - 1, Rational(1));
}

/// Closed, open, or half-open interval of positions along one curve.
struct Span {
  CurvePoint start;
  CurvePoint end;
  bool start_closed = true;
  bool end_closed = true;

  static Span whole(const GroundedCurve& c) { return {curve_start(c), curve_end(c), true, true}; }
  /// Initial part of the curve from its basepoint up to `end`.
  static Span prefix(const GroundedCurve& c, const CurvePoint& end, bool end_closed) {
    return {curve_start(c), end, true, end_closed};
  }

  bool contains(const CurvePoint& p) const {
    if (p < start || end < p) return false;
    if (p == start && !start_closed) return false;
    if (p == end && !end_closed) return false;
    return true;
  }
};

/// Subcurve identified by curve id; the serializable form.
struct Subcurve {
  std::string curve;
  Span span;
};

/// Subcurve bound to its geometry; the form geometric predicates consume.
struct Piece {
  const GroundedCurve* curve = nullptr;
  Span span;

  static Piece whole(const GroundedCurve& c) { return {&c, Span::whole(c)}; }
};

/// Vertices of the piece as a polyline, from span start to span end.
std::vector<Point> piece_polyline(const Piece& piece);

struct Crossing {
  CurvePoint first;
  CurvePoint second;
};

/// All intersection points of two curves, sorted along the first.
/// Throws Error(DegenerateIntersection) if two segments overlap collinearly.
std::vector<Crossing> curve_intersections(const GroundedCurve& a, const GroundedCurve& b);

/// Cheaper emptiness test for curve_intersections.
bool curves_intersect(const GroundedCurve& a, const GroundedCurve& b);

struct Hit {
  CurvePoint on_curve;
  std::size_t obstacle = 0;
  CurvePoint on_obstacle;
};

/// First point of `c`, going from its basepoint, that lies on one of the obstacles.
/// Open obstacle endpoints are not hits.
std::optional<Hit> first_hit(const GroundedCurve& c, std::span<const Piece> obstacles);

/// Pairs of positions on non-adjacent segments of `c` at the same point.
std::vector<Crossing> self_crossings(const GroundedCurve& c);

/// Point-set intersection test respecting open endpoints.
bool subcurves_intersect(const Piece& a, const Piece& b);

/// Exact test whether `p` lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

/// True iff `p` lies on the curve.
bool point_on_curve(const Point& p, const GroundedCurve& c);

enum class ViolationKind {
  DuplicateBasepoint,
  BaselineViolation,
  MalformedCurve,
  CollinearOverlap,
  EndpointTouch,
  TriplePoint,
  VertexIntersection,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> curves;
  std::optional<Point> where;
  std::string detail;
};

std::string describe(const Violation& v);

/// All invariant and general-position violations of the curves, in a stable order.
std::vector<Violation> check_curves(std::span<const GroundedCurve* const> curves);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Curves sorted by basepoint; index order realizes the left-to-right order.
class CurveFamily {
 public:
  CurveFamily() = default;

  std::size_t size() const { return curves_.size(); }
  bool empty() const { return curves_.empty(); }
  const GroundedCurve& operator[](std::size_t i) const { return curves_[i]; }
  const std::vector<GroundedCurve>& curves() const { return curves_; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws Error(UnknownCurve).
  std::size_t require(std::string_view id) const;

  CurveSet all() const { return CurveSet::full(curves_.size()); }
  CurveSet none() const { return CurveSet(curves_.size()); }
  CurveSet set_of(std::span<const std::string> ids) const;
  std::vector<std::string> ids_of(const CurveSet& s) const;

  /// The member curves of `s` as a standalone (already valid) family.
  CurveFamily subfamily(const CurveSet& s) const;

  /// Pointers to the members of `s`, in index order.
  std::vector<const GroundedCurve*> pointers(const CurveSet& s) const;

  friend CurveFamily validate_family(std::vector<GroundedCurve> raw);

 private:
  std::vector<GroundedCurve> curves_;
  std::unordered_map<std::string, std::size_t> index_;
  void reindex();
};

/// Sorts by basepoint and verifies every invariant; throws ValidationError listing
/// all violations otherwise.
CurveFamily validate_family(std::vector<GroundedCurve> raw);

/// General-position violations between `probe` and the curves of `s`, plus the probe's own shape.
std::vector<Violation> check_probe(const CurveFamily& f, const CurveSet& s, const GroundedCurve& probe);

}  // namespace outerstring
