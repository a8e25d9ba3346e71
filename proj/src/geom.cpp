#include "outerstring/geom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "segment.hpp"

namespace outerstring {

namespace detail {

SegmentMeet meet(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  SegmentMeet m;
  if (!boxes_overlap(a0, a1, b0, b1)) return m;
  const Rational rx = a1.x - a0.x, ry = a1.y - a0.y;
  const Rational sx = b1.x - b0.x, sy = b1.y - b0.y;
  const Rational qx = b0.x - a0.x, qy = b0.y - a0.y;
  const Rational den = rx * sy - ry * sx;
  if (den == 0) {
    if (qx * ry - qy * rx != 0) return m;  // parallel, distinct lines
    const Rational rr = rx * rx + ry * ry;
    const Rational t0 = (qx * rx + qy * ry) / rr;
    const Rational t1 = ((b1.x - a0.x) * rx + (b1.y - a0.y) * ry) / rr;
    Rational lo = std::max(Rational(0), std::min(t0, t1));
    Rational hi = std::min(Rational(1), std::max(t0, t1));
    if (lo > hi) return m;
    m.t = lo;
    m.at = Point{a0.x + lo * rx, a0.y + lo * ry};
    const Rational ss = sx * sx + sy * sy;
    m.u = ((m.at.x - b0.x) * sx + (m.at.y - b0.y) * sy) / ss;
    if (lo == hi) {
      m.kind = MeetKind::Point;
    } else {
      m.kind = MeetKind::Overlap;
      m.t_hi = hi;
    }
    return m;
  }
  const Rational t = (qx * sy - qy * sx) / den;
  const Rational u = (qx * ry - qy * rx) / den;
  if (t < 0 || t > 1 || u < 0 || u > 1) return m;
  m.kind = MeetKind::Point;
  m.t = t;
  m.u = u;
  m.at = Point{a0.x + t * rx, a0.y + t * ry};
  return m;
}

}  // namespace detail

using detail::MeetKind;

CurvePoint curve_point(const GroundedCurve& c, std::size_t segment, const Rational& t) {
  CurvePoint p;
  p.segment = segment;
  p.t = t;
  if (p.t == 1 && segment + 1 < c.segment_count()) {
    p.segment = segment + 1;
    p.t = 0;
  }
  const Point& a = c.vertices[p.segment];
  const Point& b = c.vertices[p.segment + 1];
  if (p.t == 0) {
    p.at = a;
  } else if (p.t == 1) {
    p.at = b;
  } else {
    p.at = Point{a.x + p.t * (b.x - a.x), a.y + p.t * (b.y - a.y)};
  }
  return p;
}

std::vector<Point> piece_polyline(const Piece& piece) {
  const auto& v = piece.curve->vertices;
  std::vector<Point> out;
  out.push_back(piece.span.start.at);
  for (std::size_t k = piece.span.start.segment + 1; k <= piece.span.end.segment; ++k)
    if (!(v[k] == out.back())) out.push_back(v[k]);
  if (!(piece.span.end.at == out.back())) out.push_back(piece.span.end.at);
  return out;
}

std::vector<Crossing> curve_intersections(const GroundedCurve& a, const GroundedCurve& b) {
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      auto m = detail::meet(a.vertices[i], a.vertices[i + 1], b.vertices[j], b.vertices[j + 1]);
      if (m.kind == MeetKind::None) continue;
      if (m.kind == MeetKind::Overlap)
        throw Error(ErrorKind::DegenerateIntersection,
                    "curves '" + a.id + "' and '" + b.id + "' overlap collinearly");
      out.push_back({curve_point(a, i, m.t), curve_point(b, j, m.u)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
    return x.first < y.first || (x.first == y.first && x.second < y.second);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Crossing& x, const Crossing& y) {
                          return x.first == y.first && x.second == y.second;
                        }),
            out.end());
  return out;
}

bool curves_intersect(const GroundedCurve& a, const GroundedCurve& b) {
  for (std::size_t i = 0; i < a.segment_count(); ++i)
    for (std::size_t j = 0; j < b.segment_count(); ++j)
      if (detail::meet(a.vertices[i], a.vertices[i + 1], b.vertices[j], b.vertices[j + 1]).kind !=
          MeetKind::None)
        return true;
  return false;
}

std::optional<Hit> first_hit(const GroundedCurve& c, std::span<const Piece> obstacles) {
  std::optional<Hit> best;
  for (std::size_t k = 0; k < obstacles.size(); ++k) {
    const Piece& ob = obstacles[k];
    for (const auto& x : curve_intersections(c, *ob.curve)) {
      if (!ob.span.contains(x.second)) continue;
      if (!best || x.first < best->on_curve) best = Hit{x.first, k, x.second};
      break;  // sorted along c: later crossings with this obstacle cannot be earlier
    }
  }
  return best;
}

std::vector<Crossing> self_crossings(const GroundedCurve& c) {
  std::vector<Crossing> out;
  const auto n = c.segment_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      auto m = detail::meet(c.vertices[i], c.vertices[i + 1], c.vertices[j], c.vertices[j + 1]);
      if (m.kind == MeetKind::Point) out.push_back({curve_point(c, i, m.t), curve_point(c, j, m.u)});
    }
  }
  return out;
}

bool subcurves_intersect(const Piece& a, const Piece& b) {
  if (a.curve == b.curve || a.curve->id == b.curve->id) {
    const CurvePoint& lo = a.span.start < b.span.start ? b.span.start : a.span.start;
    const CurvePoint& hi = a.span.end < b.span.end ? a.span.end : b.span.end;
    if (lo < hi) return true;
    if (lo == hi && a.span.contains(lo) && b.span.contains(lo)) return true;
    for (const auto& x : self_crossings(*a.curve)) {
      if (a.span.contains(x.first) && b.span.contains(x.second)) return true;
      if (a.span.contains(x.second) && b.span.contains(x.first)) return true;
    }
    return false;
  }
  for (const auto& x : curve_intersections(*a.curve, *b.curve))
    if (a.span.contains(x.first) && b.span.contains(x.second)) return true;
  return false;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (detail::cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool point_on_curve(const Point& p, const GroundedCurve& c) {
  for (std::size_t i = 0; i < c.segment_count(); ++i)
    if (on_segment(p, c.vertices[i], c.vertices[i + 1])) return true;
  return false;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateBasepoint: return "DuplicateBasepoint";
    case ViolationKind::BaselineViolation: return "BaselineViolation";
    case ViolationKind::MalformedCurve: return "MalformedCurve";
    case ViolationKind::CollinearOverlap: return "CollinearOverlap";
    case ViolationKind::EndpointTouch: return "EndpointTouch";
    case ViolationKind::TriplePoint: return "TriplePoint";
    case ViolationKind::VertexIntersection: return "VertexIntersection";
  }
  return "Unknown";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << to_string(v.kind) << " [";
  for (std::size_t i = 0; i < v.curves.size(); ++i) os << (i ? ", " : "") << v.curves[i];
  os << "]";
  if (v.where) os << " at (" << to_string(v.where->x) << ", " << to_string(v.where->y) << ")";
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

namespace {

ErrorKind error_kind_for(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateBasepoint: return ErrorKind::DuplicateBasepoint;
    case ViolationKind::BaselineViolation: return ErrorKind::BaselineViolation;
    case ViolationKind::MalformedCurve: return ErrorKind::MalformedCurve;
    default: return ErrorKind::DegenerateIntersection;
  }
}

std::string join_violations(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += describe(v);
  }
  return out;
}

bool malformed(const GroundedCurve& c) {
  if (c.vertices.size() < 2) return true;
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
    if (c.vertices[i] == c.vertices[i + 1]) return true;
  return false;
}

void check_shape(const GroundedCurve& c, std::vector<Violation>& out) {
  if (c.vertices.size() < 2) {
    out.push_back({ViolationKind::MalformedCurve, {c.id}, std::nullopt, "fewer than two vertices"});
    return;
  }
  if (c.vertices[0].y != 0)
    out.push_back({ViolationKind::BaselineViolation, {c.id}, c.vertices[0], "basepoint is not on the baseline"});
  for (std::size_t i = 1; i < c.vertices.size(); ++i)
    if (c.vertices[i].y <= 0)
      out.push_back({ViolationKind::BaselineViolation, {c.id}, c.vertices[i], "vertex " + std::to_string(i) + " is not above the baseline"});
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
    if (c.vertices[i] == c.vertices[i + 1])
      out.push_back({ViolationKind::MalformedCurve, {c.id}, c.vertices[i], "repeated consecutive vertex"});
  for (std::size_t i = 1; i + 1 < c.vertices.size(); ++i) {
    const Point& a = c.vertices[i - 1];
    const Point& b = c.vertices[i];
    const Point& d = c.vertices[i + 1];
    if (a == b || b == d) continue;
    const Rational dot = (b.x - a.x) * (d.x - b.x) + (b.y - a.y) * (d.y - b.y);
    if (detail::cross(a, b, d) == 0 && dot < 0)
      out.push_back({ViolationKind::MalformedCurve, {c.id}, b, "curve folds back on itself"});
  }
}

bool is_curve_end(const GroundedCurve& c, std::size_t seg, const Rational& t) {
  return (seg == 0 && t == 0) || (seg + 1 == c.segment_count() && t == 1);
}

void check_pair(const GroundedCurve& a, const GroundedCurve& b, std::vector<Violation>& out,
                std::map<Point, std::set<std::size_t>>& proper, std::size_t ia, std::size_t ib) {
  std::set<std::tuple<int, Point>> seen;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      auto m = detail::meet(a.vertices[i], a.vertices[i + 1], b.vertices[j], b.vertices[j + 1]);
      if (m.kind == MeetKind::None) continue;
      if (m.kind == MeetKind::Overlap) {
        if (seen.insert({0, m.at}).second)
          out.push_back({ViolationKind::CollinearOverlap, {a.id, b.id}, m.at, "segments overlap collinearly"});
        continue;
      }
      const bool va = m.t == 0 || m.t == 1;
      const bool vb = m.u == 0 || m.u == 1;
      if (va || vb) {
        const bool end = (va && is_curve_end(a, i, m.t)) || (vb && is_curve_end(b, j, m.u));
        const auto kind = end ? ViolationKind::EndpointTouch : ViolationKind::VertexIntersection;
        if (seen.insert({end ? 1 : 2, m.at}).second)
          out.push_back({kind, {a.id, b.id}, m.at,
                         end ? "curves touch at a curve endpoint" : "intersection at a polyline vertex"});
        continue;
      }
      auto& owners = proper[m.at];
      owners.insert(ia);
      owners.insert(ib);
    }
  }
}

}  // namespace

std::vector<Violation> check_curves(std::span<const GroundedCurve* const> curves) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  for (const auto* c : curves) {
    if (!ids.insert(c->id).second)
      out.push_back({ViolationKind::MalformedCurve, {c->id}, std::nullopt, "duplicate curve id"});
    check_shape(*c, out);
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (!curves[i]->vertices.empty()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return curves[a]->basepoint().x < curves[b]->basepoint().x;
  });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto* a = curves[order[k]];
    const auto* b = curves[order[k + 1]];
    if (a->basepoint().x == b->basepoint().x)
      out.push_back({ViolationKind::DuplicateBasepoint, {a->id, b->id}, a->basepoint(), "equal basepoints"});
  }
  std::map<Point, std::set<std::size_t>> proper;
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const auto* a = curves[order[x]];
      const auto* b = curves[order[y]];
      if (malformed(*a) || malformed(*b)) continue;
      check_pair(*a, *b, out, proper, order[x], order[y]);
    }
  }
  for (const auto& [pt, owners] : proper) {
    if (owners.size() < 3) continue;
    Violation v{ViolationKind::TriplePoint, {}, pt, "point lies on three or more curves"};
    for (auto i : owners) v.curves.push_back(curves[i]->id);
    out.push_back(std::move(v));
  }
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorKind::DegenerateIntersection : error_kind_for(violations.front().kind),
            join_violations(violations)),
      violations_(std::move(violations)) {}

std::optional<std::size_t> CurveFamily::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CurveFamily::require(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw Error(ErrorKind::UnknownCurve, "no curve with id '" + std::string(id) + "'");
}

CurveSet CurveFamily::set_of(std::span<const std::string> ids) const {
  CurveSet s = none();
  for (const auto& id : ids) s.insert(require(id));
  return s;
}

std::vector<std::string> CurveFamily::ids_of(const CurveSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(curves_[i].id); });
  return out;
}

CurveFamily CurveFamily::subfamily(const CurveSet& s) const {
  CurveFamily f;
  s.for_each([&](std::size_t i) { f.curves_.push_back(curves_[i]); });
  f.reindex();
  return f;
}

std::vector<const GroundedCurve*> CurveFamily::pointers(const CurveSet& s) const {
  std::vector<const GroundedCurve*> out;
  s.for_each([&](std::size_t i) { out.push_back(&curves_[i]); });
  return out;
}

void CurveFamily::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < curves_.size(); ++i) index_.emplace(curves_[i].id, i);
}

CurveFamily validate_family(std::vector<GroundedCurve> raw) {
  std::vector<const GroundedCurve*> ptrs;
  for (const auto& c : raw) ptrs.push_back(&c);
  auto violations = check_curves(ptrs);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  std::stable_sort(raw.begin(), raw.end(), [](const GroundedCurve& a, const GroundedCurve& b) {
    return a.basepoint().x < b.basepoint().x;
  });
  CurveFamily f;
  f.curves_ = std::move(raw);
  f.reindex();
  return f;
}

std::vector<Violation> check_probe(const CurveFamily& f, const CurveSet& s, const GroundedCurve& probe) {
  auto ptrs = f.pointers(s);
  std::vector<Violation> out;
  check_shape(probe, out);
  if (!out.empty()) return out;
  std::map<Point, std::set<std::size_t>> proper;
  for (std::size_t k = 0; k < ptrs.size(); ++k) {
    if (ptrs[k]->basepoint().x == probe.basepoint().x)
      out.push_back({ViolationKind::DuplicateBasepoint, {ptrs[k]->id, probe.id}, probe.basepoint(), "equal basepoints"});
    check_pair(probe, *ptrs[k], out, proper, ptrs.size(), k);
  }
  // a probe crossing through an existing intersection point is a triple point
  for (const auto& [pt, owners] : proper) {
    std::size_t on = 0;
    for (const auto* c : ptrs)
      if (point_on_curve(pt, *c)) ++on;
    if (on >= 2) out.push_back({ViolationKind::TriplePoint, {probe.id}, pt, "probe passes through an intersection point"});
  }
  return out;
}

}  // namespace outerstring
