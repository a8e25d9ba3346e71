#include "outerstring/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "segment.hpp"

namespace outerstring {

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2pi)
int half_plane(const Rational& dx, const Rational& dy) {
  return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
}

}  // namespace

ExteriorOracle::ExteriorOracle(std::span<const GroundedCurve* const> curves) {
  for (const auto* c : curves)
    for (std::size_t i = 0; i < c->segment_count(); ++i)
      segments_.emplace_back(c->vertices[i], c->vertices[i + 1]);
  if (segments_.empty()) return;
  empty_ = false;

  left_ = right_ = segments_.front().first.x;
  top_ = segments_.front().first.y;
  for (const auto& [a, b] : segments_) {
    for (const Point* p : {&a, &b}) {
      left_ = std::min(left_, p->x);
      right_ = std::max(right_, p->x);
      top_ = std::max(top_, p->y);
    }
  }
  left_ -= 1;
  right_ += 1;
  top_ += 1;

  std::map<Point, int> ids;
  auto vertex = [&](const Point& p) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(points_.size()));
    if (fresh) points_.push_back(p);
    return it->second;
  };
  std::set<std::pair<int, int>> seen;
  auto add_edge = [&](const Point& a, const Point& b, bool frame, bool curve) {
    int u = vertex(a), v = vertex(b);
    if (u == v) return;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return;
    edges_.push_back({u, v, frame, curve});
  };

  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& [a, b] = segments_[i];
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (std::size_t j = 0; j < segments_.size(); ++j) {
      if (i == j) continue;
      auto m = detail::meet(a, b, segments_[j].first, segments_[j].second);
      if (m.kind == detail::MeetKind::None) continue;
      ts.push_back(m.t);
      if (m.kind == detail::MeetKind::Overlap) ts.push_back(m.t_hi);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    auto at = [&](const Rational& t) { return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; };
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) add_edge(at(ts[k]), at(ts[k + 1]), false, true);
  }

  std::vector<Point> ground{Point{left_, Rational(0)}, Point{right_, Rational(0)}};
  for (const auto& p : points_)
    if (p.y == 0) ground.push_back(p);
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  for (std::size_t k = 0; k + 1 < ground.size(); ++k) add_edge(ground[k], ground[k + 1], false, false);
  const Point tl{left_, top_}, tr{right_, top_};
  add_edge(ground.front(), tl, true, false);
  add_edge(tl, tr, true, false);
  add_edge(tr, ground.back(), true, false);

  // half-edge 2e runs from -> to, 2e+1 runs to -> from
  auto tail = [&](int h) { return h % 2 == 0 ? edges_[h / 2].from : edges_[h / 2].to; };
  auto head = [&](int h) { return h % 2 == 0 ? edges_[h / 2].to : edges_[h / 2].from; };
  const int half_edges = static_cast<int>(edges_.size() * 2);
  std::vector<std::vector<int>> outgoing(points_.size());
  for (int h = 0; h < half_edges; ++h) outgoing[tail(h)].push_back(h);
  std::vector<int> position(half_edges);
  for (std::size_t v = 0; v < points_.size(); ++v) {
    auto& out = outgoing[v];
    const Point& o = points_[v];
    std::sort(out.begin(), out.end(), [&](int h1, int h2) {
      const Point& p1 = points_[head(h1)];
      const Point& p2 = points_[head(h2)];
      const Rational dx1 = p1.x - o.x, dy1 = p1.y - o.y;
      const Rational dx2 = p2.x - o.x, dy2 = p2.y - o.y;
      const int s1 = half_plane(dx1, dy1), s2 = half_plane(dx2, dy2);
      if (s1 != s2) return s1 < s2;
      return dx1 * dy2 - dy1 * dx2 > 0;
    });
    for (std::size_t k = 0; k < out.size(); ++k) position[out[k]] = static_cast<int>(k);
  }
  // face on the left: continue with the outgoing edge just clockwise of the twin
  next_.assign(half_edges, -1);
  for (int h = 0; h < half_edges; ++h) {
    const int twin = h ^ 1;
    const auto& around = outgoing[head(h)];
    const int deg = static_cast<int>(around.size());
    next_[h] = around[(position[twin] - 1 + deg) % deg];
  }
  face_.assign(half_edges, -1);
  for (int h = 0; h < half_edges; ++h) {
    if (face_[h] != -1) continue;
    const int id = static_cast<int>(face_exterior_.size());
    bool frame = false;
    int cur = h;
    do {
      face_[cur] = id;
      frame = frame || edges_[cur / 2].frame;
      cur = next_[cur];
    } while (cur != h);
    face_exterior_.push_back(frame);
  }
}

bool ExteriorOracle::contains(const Point& p) const {
  if (p.y < 0) return false;
  if (empty_) return true;
  if (p.x <= left_ || p.x >= right_ || p.y >= top_) return true;
  for (const auto& [a, b] : segments_)
    if (on_segment(p, a, b)) return false;

  int best = -1;
  Rational best_y, best_slope;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Point& a = points_[edges_[e].from];
    const Point& b = points_[edges_[e].to];
    if (a.x == b.x) continue;
    const bool forward = a.x < b.x;
    const Point& lo = forward ? a : b;
    const Point& hi = forward ? b : a;
    if (!(lo.x <= p.x && p.x < hi.x)) continue;
    const Rational slope = (hi.y - lo.y) / (hi.x - lo.x);
    const Rational y = lo.y + slope * (p.x - lo.x);
    if (!(y > p.y || (y == p.y && slope > 0))) continue;
    if (best == -1 || y < best_y || (y == best_y && slope < best_slope)) {
      // the half-edge running toward -x has the face below it on its left
      best = static_cast<int>(e * 2 + (forward ? 1 : 0));
      best_y = y;
      best_slope = slope;
    }
  }
  if (best == -1) return true;
  return face_exterior_[face_[best]];
}

std::vector<Rational> ExteriorOracle::split_parameters(const Point& a, const Point& b) const {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (const auto& [c, d] : segments_) {
    auto m = detail::meet(a, b, c, d);
    if (m.kind == detail::MeetKind::None) continue;
    if (m.kind == detail::MeetKind::Overlap)
      throw Error(ErrorKind::DegenerateProbe, "probe overlaps a curve collinearly");
    ts.push_back(m.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

std::vector<Point> ExteriorOracle::piece_samples(std::span<const Point> polyline) const {
  std::vector<Point> out;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Point& a = polyline[i];
    const Point& b = polyline[i + 1];
    auto ts = split_parameters(a, b);
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      const Rational mid = (ts[k] + ts[k + 1]) / 2;
      out.push_back(Point{a.x + mid * (b.x - a.x), a.y + mid * (b.y - a.y)});
    }
  }
  if (polyline.size() == 1) out.push_back(polyline.front());
  return out;
}

bool ExteriorOracle::meets(std::span<const Point> polyline) const {
  if (empty_) return !polyline.empty();
  for (const auto& p : piece_samples(polyline))
    if (contains(p)) return true;
  return false;
}

bool exterior_membership(const CurveFamily& f, const CurveSet& g, const GroundedCurve& probe) {
  auto curves = f.pointers(g);
  return ExteriorOracle(curves).meets(probe);
}

bool exterior_membership(const CurveFamily& f, const CurveSet& g, const Point& probe) {
  auto curves = f.pointers(g);
  return ExteriorOracle(curves).contains(probe);
}

bool meets_common_exterior(std::span<const Point> polyline, std::span<const ExteriorOracle* const> oracles) {
  if (oracles.empty()) return !polyline.empty();
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Point& a = polyline[i];
    const Point& b = polyline[i + 1];
    std::vector<Rational> ts;
    for (const auto* o : oracles) {
      auto part = o->split_parameters(a, b);
      ts.insert(ts.end(), part.begin(), part.end());
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      const Rational mid = (ts[k] + ts[k + 1]) / 2;
      const Point p{a.x + mid * (b.x - a.x), a.y + mid * (b.y - a.y)};
      if (std::all_of(oracles.begin(), oracles.end(), [&](const ExteriorOracle* o) { return o->contains(p); }))
        return true;
    }
  }
  return false;
}

}  // namespace outerstring
