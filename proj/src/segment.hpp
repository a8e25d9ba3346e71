#pragma once

#include "outerstring/geom.hpp"

namespace outerstring::detail {

inline Rational cross(const Point& o, const Point& a, const Point& b) {
  return Rational((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
}

enum class MeetKind { None, Point, Overlap };

/// How the closed segments a0a1 and b0b1 meet. For Point, `t`/`u` are the
/// parameters on a and b. For Overlap, [t, t_hi] is the shared range on a.
struct SegmentMeet {
  MeetKind kind = MeetKind::None;
  Rational t;
  Rational u;
  Rational t_hi;
  Point at;
};

SegmentMeet meet(const Point& a0, const Point& a1, const Point& b0, const Point& b1);

inline bool boxes_overlap(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  const auto& amin_x = a0.x < a1.x ? a0.x : a1.x;
  const auto& amax_x = a0.x < a1.x ? a1.x : a0.x;
  const auto& bmin_x = b0.x < b1.x ? b0.x : b1.x;
  const auto& bmax_x = b0.x < b1.x ? b1.x : b0.x;
  if (amax_x < bmin_x || bmax_x < amin_x) return false;
  const auto& amin_y = a0.y < a1.y ? a0.y : a1.y;
  const auto& amax_y = a0.y < a1.y ? a1.y : a0.y;
  const auto& bmin_y = b0.y < b1.y ? b0.y : b1.y;
  const auto& bmax_y = b0.y < b1.y ? b1.y : b0.y;
  return !(amax_y < bmin_y || bmax_y < amin_y);
}

}  // namespace outerstring::detail
