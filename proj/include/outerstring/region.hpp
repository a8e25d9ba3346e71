#pragma once

#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring {

/// Closed region enclosed by a closed polygon given as a vertex ring (last vertex joins the first).
/// Boundary points belong to the region. Interior uses the even-odd rule with a
/// half-open crossing convention, evaluated exactly.
class ClosedRegion {
 public:
  ClosedRegion() = default;
  explicit ClosedRegion(std::vector<Point> ring) : ring_(std::move(ring)) {}

  const std::vector<Point>& ring() const { return ring_; }
  bool on_boundary(const Point& p) const;
  bool contains(const Point& p) const;

 private:
  std::vector<Point> ring_;
};

}  // namespace outerstring
