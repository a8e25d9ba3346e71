#include "outerstring/region.hpp"

namespace outerstring {

bool ClosedRegion::on_boundary(const Point& p) const {
  const std::size_t n = ring_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (on_segment(p, ring_[i], ring_[(i + 1) % n])) return true;
  return false;
}

bool ClosedRegion::contains(const Point& p) const {
  if (ring_.size() < 3) return on_boundary(p);
  if (on_boundary(p)) return true;
  bool inside = false;
  const std::size_t n = ring_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring_[i];
    const Point& b = ring_[j];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (p.x < x) inside = !inside;
  }
  return inside;
}

}  // namespace outerstring
