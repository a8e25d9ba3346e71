#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring::test {

struct Coord {
  Rational value;
  Coord(int v) : value(v) {}
  Coord(const char* v) : value(parse_rational(v)) {}
  Coord(Rational v) : value(std::move(v)) {}
};

inline Point pt(Coord x, Coord y) { return Point{x.value, y.value}; }

inline GroundedCurve curve(std::string id, std::initializer_list<std::pair<Coord, Coord>> vertices) {
  GroundedCurve c{std::move(id), {}};
  for (const auto& [x, y] : vertices) c.vertices.push_back(Point{x.value, y.value});
  return c;
}

}  // namespace outerstring::test
