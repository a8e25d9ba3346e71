#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring {

/// One captioned fact about a figure, evaluated by the classifiers.
struct FigureRelation {
  std::string name;
  std::string expected;
  std::string measured;
  bool holds = false;
};

/// Evaluates every caption relation of figure `which` (1..4) on `f`. Classifier errors
/// become failed relations carrying the error text.
std::vector<FigureRelation> figure_relations(int which, const CurveFamily& f);

/// Frozen family file of the figure, compiled into the library.
std::string_view figure_source(int which);

struct FigureFixture {
  CurveFamily family;
  std::vector<FigureRelation> relations;
};

/// Throws Error(PreconditionFailure) for an unknown figure.
FigureFixture figure_fixture(int which);

}  // namespace outerstring
