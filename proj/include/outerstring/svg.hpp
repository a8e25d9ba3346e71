#pragma once

#include <optional>
#include <string>

#include "outerstring/geom.hpp"
#include "outerstring/structures.hpp"

namespace outerstring {

struct RenderOptions {
  std::optional<CurveSet> highlight;
  std::optional<Skeleton> skeleton;
  std::optional<Bracket> bracket;
  std::optional<CliqueSystem> clique_system;
};

/// Baseline as a horizontal rule, curves as polylines with y pointing up. The viewBox is the
/// bounding box (baseline included) grown by 5% per side; coordinates print with 4 decimals.
std::string render_svg(const CurveFamily& f, const RenderOptions& opt = {});

}  // namespace outerstring
