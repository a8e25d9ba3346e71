#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "outerstring/extract.hpp"
#include "outerstring/geom.hpp"
#include "outerstring/structures.hpp"

namespace outerstring {

using Json = nlohmann::ordered_json;

/// Curves of a family file, not yet validated. Throws Error(ParseError); syntax errors
/// carry "line L, column C".
std::vector<GroundedCurve> parse_family_curves(std::string_view text);
CurveFamily parse_family(std::string_view text);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);
CurveFamily load_family(const std::string& path);

/// Integers as JSON numbers, other rationals as "p/q" strings.
Json coordinate_json(const Rational& q);
Json family_json(std::span<const GroundedCurve> curves);
Json family_json(const CurveFamily& f);

Json skeleton_json(const CurveFamily& f, const Skeleton& sk);
Json bracket_json(const CurveFamily& f, const Bracket& br);
Json clique_system_json(const CurveFamily& f, const CliqueSystem& cs);
Json report_json(const CurveFamily& f, const ExtractionReport& rep);

/// {u, v, supports[]}; ids are resolved against the family.
Skeleton parse_skeleton(const IntersectionGraph& g, std::string_view text);
/// {P[], S[]}; s_of, when present, must agree with the first hits.
Bracket parse_bracket(const CurveFamily& f, std::string_view text);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace outerstring
