#include <gtest/gtest.h>

#include "outerstring/svg.hpp"
#include "test_support.hpp"

using namespace outerstring;
using test::curve;

TEST(Svg, ViewBoxAndCoordinates) {
  auto f = validate_family({curve("a", {{0, 0}, {10, 20}}), curve("b", {{"1/3", 0}, {0, 5}})});
  const auto svg = render_svg(f);
  // x in [0,10], y in [0,20]: margins 1/2 and 1, y flipped
  EXPECT_NE(svg.find("viewBox=\"-0.5000 -21.0000 11.0000 22.0000\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("points=\"0.3333,0.0000 0.0000,-5.0000\""), std::string::npos);
  EXPECT_NE(svg.find("<line class=\"baseline\" x1=\"-0.5000\" y1=\"0.0000\" x2=\"10.5000\" y2=\"0.0000\"/>"),
            std::string::npos);
  EXPECT_EQ(svg, render_svg(f));
}

TEST(Svg, StrokeClasses) {
  auto f = validate_family({curve("u", {{0, 0}, {0, 4}, {6, 4}}), curve("v", {{6, 0}, {6, 3}, {-1, 3}}),
                            curve("s", {{3, 0}, {3, 5}}), curve("p", {{2, 0}, {2, 2}, {"7/2", 2}})});
  IntersectionGraph g(f);
  RenderOptions opt;
  std::vector<std::string> s{"s"}, h{"p"};
  opt.skeleton = make_skeleton(g, "u", "v", s);
  opt.highlight = f.set_of(h);
  const auto svg = render_svg(f, opt);
  EXPECT_NE(svg.find("class=\"curve anchor\" data-id=\"u\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"curve support\" data-id=\"s\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"curve highlight\" data-id=\"p\""), std::string::npos);
}
