#include <gtest/gtest.h>

#include "outerstring/arrangement.hpp"
#include "outerstring/figures.hpp"
#include "outerstring/gen.hpp"
#include "outerstring/io.hpp"

using namespace outerstring;

TEST(Figures, AllCaptionRelationsHold) {
  for (int which = 1; which <= 4; ++which) {
    auto fx = figure_fixture(which);
    EXPECT_FALSE(fx.relations.empty());
    for (const auto& r : fx.relations) EXPECT_TRUE(r.holds) << "figure " << which << ": " << r.name << " measured " << r.measured;
  }
}

TEST(Figures, FrozenFilesMatchCompiledCopies) {
  for (int which = 1; which <= 4; ++which) {
    const std::string path = std::string(OUTERSTRING_FIXTURE_DIR) + "/figure" + std::to_string(which) + ".json";
    EXPECT_EQ(read_text(path), figure_source(which));
  }
}

TEST(Figures, FigureOneExternalSupportDirect) {
  auto f = figure_fixture(1).family;
  std::vector<std::string> pids{"p1", "p2", "p3", "p4", "p5", "p6", "p7"};
  ExteriorOracle ext(f.pointers(f.set_of(pids)));
  EXPECT_TRUE(ext.meets(f[f.require("s1")]));
  EXPECT_TRUE(ext.meets(f[f.require("s2")]));
  for (const auto& p : pids)
    EXPECT_TRUE(curves_intersect(f[f.require(p)], f[f.require("s1")]) || curves_intersect(f[f.require(p)], f[f.require("s2")])) << p;
}

TEST(Figures, GenerateFigureKind) {
  GenSpec spec;
  spec.kind = GenKind::Figure;
  spec.n = 4;
  EXPECT_EQ(generate(spec).size(), 6u);
  spec.n = 5;
  EXPECT_THROW(generate(spec), Error);
  EXPECT_THROW(figure_fixture(0), Error);
}

TEST(Figures, BrokenTranscriptionIsDetected) {
  auto f = figure_fixture(2).family;
  // relabelling p1 and p2 must break the caption
  auto curves = f.curves();
  for (auto& c : curves)
    if (c.id == "p1") c.id = "tmp";
  for (auto& c : curves)
    if (c.id == "p2") c.id = "p1";
  for (auto& c : curves)
    if (c.id == "tmp") c.id = "p2";
  auto swapped = validate_family(curves);
  bool all = true;
  for (const auto& r : figure_relations(2, swapped)) all = all && r.holds;
  EXPECT_FALSE(all);
}
