#include <gtest/gtest.h>

#include "outerstring/structures.hpp"
#include "test_support.hpp"

using namespace outerstring;
using test::curve;
using test::pt;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

CurveFamily nest_with(GroundedCurve probe) {
  return validate_family({curve("u", {{0, 0}, {0, 4}, {6, 4}}), curve("v", {{6, 0}, {6, 3}, {-1, 3}}),
                          curve("s", {{3, 0}, {3, 5}}), std::move(probe)});
}

CurveFamily abc() {
  return validate_family({curve("a", {{0, 0}, {3, 3}}), curve("b", {{1, 0}, {0, 3}}), curve("c", {{2, 0}, {2, "1/2"}})});
}

// Two nested brackets: the inner one sits under the horizontal part of sigma.
CurveFamily nested_pair(bool two_outer) {
  std::vector<GroundedCurve> cs{curve("sigma", {{0, 0}, {0, 10}, {30, 10}}),
                                curve("tau", {{2, 0}, {2, 5}, {20, 5}, {20, 15}}),
                                curve("p1", {{14, 0}, {13, 7}}),
                                curve("p2", {{15, 0}, {12, 7}}),
                                curve("q1", {{28, 0}, {27, 12}})};
  if (two_outer) cs.push_back(curve("q2", {{29, 0}, {26, 12}}));
  return validate_family(cs);
}

CurveFamily tent(std::vector<GroundedCurve> extra) {
  std::vector<GroundedCurve> cs{curve("l1", {{0, 0}, {10, 10}}), curve("r1", {{10, 0}, {0, 10}}),
                                curve("l2", {{2, 0}, {1, 4}}), curve("r2", {{8, 0}, {-1, 3}})};
  for (auto& c : extra) cs.push_back(std::move(c));
  return validate_family(cs);
}

}  // namespace

TEST(Skeleton, SupportedProbe) {
  std::vector<std::string> s{"s"};
  auto yes = nest_with(curve("p", {{2, 0}, {2, 2}, {"7/2", 2}}));
  IntersectionGraph g(yes);
  auto sk = make_skeleton(g, "u", "v", s);
  EXPECT_TRUE(is_supported(g, sk, yes.require("p")));
  EXPECT_EQ(yes.ids_of(supported_subfamily(g, sk)), std::vector<std::string>{"p"});

  auto no = nest_with(curve("p", {{2, 0}, {2, "7/2"}, {"7/2", "7/2"}}));
  IntersectionGraph h(no);
  auto sk2 = make_skeleton(h, "u", "v", s);
  EXPECT_FALSE(is_supported(h, sk2, no.require("p")));
  EXPECT_TRUE(supported_subfamily(h, sk2).empty());
}

TEST(Skeleton, BothProbes) {
  auto f = validate_family({curve("u", {{0, 0}, {0, 4}, {6, 4}}), curve("v", {{6, 0}, {6, 3}, {-1, 3}}),
                            curve("s", {{3, 0}, {3, 5}}), curve("lo", {{2, 0}, {2, 2}, {"7/2", 2}}),
                            curve("hi", {{"5/2", 0}, {"5/2", "7/2"}, {"7/2", "7/2"}})});
  IntersectionGraph g(f);
  std::vector<std::string> s{"s"};
  auto sk = make_skeleton(g, "u", "v", s);
  EXPECT_EQ(f.ids_of(supported_subfamily(g, sk)), std::vector<std::string>{"lo"});
  auto empty = make_skeleton(g, "u", "v", {});
  EXPECT_TRUE(supported_subfamily(g, empty).empty());
}

TEST(Skeleton, Invalid) {
  auto f = abc();
  IntersectionGraph g(f);
  EXPECT_EQ(kind_of([&] { make_skeleton(g, "a", "c", {}); }), ErrorKind::InvalidSkeleton);
  std::vector<std::string> outside{"c"};
  EXPECT_EQ(kind_of([&] { make_skeleton(g, "a", "b", outside); }), ErrorKind::InvalidSkeleton);
}

TEST(Bracket, SingleCrossing) {
  auto f = abc();
  auto br = build_bracket(f, f.set_of(std::vector<std::string>{"b"}), f.set_of(std::vector<std::string>{"a"}));
  const auto& e = br.entry(f.require("b"));
  EXPECT_EQ(e.s, f.require("a"));
  EXPECT_EQ(e.p_prime.end.at, pt("3/4", "3/4"));
  EXPECT_FALSE(e.p_prime.end_closed);
  EXPECT_TRUE(br.supports_left());
  for (auto s : {f.require("a")})
    EXPECT_FALSE(subcurves_intersect(Piece{&f[e.p], e.p_prime}, Piece::whole(f[s])));
}

TEST(Bracket, Errors) {
  auto f = abc();
  auto set = [&](std::vector<std::string> ids) { return f.set_of(ids); };
  EXPECT_EQ(kind_of([&] { build_bracket(f, set({"b"}), set({"c"})); }), ErrorKind::UnhitCurve);
  EXPECT_EQ(kind_of([&] { build_bracket(f, set({"a", "c"}), set({"b"})); }), ErrorKind::SideOrderViolation);

  auto g = validate_family({curve("a", {{0, 0}, {0, 5}, {10, 5}}), curve("a2", {{1, 0}, {1, 6}}),
                            curve("p", {{5, 0}, {5, 7}})});
  // p meets a first, so a2 is nobody's first hit
  EXPECT_EQ(kind_of([&] { build_bracket(g, g.set_of(std::vector<std::string>{"p"}), g.set_of(std::vector<std::string>{"a", "a2"})); }),
            ErrorKind::UnusedSupport);
}

TEST(Bracket, InteriorClassify) {
  auto f = abc();
  auto br = build_bracket(f, f.set_of(std::vector<std::string>{"b"}), f.set_of(std::vector<std::string>{"a"}));
  EXPECT_EQ(interior_classify(br, curve("x", {{"1/2", 0}, {"1/2", "1/20"}})), InteriorClass::Contained);
  EXPECT_EQ(interior_classify(br, f[f.require("c")]), InteriorClass::Outside);
  auto through = curve("x", {{2, 0}, {0, "1/2"}});
  EXPECT_EQ(interior_classify(br, through), InteriorClass::CrossesBoundaryOffBaseline);
  // crossing a beyond the hit point misses the boundary of I(b)
  EXPECT_EQ(interior_classify(br, curve("x", {{2, 0}, {1, "3/2"}})), InteriorClass::Outside);

  EXPECT_TRUE(br.in_interior(pt("1/2", "1/20")));
  EXPECT_TRUE(br.in_interior(pt("3/4", "3/4")));
  EXPECT_FALSE(br.in_interior(pt(1, 1)));

  auto r = check_bracket_crossing(br, through);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(verify_bracket_crossing(br, f[f.require("c")]));
  EXPECT_FALSE(check_bracket_crossing(br, f[f.require("c")]).hypothesis);
}

TEST(BracketSystem, ExtractTwo) {
  auto f = nested_pair(true);
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto ids = [&](std::vector<std::string> v) { return f.set_of(v); };
  std::vector<Bracket> sys{build_bracket(f, ids({"p1", "p2"}), ids({"tau"})),
                           build_bracket(f, ids({"q1", "q2"}), ids({"sigma"}))};
  auto k = extract_clique(chi, sys, 1);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(f[k[0]].id, "tau");
  EXPECT_EQ(f[k[1]].id, "sigma");
  EXPECT_FALSE(curve_intersections(f[k[0]], f[k[1]]).empty());

  std::vector<Bracket> one{sys[0]};
  auto k1 = extract_clique(chi, one, 1);
  EXPECT_EQ(k1, std::vector<std::size_t>{f.require("tau")});
}

TEST(BracketSystem, ThresholdFailureNamesIndex) {
  auto f = nested_pair(false);
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto ids = [&](std::vector<std::string> v) { return f.set_of(v); };
  std::vector<Bracket> sys{build_bracket(f, ids({"p1", "p2"}), ids({"tau"})),
                           build_bracket(f, ids({"q1"}), ids({"sigma"}))};
  try {
    extract_clique(chi, sys, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailure);
    EXPECT_NE(std::string(e.what()).find("bracket 2"), std::string::npos);
  }
}

TEST(BracketSystem, StructuralFailure) {
  auto f = nested_pair(true);
  auto ids = [&](std::vector<std::string> v) { return f.set_of(v); };
  // reversed order: the outer curves are not inside the inner bracket
  std::vector<Bracket> sys{build_bracket(f, ids({"q1", "q2"}), ids({"sigma"})),
                           build_bracket(f, ids({"p1", "p2"}), ids({"tau"}))};
  EXPECT_EQ(kind_of([&] { validate_bracket_system(sys); }), ErrorKind::PreconditionFailure);
}

TEST(CliqueAnchors, SingleCrossing) {
  auto f = abc();
  IntersectionGraph g(f);
  auto a = clique_anchors(g, f.set_of(std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(a.l, f.require("a"));
  EXPECT_EQ(a.r, f.require("b"));
  EXPECT_EQ(a.joint, pt("3/4", "3/4"));
  EXPECT_TRUE(a.l_prime.end_closed);
  EXPECT_EQ(a.l_prime.end.at, pt("3/4", "3/4"));
  EXPECT_FALSE(a.r_prime.end_closed);
  EXPECT_EQ(a.r_prime.end.at, pt("3/4", "3/4"));
  EXPECT_EQ(kind_of([&] { clique_anchors(g, f.set_of(std::vector<std::string>{"a", "c"})); }), ErrorKind::NotAClique);
}

TEST(CliqueSystem, SidesAndSignature) {
  auto f = tent({curve("s", {{7, 0}, {7, 20}}), curve("w", {{3, 0}, {3, 20}}), curve("tiny", {{4, 0}, {4, "1/10"}}),
                 curve("m", {{5, 0}, {5, "1/2"}})});
  IntersectionGraph g(f);
  auto ids = [&](std::vector<std::string> v) { return f.set_of(v); };
  auto cs = build_clique_system(g, {ids({"l1", "r1"}), ids({"l2", "r2"})});
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs.sides[1][0], Side::Left);

  EXPECT_EQ(side_for_clique(f, f.require("s"), cs.cliques[0]), Side::Right);
  EXPECT_EQ(side_for_clique(f, f.require("w"), cs.cliques[0]), Side::Left);
  EXPECT_EQ(side_for_clique(f, f.require("w"), cs.cliques[1]), Side::Right);
  EXPECT_EQ(side_for_clique(f, f.require("m"), cs.cliques[1]), Side::Neither);

  EXPECT_TRUE(crosses_system(f, cs, f.require("s")));
  EXPECT_FALSE(crosses_system(f, cs, f.require("tiny")));
  EXPECT_EQ(signature(f, cs, f.require("s")), (std::vector<int>{1, 1}));
  EXPECT_EQ(signature(f, cs, f.require("w")), (std::vector<int>{0, 1}));
  EXPECT_EQ(kind_of([&] { signature(f, cs, f.require("tiny")); }), ErrorKind::NotCrossing);

  CliqueSystem none = build_clique_system(g, {});
  EXPECT_TRUE(crosses_system(f, none, f.require("tiny")));
  EXPECT_TRUE(signature(f, none, f.require("tiny")).empty());
}

TEST(CliqueSystem, Invalid) {
  auto f = tent({});
  IntersectionGraph g(f);
  auto ids = [&](std::vector<std::string> v) { return f.set_of(v); };
  // the outer clique listed second is not inside the inner one
  EXPECT_EQ(kind_of([&] { build_clique_system(g, {ids({"l2", "r2"}), ids({"l1", "r1"})}); }), ErrorKind::InvalidCliqueSystem);
  EXPECT_EQ(kind_of([&] { build_clique_system(g, {ids({"l1"})}); }), ErrorKind::InvalidCliqueSystem);
}

TEST(CliqueSystem, Betweenness) {
  auto f = validate_family({curve("l1", {{0, 0}, {10, 10}}), curve("r1", {{10, 0}, {0, 10}}), curve("x1", {{1, 0}, {1, 20}}),
                            curve("x2", {{2, 0}, {2, 20}}), curve("x3", {{3, 0}, {3, 20}}), curve("y", {{7, 0}, {7, 20}})});
  IntersectionGraph g(f);
  auto cs = build_clique_system(g, {f.set_of(std::vector<std::string>{"l1", "r1"})});
  EXPECT_TRUE(check_signature_betweenness(g, cs, f.require("x1"), f.require("x2"), f.require("x3")));
  EXPECT_EQ(kind_of([&] { check_signature_betweenness(g, cs, f.require("x2"), f.require("x3"), f.require("y")); }),
            ErrorKind::PreconditionFailure);
}
