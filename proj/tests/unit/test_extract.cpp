#include <gtest/gtest.h>

#include <algorithm>

#include "outerstring/extract.hpp"
#include "outerstring/gen.hpp"
#include "test_support.hpp"

using namespace outerstring;
using test::curve;

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

std::vector<GroundedCurve> nest() {
  return {curve("u", {{0, 0}, {0, 4}, {6, 4}}), curve("v", {{6, 0}, {6, 3}, {-1, 3}}), curve("s", {{3, 0}, {3, 5}})};
}

CurveFamily nest_plus(std::vector<GroundedCurve> extra) {
  auto cs = nest();
  for (auto& c : extra) cs.push_back(std::move(c));
  return validate_family(cs);
}

CurveFamily tent() {
  return validate_family({curve("l1", {{0, 0}, {10, 10}}), curve("r1", {{10, 0}, {0, 10}}), curve("l2", {{2, 0}, {1, 4}}),
                          curve("r2", {{8, 0}, {-1, 3}})});
}

// brute force: chi of the curves strictly between u and v
int chi_between(ChiOracle& chi, const CurveSet& domain, std::size_t u, std::size_t v) {
  return chi.chi(between(chi.graph().family(), u, v) & domain);
}

}  // namespace

TEST(McGuinness, NestPlusOne) {
  auto f = nest_plus({curve("x", {{1, 0}, {1, 1}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto r = mcguinness(chi, f.all(), 0, 0);
  EXPECT_GE(chi.chi(r.h), 1);
  for (const auto& b : r.blocks) EXPECT_LE(chi.chi(b), 1);
  auto m = r.h.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (g.adjacent(m[a], m[b])) EXPECT_GE(chi_between(chi, f.all(), m[a], m[b]), 1);
}

TEST(McGuinness, ExactThresholdIsRejected) {
  auto f = validate_family({curve("a", {{0, 0}, {3, 3}}), curve("b", {{1, 0}, {0, 3}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  EXPECT_EQ(kind_of([&] { mcguinness(chi, f.all(), 1, 0); }), ErrorKind::PreconditionFailure);
  EXPECT_EQ(kind_of([&] { intersecting_gap_pair(chi, f.all(), 0); }), ErrorKind::PreconditionFailure);
}

TEST(McGuinness, RandomFamilies) {
  int ran = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenSpec spec;
    spec.kind = seed % 2 ? GenKind::Polylines : GenKind::Segments;
    spec.n = 4 + seed % 9;
    spec.seed = seed;
    auto f = generate(spec);
    IntersectionGraph g(f);
    ChiOracle chi(g);
    const CurveSet all = f.all();
    for (long alpha : {0L, 1L})
      for (long beta : {0L, 1L}) {
        if (!(chi.chi(all) > 2 * alpha * (beta + 1))) {
          EXPECT_EQ(kind_of([&] { mcguinness(chi, all, alpha, beta); }), ErrorKind::PreconditionFailure);
          continue;
        }
        ++ran;
        auto r = mcguinness(chi, all, alpha, beta);
        EXPECT_GT(chi.chi(r.h), alpha);
        CurveSet seen(f.size());
        for (std::size_t i = 0; i < r.blocks.size(); ++i) {
          EXPECT_FALSE(seen.intersects(r.blocks[i]));
          if (i + 1 < r.blocks.size()) EXPECT_EQ(chi.chi(r.blocks[i]), beta + 1);
          if (i > 0) EXPECT_LT(r.blocks[i - 1].last(), r.blocks[i].first());
          seen |= r.blocks[i];
        }
        EXPECT_EQ(seen, all);
        auto m = r.h.members();
        for (std::size_t a = 0; a < m.size(); ++a)
          for (std::size_t b = a + 1; b < m.size(); ++b)
            if (g.adjacent(m[a], m[b])) EXPECT_GT(chi_between(chi, all, m[a], m[b]), beta);
      }
  }
  EXPECT_GT(ran, 30);
}

TEST(GapPair, MutuallyCrossingPlusOne) {
  auto f = nest_plus({curve("x", {{1, 0}, {1, 1}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto [u, v] = intersecting_gap_pair(chi, f.all(), 0);
  EXPECT_TRUE(g.adjacent(u, v));
  EXPECT_GE(chi_between(chi, f.all(), u, v), 1);
  EXPECT_EQ(f[u].id, "u");
  EXPECT_EQ(f[v].id, "s");
}

TEST(Bfs, Path) {
  auto f = validate_family({curve("a", {{0, 0}, {4, 4}}), curve("b", {{2, 0}, {2, 10}}),
                            curve("c", {{4, 0}, {4, 1}, {"3/2", 1}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto r = bfs_supported(chi, f.all());
  ASSERT_EQ(r.layers.size(), 3u);
  EXPECT_EQ(f.ids_of(r.layers[0]), std::vector<std::string>{"a"});
  EXPECT_EQ(f.ids_of(r.layers[1]), std::vector<std::string>{"b"});
  EXPECT_EQ(f.ids_of(r.layers[2]), std::vector<std::string>{"c"});
  EXPECT_EQ(r.d, 1u);
  EXPECT_EQ(f.ids_of(r.g), std::vector<std::string>{"b"});
  ASSERT_EQ(r.support.size(), 1u);
  EXPECT_EQ(f[r.support[0].second].id, "a");
  ExteriorOracle ext(f.pointers(r.g));
  EXPECT_TRUE(ext.meets(f[r.support[0].second]));
}

TEST(Bfs, Edgeless) {
  auto f = validate_family({curve("a", {{0, 0}, {0, 1}}), curve("b", {{1, 0}, {1, 1}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  EXPECT_EQ(kind_of([&] { bfs_supported(chi, f.all()); }), ErrorKind::PreconditionFailure);
  auto rep = run_bfs_supported(chi, f.all());
  EXPECT_FALSE(rep.found());
  ASSERT_TRUE(rep.failure);
  EXPECT_EQ(rep.failure->step, "omega");
}

TEST(Bfs, RandomFamilies) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    GenSpec spec;
    spec.kind = seed % 2 ? GenKind::Polylines : GenKind::Segments;
    spec.n = 4 + seed % 9;
    spec.seed = seed;
    auto f = generate(spec);
    IntersectionGraph g(f);
    ChiOracle chi(g);
    if (clique_number(g, f.all()).size < 2) continue;
    auto r = bfs_supported(chi, f.all());
    EXPECT_GE(Rational(chi.chi(r.g)), Rational(chi.chi(f.all()), 2));
    ExteriorOracle ext(f.pointers(r.g));
    ASSERT_EQ(r.support.size(), r.g.size());
    for (auto [p, s] : r.support) {
      EXPECT_TRUE(g.adjacent(p, s));
      EXPECT_TRUE(ext.meets(f[s]));
    }
  }
}

TEST(FindSkeleton, SupportedProbe) {
  auto f = nest_plus({curve("p", {{2, 0}, {2, 2}, {"7/2", 2}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto found = find_skeleton_supported(chi, f.all(), 0);
  ASSERT_TRUE(found);
  EXPECT_EQ(f[found->skeleton.u].id, "u");
  EXPECT_EQ(f[found->skeleton.v].id, "v");
  EXPECT_EQ(f.ids_of(found->skeleton.supports), std::vector<std::string>{"s"});
  EXPECT_EQ(f.ids_of(found->p), std::vector<std::string>{"p"});
  EXPECT_EQ(found->chi, 1);
  EXPECT_FALSE(find_skeleton_supported(chi, f.all(), static_cast<long>(f.size())));
}

TEST(FindSkeleton, RandomResultsRevalidate) {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    GenSpec spec;
    spec.kind = GenKind::Polylines;
    spec.n = 8;
    spec.seed = seed;
    auto f = generate(spec);
    IntersectionGraph g(f);
    ChiOracle chi(g);
    auto found = find_skeleton_supported(chi, f.all(), 0);
    if (!found) continue;
    validate_skeleton(g, found->skeleton);
    found->p.for_each([&](std::size_t p) { EXPECT_TRUE(is_supported(g, found->skeleton, p)); });
  }
}

TEST(BracketPipeline, TinyFamilyStopsAtFirstThreshold) {
  auto f = validate_family({curve("a", {{0, 0}, {3, 3}}), curve("b", {{1, 0}, {0, 3}}), curve("c", {{2, 0}, {2, "1/2"}})});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto rep = attempt_bracket_system(chi, f.all(), BoundParams{});
  EXPECT_FALSE(rep.found());
  ASSERT_TRUE(rep.failure);
  EXPECT_EQ(rep.failure->step, "chi_F_0");
  EXPECT_EQ(rep.failure->threshold, "chi > 1616");
  EXPECT_EQ(rep.failure->measured, "2");
}

TEST(BracketPipeline, CliqueBoundIsChecked) {
  auto f = nest_plus({});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  auto rep = attempt_bracket_system(chi, f.all(), BoundParams{});
  ASSERT_TRUE(rep.failure);
  EXPECT_EQ(rep.failure->step, "omega");
}

TEST(BracketPipeline, SurrogateThresholdsAreDeterministic) {
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    GenSpec spec;
    spec.kind = GenKind::Polylines;
    spec.n = 12;
    spec.seed = seed;
    auto f = generate(spec);
    IntersectionGraph g(f);
    ChiOracle chi(g);
    BoundParams params;
    params.k = static_cast<long>(clique_number(g, f.all()).size);
    params.overrides["*"] = Rational(0);
    auto a = attempt_bracket_system(chi, f.all(), params);
    auto b = attempt_bracket_system(chi, f.all(), params);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
      EXPECT_EQ(a.steps[i].name, b.steps[i].name);
      EXPECT_EQ(a.steps[i].values, b.steps[i].values);
      EXPECT_EQ(a.steps[i].chosen, b.steps[i].chosen);
    }
    if (a.found() && a.structure == "bracket_system") {
      validate_bracket_system(chi, a.brackets, params.xi);
      EXPECT_EQ(a.clique.size(), a.brackets.size());
    } else if (!a.found()) {
      ASSERT_TRUE(a.failure);
      EXPECT_FALSE(a.failure->step.empty());
    }
  }
}

TEST(CliqueSystemPipeline, TwoWithEmptyPrefix) {
  auto f = nest_plus({});
  IntersectionGraph g(f);
  ChiOracle chi(g);
  BoundParams params;
  params.t = 2;
  auto rep = attempt_clique_system(chi, f.all(), params);
  ASSERT_TRUE(rep.found());
  ASSERT_TRUE(rep.clique_system);
  ASSERT_EQ(rep.clique_sets.size(), 1u);
  EXPECT_EQ(rep.clique_sets[0].size(), 2u);
  EXPECT_TRUE(g.is_clique(rep.clique_sets[0]));
  build_clique_system(g, rep.clique_sets);

  auto lone = validate_family({curve("a", {{0, 0}, {0, 1}})});
  IntersectionGraph h(lone);
  ChiOracle chi2(h);
  auto none = attempt_clique_system(chi2, lone.all(), params);
  ASSERT_TRUE(none.failure);
  EXPECT_EQ(none.failure->step, "(2).chi_F");
}

TEST(CliqueSystemPipeline, ThreeByMerging) {
  auto f = tent();
  IntersectionGraph g(f);
  ChiOracle chi(g);
  BoundParams params;
  params.t = 3;
  params.source = SystemSource::Search;
  auto rep = attempt_clique_system(chi, f.all(), params);
  ASSERT_TRUE(rep.found()) << (rep.failure ? rep.failure->step : "");
  ASSERT_EQ(rep.clique_sets.size(), 1u);
  EXPECT_EQ(f.ids_of(rep.clique_sets[0]), (std::vector<std::string>{"l1", "l2", "r2"}));
  EXPECT_TRUE(g.is_clique(rep.clique_sets[0]));

  params.source = SystemSource::Lemmas;
  auto lemmas = attempt_clique_system(chi, f.all(), params);
  EXPECT_FALSE(lemmas.found());
  ASSERT_TRUE(lemmas.failure);
}

TEST(CliqueSystemPipeline, MergeNeedsTwoCliques) {
  auto f = tent();
  IntersectionGraph g(f);
  auto cs = build_clique_system(g, {f.set_of(std::vector<std::string>{"l1", "r1"})});
  EXPECT_FALSE(merge_last_cliques(g, cs, 0));
  auto found = search_clique_system(g, f.all(), {2, 2}, 1000);
  ASSERT_TRUE(found);
  EXPECT_EQ(f.ids_of(found->cliques[0].clique), (std::vector<std::string>{"l1", "r1"}));
  EXPECT_FALSE(search_clique_system(g, f.all(), {2, 2, 2}, 1000));
}

TEST(BracketPipeline, TraceRecordsNestedLayers) {
  GenSpec spec;
  spec.kind = GenKind::Polylines;
  spec.n = 14;
  spec.seed = 1;
  auto f = generate(spec);
  IntersectionGraph g(f);
  ChiOracle chi(g);
  BoundParams params;
  params.k = 3;
  params.overrides["*"] = Rational(0);
  auto rep = attempt_bracket_system(chi, f.all(), params);
  ASSERT_TRUE(rep.failure);
  std::vector<std::string> names;
  for (const auto& s : rep.steps) names.push_back(s.name);
  ASSERT_GE(names.size(), 4u);
  EXPECT_EQ(names[0], "constants");
  EXPECT_EQ(names[1], "omega");
  EXPECT_EQ(names[2], "chi_F_0");
  EXPECT_EQ(names[3], "chi_F_1");
  // each layer is inside the previous one
  for (std::size_t i = 3; i < rep.steps.size() && rep.steps[i].name.rfind("chi_F_", 0) == 0; ++i)
    for (const auto& id : rep.steps[i].chosen) {
      const auto& prev = rep.steps[i - 1].chosen;
      EXPECT_NE(std::find(prev.begin(), prev.end(), id), prev.end());
    }
}
