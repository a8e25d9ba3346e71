#include <gtest/gtest.h>

#include "outerstring/gen.hpp"
#include "outerstring/graph.hpp"
#include "test_support.hpp"

using namespace outerstring;
using test::curve;

namespace {

std::size_t brute_omega(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    CurveSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(i);
    if (g.is_clique(s)) best = std::max(best, s.size());
  }
  return best;
}

bool colorable(const IntersectionGraph& g, std::vector<int>& color, std::size_t v, int k) {
  if (v == g.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < v; ++u) ok = ok && !(g.adjacent(u, v) && color[u] == c);
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, color, v + 1, k)) return true;
  }
  return false;
}

int brute_chi(const IntersectionGraph& g) {
  if (g.size() == 0) return 0;
  std::vector<int> color(g.size(), -1);
  for (int k = 1;; ++k)
    if (colorable(g, color, 0, k)) return k;
}

CurveFamily nest() {
  return validate_family({curve("u", {{0, 0}, {0, 4}, {6, 4}}), curve("v", {{6, 0}, {6, 3}, {-1, 3}}),
                          curve("s", {{3, 0}, {3, 5}})});
}

}  // namespace

TEST(IntersectionGraph, FixtureEdges) {
  auto f = validate_family({curve("a", {{0, 0}, {3, 3}}), curve("b", {{1, 0}, {0, 3}}), curve("c", {{2, 0}, {2, "1/2"}})});
  IntersectionGraph g(f);
  auto e = g.edges();
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], std::make_pair(std::size_t{0}, std::size_t{1}));

  auto n = nest();
  EXPECT_EQ(IntersectionGraph(n).edges().size(), 3u);

  auto bars = validate_family({curve("x", {{0, 0}, {0, 1}}), curve("y", {{1, 0}, {1, 1}}), curve("z", {{2, 0}, {2, 1}})});
  EXPECT_TRUE(IntersectionGraph(bars).edges().empty());
}

TEST(CliqueNumber, Examples) {
  std::vector<GroundedCurve> bars;
  for (int i = 0; i < 5; ++i) bars.push_back(curve("b" + std::to_string(i), {{i, 0}, {i, 1}}));
  auto f = validate_family(bars);
  IntersectionGraph g(f);
  auto w = clique_number(g);
  EXPECT_EQ(w.size, 1u);
  EXPECT_EQ(w.members.size(), 1u);
  EXPECT_EQ(chromatic_number(g).colors, 1);

  auto n = nest();
  IntersectionGraph h(n);
  EXPECT_EQ(clique_number(h).size, 3u);
  EXPECT_EQ(clique_number(h).members, n.all());
  auto chi = chromatic_number(h);
  EXPECT_EQ(chi.colors, 3);
  EXPECT_TRUE(chi.proper(h));
}

TEST(CliqueNumber, EmptySet) {
  auto n = nest();
  IntersectionGraph h(n);
  EXPECT_EQ(clique_number(h, n.none()).size, 0u);
  EXPECT_EQ(chromatic_number(h, n.none()).colors, 0);
}

TEST(ExactSolvers, MatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenSpec spec{seed % 2 ? GenKind::Segments : GenKind::Polylines, 3 + seed % 6, 4, seed, 12};
    auto f = generate(spec);
    IntersectionGraph g(f);
    auto w = clique_number(g);
    auto chi = chromatic_number(g);
    EXPECT_EQ(w.size, brute_omega(g)) << seed;
    EXPECT_TRUE(g.is_clique(w.members));
    EXPECT_EQ(w.members.size(), w.size);
    EXPECT_EQ(chi.colors, brute_chi(g)) << seed;
    EXPECT_TRUE(chi.proper(g));
    EXPECT_EQ(chi.colored(), f.all());
    EXPECT_GE(static_cast<std::size_t>(chi.colors), w.size);
  }
}

TEST(ExactSolvers, DeletionIsMonotone) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto f = random_grounded_segments({GenKind::Segments, 10, 2, seed, 10});
    IntersectionGraph g(f);
    const int chi = chromatic_number(g).colors;
    const auto omega = clique_number(g).size;
    for (std::size_t v = 0; v < f.size(); ++v) {
      CurveSet rest = f.all();
      rest.erase(v);
      EXPECT_LE(chromatic_number(g, rest).colors, chi);
      EXPECT_LE(clique_number(g, rest).size, omega);
    }
  }
}

TEST(ExactSolvers, Deterministic) {
  auto f = random_grounded_polylines({GenKind::Polylines, 12, 4, 7, 15});
  IntersectionGraph g(f);
  auto a = chromatic_number(g);
  auto b = chromatic_number(g);
  EXPECT_EQ(a.color, b.color);
  EXPECT_EQ(clique_number(g).members, clique_number(g).members);
}

TEST(ChiOracle, Memoizes) {
  auto f = random_grounded_segments({GenKind::Segments, 9, 2, 5, 10});
  IntersectionGraph g(f);
  ChiOracle oracle(g);
  EXPECT_EQ(oracle.chi(f.all()), chromatic_number(g).colors);
  EXPECT_EQ(oracle.chi(f.all()), chromatic_number(g).colors);
  EXPECT_EQ(oracle.cached(), 1u);
}

TEST(Between, Definition) {
  auto f = validate_family({curve("a", {{0, 0}, {3, 3}}), curve("b", {{1, 0}, {0, 3}}), curve("c", {{2, 0}, {2, "1/2"}})});
  EXPECT_EQ(f.ids_of(between(f, "a", "c")), std::vector<std::string>{"b"});
  EXPECT_TRUE(between(f, "a", "b").empty());
  for (auto bad : {std::pair{"c", "a"}, std::pair{"a", "a"}}) {
    try {
      between(f, bad.first, bad.second);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OrderViolation);
    }
  }
}

TEST(Between, MatchesBasepointFilter) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto f = random_grounded_segments({GenKind::Segments, 8, 2, seed, 20});
    for (std::size_t u = 0; u < f.size(); ++u)
      for (std::size_t v = u + 1; v < f.size(); ++v) {
        CurveSet expect(f.size());
        for (std::size_t c = 0; c < f.size(); ++c) {
          const auto& x = f[c].basepoint().x;
          if (f[u].basepoint().x < x && x < f[v].basepoint().x) expect.insert(c);
        }
        EXPECT_EQ(between(f, u, v), expect);
      }
  }
}

TEST(PiercerCover, Examples) {
  // two disjoint curves both crossing one piercer
  auto f = validate_family({curve("p", {{0, 0}, {0, 2}, {10, 2}}), curve("g1", {{3, 0}, {3, 3}}), curve("g2", {{5, 0}, {5, 3}})});
  IntersectionGraph g(f);
  std::vector<std::size_t> piercers{0};
  auto exact = [&](const CurveSet& s) { return chromatic_number(g, s); };
  auto w = piercer_cover_coloring(g, CurveSet(3, {1, 2}), piercers, exact);
  EXPECT_EQ(w.colors, 1);
  EXPECT_TRUE(w.proper(g));

  auto n = nest();
  IntersectionGraph h(n);
  std::vector<std::size_t> u{n.require("u")};
  auto ws = piercer_cover_coloring(h, CurveSet(3, {n.require("s")}), u,
                                   [&](const CurveSet& s) { return chromatic_number(h, s); });
  EXPECT_EQ(ws.colors, 1);

  auto lonely = validate_family({curve("p", {{0, 0}, {0, 2}}), curve("q", {{3, 0}, {3, 3}})});
  IntersectionGraph l(lonely);
  std::vector<std::size_t> pp{0};
  try {
    piercer_cover_coloring(l, CurveSet(2, {1}), pp, [&](const CurveSet& s) { return chromatic_number(l, s); });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UncoveredCurve);
  }
}

TEST(PiercerCover, RandomInstancesAreProper) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200 && checked < 20; ++seed) {
    auto f = random_grounded_segments({GenKind::Segments, 8, 2, seed, 12});
    IntersectionGraph g(f);
    std::vector<std::size_t> piercers{0, 1};
    CurveSet members = g.touching(CurveSet(f.size(), {0, 1}), f.all());
    members.erase(0);
    members.erase(1);
    if (members.size() < 4) continue;
    ++checked;
    auto w = piercer_cover_coloring(g, members, piercers, [&](const CurveSet& s) { return chromatic_number(g, s); });
    EXPECT_TRUE(w.proper(g));
    EXPECT_EQ(w.colored(), members);
    EXPECT_LE(w.colors, 2 * chromatic_number(g, members).colors + 2);
  }
  EXPECT_EQ(checked, 20);
}
