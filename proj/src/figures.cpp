#include "outerstring/figures.hpp"

#include <functional>

#include "outerstring/arrangement.hpp"
#include "outerstring/graph.hpp"
#include "outerstring/io.hpp"
#include "outerstring/structures.hpp"

namespace outerstring {

extern const char* const kFigureSources[4];

namespace {

using Relations = std::vector<FigureRelation>;

void record(Relations& out, std::string name, std::string expected, const std::function<std::string()>& measure) {
  FigureRelation r{std::move(name), std::move(expected), {}, false};
  try {
    r.measured = measure();
  } catch (const std::exception& e) {
    r.measured = e.what();
  }
  r.holds = r.measured == r.expected;
  out.push_back(std::move(r));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Relations figure1(const CurveFamily& f) {
  Relations out;
  std::vector<std::string> pids{"p1", "p2", "p3", "p4", "p5", "p6", "p7"};
  const CurveSet p = f.set_of(pids);
  ExteriorOracle ext(f.pointers(p));
  for (const auto& id : pids)
    record(out, id + " externally supported by s1 or s2", "yes", [&] {
      bool ok = false;
      for (const char* s : {"s1", "s2"}) {
        const auto& sc = f[f.require(s)];
        ok = ok || (curves_intersect(f[f.require(id)], sc) && ext.meets(sc));
      }
      return yes_no(ok);
    });
  return out;
}

Relations figure2(const CurveFamily& f) {
  Relations out;
  IntersectionGraph g(f);
  std::vector<std::string> supports{"s1", "s2"};
  record(out, "(u,v,{s1,s2}) is a skeleton", "yes", [&] {
    validate_skeleton(g, make_skeleton(g, "u", "v", supports));
    return std::string("yes");
  });
  for (const auto& [id, want] : std::vector<std::pair<std::string, bool>>{{"p1", false}, {"p2", true}, {"p3", false}, {"p4", true}})
    record(out, id + " supported", yes_no(want),
           [&] { return yes_no(is_supported(g, make_skeleton(g, "u", "v", supports), f.require(id))); });
  record(out, "supported subfamily", "p2,p4", [&] {
    std::string s;
    for (const auto& id : f.ids_of(supported_subfamily(g, make_skeleton(g, "u", "v", supports)))) s += (s.empty() ? "" : ",") + id;
    return s;
  });
  return out;
}

Relations figure3(const CurveFamily& f) {
  Relations out;
  std::vector<std::string> pids{"p1", "p2", "p3", "p4"}, sids{"s1", "s2", "s3"};
  auto bracket = [&] { return build_bracket(f, f.set_of(pids), f.set_of(sids)); };
  record(out, "({p1..p4},{s1,s2,s3}) is a bracket", "yes", [&] {
    bracket();
    return std::string("yes");
  });
  for (const auto& [p, s] : std::vector<std::pair<std::string, std::string>>{{"p1", "s1"}, {"p2", "s2"}, {"p3", "s1"}, {"p4", "s3"}})
    record(out, "s(" + p + ")", s, [&] { return f[bracket().s_of(f.require(p))].id; });
  record(out, "label point (4,2) in I", "yes", [&] { return yes_no(bracket().in_interior(Point{4, 2})); });
  record(out, "point (1,1) in I", "no", [&] { return yes_no(bracket().in_interior(Point{1, 1})); });
  record(out, "p3' ends on s1", "yes", [&] {
    auto br = bracket();
    const auto& e = br.entry(f.require("p3"));
    return yes_no(!e.p_prime.end_closed && point_on_curve(e.p_prime.end.at, f[f.require("s1")]));
  });
  return out;
}

Relations figure4(const CurveFamily& f) {
  Relations out;
  IntersectionGraph g(f);
  std::vector<std::string> k1{"p1", "p2", "p3"}, k2{"q1", "q2"};
  auto system = [&] { return build_clique_system(g, {f.set_of(k1), f.set_of(k2)}); };
  record(out, "(K1,K2) is a (3,2)-clique system", "yes", [&] {
    system();
    return std::string("yes");
  });
  record(out, "l(K1)", "p1", [&] { return f[clique_anchors(g, f.set_of(k1)).l].id; });
  record(out, "r(K1)", "p2", [&] { return f[clique_anchors(g, f.set_of(k1)).r].id; });
  record(out, "l(K2)", "q1", [&] { return f[clique_anchors(g, f.set_of(k2)).l].id; });
  record(out, "r(K2)", "q2", [&] { return f[clique_anchors(g, f.set_of(k2)).r].id; });
  for (const char* q : {"q1", "q2"})
    record(out, std::string(q) + " for K1", "left",
           [&] { return std::string(to_string(side_for_clique(f, f.require(q), clique_anchors(g, f.set_of(k1))))); });
  record(out, "s for K1", "right",
         [&] { return std::string(to_string(side_for_clique(f, f.require("s"), clique_anchors(g, f.set_of(k1))))); });
  record(out, "s for K2", "right",
         [&] { return std::string(to_string(side_for_clique(f, f.require("s"), clique_anchors(g, f.set_of(k2))))); });
  record(out, "s crosses (K1,K2)", "yes", [&] { return yes_no(crosses_system(f, system(), f.require("s"))); });
  record(out, "signature of s", "(1,1)", [&] {
    auto sig = signature(f, system(), f.require("s"));
    std::string s = "(";
    for (std::size_t i = 0; i < sig.size(); ++i) s += (i ? "," : "") + std::to_string(sig[i]);
    return s + ")";
  });
  return out;
}

void check_which(int which) {
  if (which < 1 || which > 4) throw Error(ErrorKind::PreconditionFailure, "figures are numbered 1 to 4");
}

}  // namespace

std::vector<FigureRelation> figure_relations(int which, const CurveFamily& f) {
  check_which(which);
  switch (which) {
    case 1: return figure1(f);
    case 2: return figure2(f);
    case 3: return figure3(f);
    default: return figure4(f);
  }
}

std::string_view figure_source(int which) {
  check_which(which);
  return kFigureSources[which - 1];
}

FigureFixture figure_fixture(int which) {
  const auto text = figure_source(which);
  if (text.empty()) throw Error(ErrorKind::PreconditionFailure, "figure " + std::to_string(which) + " has not been frozen");
  FigureFixture out{parse_family(text), {}};
  out.relations = figure_relations(which, out.family);
  return out;
}

}  // namespace outerstring
