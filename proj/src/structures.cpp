#include "outerstring/structures.hpp"

#include <algorithm>

#include "segment.hpp"

namespace outerstring {

namespace {

std::string quoted(const CurveFamily& f, std::size_t i) { return "'" + f[i].id + "'"; }

Point lerp(const Point& a, const Point& b, const Rational& t) {
  return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Parameters along [a, b] where it meets the polygon edges of any region, plus 0 and 1.
std::vector<Rational> region_cuts(const std::vector<BracketEntry>& entries, const Point& a, const Point& b,
                                  std::vector<Point>* touching) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (const auto& e : entries) {
    const auto& ring = e.region.ring();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      auto m = detail::meet(a, b, ring[i], ring[(i + 1) % ring.size()]);
      if (m.kind == detail::MeetKind::None) continue;
      ts.push_back(m.t);
      if (touching) touching->push_back(lerp(a, b, m.t));
      if (m.kind == detail::MeetKind::Overlap) {
        ts.push_back(m.t_hi);
        if (touching) {
          touching->push_back(lerp(a, b, m.t_hi));
          touching->push_back(lerp(a, b, (m.t + m.t_hi) / 2));
        }
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

// ---- skeletons ----

void validate_skeleton(const IntersectionGraph& g, const Skeleton& sk) {
  const auto& f = g.family();
  if (sk.u >= f.size() || sk.v >= f.size()) throw Error(ErrorKind::InvalidSkeleton, "curve index out of range");
  if (!(sk.u < sk.v)) throw Error(ErrorKind::InvalidSkeleton, quoted(f, sk.u) + " does not precede " + quoted(f, sk.v));
  if (!g.adjacent(sk.u, sk.v))
    throw Error(ErrorKind::InvalidSkeleton, quoted(f, sk.u) + " and " + quoted(f, sk.v) + " do not intersect");
  if (!sk.supports.subset_of(between(f, sk.u, sk.v)))
    throw Error(ErrorKind::InvalidSkeleton, "supports must lie strictly between u and v");
  sk.supports.for_each([&](std::size_t s) {
    if ((g.neighbors(s) & sk.supports).empty()) return;
    throw Error(ErrorKind::InvalidSkeleton, "support " + quoted(f, s) + " meets another support");
  });
}

Skeleton make_skeleton(const IntersectionGraph& g, std::string_view u, std::string_view v,
                       std::span<const std::string> supports) {
  const auto& f = g.family();
  Skeleton sk{f.require(u), f.require(v), f.set_of(supports)};
  if (sk.v < sk.u) std::swap(sk.u, sk.v);
  validate_skeleton(g, sk);
  return sk;
}

Span support_window(const CurveFamily& f, const Skeleton& sk, std::size_t s) {
  std::vector<Piece> ends{Piece::whole(f[sk.u]), Piece::whole(f[sk.v])};
  auto hit = first_hit(f[s], ends);
  if (!hit) return Span::whole(f[s]);
  return Span::prefix(f[s], hit->on_curve, false);
}

bool is_supported(const IntersectionGraph& g, const Skeleton& sk, std::size_t p) {
  const auto& f = g.family();
  if (!(sk.u < p && p < sk.v) || sk.supports.contains(p)) return false;
  if (g.adjacent(p, sk.u) || g.adjacent(p, sk.v)) return false;
  bool found = false;
  (sk.supports & g.neighbors(p)).for_each([&](std::size_t s) {
    if (found) return;
    found = subcurves_intersect(Piece::whole(f[p]), Piece{&f[s], support_window(f, sk, s)});
  });
  return found;
}

CurveSet supported_subfamily(const IntersectionGraph& g, const Skeleton& sk) {
  CurveSet out(g.size());
  between(g.family(), sk.u, sk.v).for_each([&](std::size_t p) {
    if (is_supported(g, sk, p)) out.insert(p);
  });
  return out;
}

// ---- brackets ----

Bracket::Bracket(const CurveFamily& f, CurveSet p, CurveSet s, std::vector<BracketEntry> entries, bool supports_left)
    : family_(&f), p_(std::move(p)), s_(std::move(s)), entries_(std::move(entries)), supports_left_(supports_left) {
  auto curves = f.pointers(p_ | s_);
  exterior_ = std::make_shared<const ExteriorOracle>(curves);
}

const BracketEntry& Bracket::entry(std::size_t p) const {
  for (const auto& e : entries_)
    if (e.p == p) return e;
  throw Error(ErrorKind::UnknownCurve, "curve is not in P");
}

bool Bracket::in_interior(const Point& x) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const BracketEntry& e) { return e.region.contains(x); });
}

std::vector<Point> Bracket::region_samples(const GroundedCurve& c) const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    const Point& a = c.vertices[i];
    const Point& b = c.vertices[i + 1];
    auto ts = region_cuts(entries_, a, b, nullptr);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      out.push_back(lerp(a, b, ts[k]));
      if (k + 1 < ts.size()) out.push_back(lerp(a, b, (ts[k] + ts[k + 1]) / 2));
    }
  }
  return out;
}

std::vector<Point> Bracket::boundary_points(const GroundedCurve& c) const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < c.segment_count(); ++i) region_cuts(entries_, c.vertices[i], c.vertices[i + 1], &out);
  return out;
}

Bracket build_bracket(const CurveFamily& f, const CurveSet& p, const CurveSet& s) {
  if (p.intersects(s)) throw Error(ErrorKind::PreconditionFailure, "P and S share a curve");
  const bool s_left = s.empty() || p.empty() || s.last() < p.first();
  const bool s_right = s.empty() || p.empty() || p.last() < s.first();
  if (!s_left && !s_right) throw Error(ErrorKind::SideOrderViolation, "P and S interleave in basepoint order");

  const auto supports = s.members();
  std::vector<Piece> obstacles;
  for (auto i : supports) obstacles.push_back(Piece::whole(f[i]));

  std::vector<BracketEntry> entries;
  CurveSet used(f.size());
  p.for_each([&](std::size_t pi) {
    const auto& pc = f[pi];
    auto hit = first_hit(pc, obstacles);
    if (!hit) throw Error(ErrorKind::UnhitCurve, quoted(f, pi) + " meets no curve of S");
    BracketEntry e;
    e.p = pi;
    e.s = supports[hit->obstacle];
    e.p_prime = Span::prefix(pc, hit->on_curve, false);
    e.hit_on_s = hit->on_obstacle;
    used.insert(e.s);
    // boundary: p' up to the hit, back down s(p) to its basepoint, then along the baseline
    auto ring = piece_polyline(Piece{&pc, Span::prefix(pc, hit->on_curve, true)});
    auto down = piece_polyline(Piece{&f[e.s], Span::prefix(f[e.s], hit->on_obstacle, true)});
    for (auto it = down.rbegin() + 1; it != down.rend(); ++it) ring.push_back(*it);
    e.region = ClosedRegion(std::move(ring));
    entries.push_back(std::move(e));
  });
  s.for_each([&](std::size_t si) {
    if (!used.contains(si)) throw Error(ErrorKind::UnusedSupport, quoted(f, si) + " is no curve's first hit");
  });
  return Bracket(f, p, s, std::move(entries), s_left && !p.empty() && !s.empty());
}

std::string_view to_string(InteriorClass c) {
  switch (c) {
    case InteriorClass::Contained:
      return "contained";
    case InteriorClass::CrossesBoundaryOffBaseline:
      return "crosses_boundary_off_baseline";
    case InteriorClass::Outside:
      return "outside";
  }
  return "?";
}

InteriorClass interior_classify(const Bracket& br, const GroundedCurve& c) {
  auto samples = br.region_samples(c);
  if (std::all_of(samples.begin(), samples.end(), [&](const Point& x) { return br.in_interior(x); }))
    return InteriorClass::Contained;
  for (const auto& x : br.boundary_points(c))
    if (x.y > 0 && br.in_interior(x)) return InteriorClass::CrossesBoundaryOffBaseline;
  return InteriorClass::Outside;
}

bool meets_interior(const Bracket& br, const GroundedCurve& c) {
  auto samples = br.region_samples(c);
  return std::any_of(samples.begin(), samples.end(), [&](const Point& x) { return br.in_interior(x); });
}

BracketCrossing check_bracket_crossing(const Bracket& br, const GroundedCurve& c) {
  const auto& f = br.family();
  if (auto i = f.index_of(c.id); i && (br.P() | br.S()).contains(*i))
    throw Error(ErrorKind::PreconditionFailure, quoted(f, *i) + " belongs to the bracket");
  BracketCrossing out;
  out.hypothesis = meets_interior(br, c) && br.exterior().meets(c);
  if (!out.hypothesis) return out;
  for (const auto& e : br.entries())
    if (!curves_intersect(c, f[e.p]) && !curves_intersect(c, f[e.s])) out.holds = false;
  return out;
}

// ---- bracket systems ----

void validate_bracket_system(std::span<const Bracket> system) {
  const std::size_t n = system.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = system[i].family();
    if (&f != &system.front().family())
      throw Error(ErrorKind::PreconditionFailure, "brackets come from different families");
    const std::string label = "bracket " + std::to_string(i + 1);
    system[i].P().for_each([&](std::size_t p) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto samples = system[j].region_samples(f[p]);
        for (const auto& x : samples)
          if (!system[j].in_interior(x))
            throw Error(ErrorKind::PreconditionFailure, label + ": " + quoted(f, p) + " is not contained in the interior of bracket " +
                                                            std::to_string(j + 1));
      }
    });
    std::vector<const ExteriorOracle*> later;
    for (std::size_t j = i + 1; j < n; ++j) later.push_back(&system[j].exterior());
    system[i].S().for_each([&](std::size_t s) {
      if (!meets_common_exterior(f[s].vertices, later))
        throw Error(ErrorKind::PreconditionFailure,
                    label + ": support " + quoted(f, s) + " does not reach the common exterior of the later brackets");
    });
  }
}

void validate_bracket_system(ChiOracle& chi, std::span<const Bracket> system, long xi) {
  const long n = static_cast<long>(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    const int measured = chi.chi(system[i].P());
    if (!(measured > (n - 1) * xi))
      throw Error(ErrorKind::PreconditionFailure, "bracket " + std::to_string(i + 1) + ": chi(P) = " + std::to_string(measured) +
                                                      " is not above " + std::to_string((n - 1) * xi));
  }
  validate_bracket_system(system);
}

namespace {

std::vector<std::size_t> extract_rest(ChiOracle& chi, const std::vector<Bracket>& system, long xi) {
  const auto& g = chi.graph();
  const auto& f = g.family();
  const std::size_t s1 = system.front().S().first();
  if (system.size() == 1) return {s1};

  const long n = static_cast<long>(system.size());
  std::vector<Bracket> next;
  for (std::size_t i = 1; i < system.size(); ++i) {
    const auto& br = system[i];
    const CurveSet touching = br.P() & g.neighbors(s1);
    const int touching_chi = chi.chi(touching);
    if (touching_chi > xi)
      throw Error(ErrorKind::PreconditionFailure, "curves of P_" + std::to_string(i + 1) + " meeting " + quoted(f, s1) +
                                                      " have chromatic number " + std::to_string(touching_chi) +
                                                      " above xi = " + std::to_string(xi));
    const CurveSet kept = br.P() - touching;
    CurveSet supports(f.size());
    kept.for_each([&](std::size_t p) { supports.insert(br.s_of(p)); });
    const int kept_chi = chi.chi(kept);
    if (!(kept_chi > (n - 2) * xi))
      throw Error(ErrorKind::InternalContradiction, "chi(P'_" + std::to_string(i + 1) + ") = " + std::to_string(kept_chi) +
                                                        " is not above " + std::to_string((n - 2) * xi));
    try {
      next.push_back(build_bracket(f, kept, supports));
    } catch (const Error& e) {
      throw Error(ErrorKind::InternalContradiction, std::string("reduced bracket is invalid: ") + e.what());
    }
  }
  try {
    validate_bracket_system(next);
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalContradiction, std::string("reduced system is invalid: ") + e.what());
  }
  auto rest = extract_rest(chi, next, xi);
  for (auto s : rest)
    if (!g.adjacent(s1, s))
      throw Error(ErrorKind::InternalContradiction, quoted(f, s1) + " misses the later support " + quoted(f, s));
  rest.insert(rest.begin(), s1);
  return rest;
}

}  // namespace

std::vector<std::size_t> extract_clique(ChiOracle& chi, std::span<const Bracket> system, long xi) {
  if (system.empty()) return {};
  validate_bracket_system(chi, system, xi);
  std::vector<Bracket> copy(system.begin(), system.end());
  auto out = extract_rest(chi, copy, xi);
  const auto& f = chi.graph().family();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!system[i].S().contains(out[i]))
      throw Error(ErrorKind::InternalContradiction, "chosen curve is not a support of its bracket");
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (curve_intersections(f[out[i]], f[out[j]]).empty())
        throw Error(ErrorKind::InternalContradiction, quoted(f, out[i]) + " and " + quoted(f, out[j]) + " are disjoint");
  }
  return out;
}

// ---- clique systems ----

CliqueAnchors clique_anchors(const IntersectionGraph& g, const CurveSet& k) {
  const auto& f = g.family();
  if (k.size() < 2) throw Error(ErrorKind::NotAClique, "a clique needs at least two curves");
  if (!g.is_clique(k)) throw Error(ErrorKind::NotAClique, "curves are not pairwise intersecting");
  CliqueAnchors a;
  a.clique = k;
  auto members = k.members();
  a.l = members[0];
  a.r = members[1];
  const auto& l = f[a.l];
  const auto& r = f[a.r];
  auto hits = curve_intersections(l, r);
  const auto& first = hits.front();
  a.l_prime = Span::prefix(l, first.first, true);
  a.r_prime = Span::prefix(r, first.second, false);
  a.joint = first.first.at;
  std::size_t on_l_prime = 0;
  for (const auto& h : hits)
    if (a.l_prime.contains(h.first)) ++on_l_prime;
  if (on_l_prime != 1)
    throw Error(ErrorKind::InternalContradiction, "l' meets r in " + std::to_string(on_l_prime) + " points");
  return a;
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::Neither:
      return "neither";
  }
  return "?";
}

Side side_for_clique(const CurveFamily& f, std::size_t s, const CliqueAnchors& anchors) {
  if (!(anchors.l < s && s < anchors.r))
    throw Error(ErrorKind::PreconditionFailure, quoted(f, s) + " is not between the anchors of the clique");
  const auto& c = f[s];
  const Piece lp{&f[anchors.l], anchors.l_prime};
  const Piece rp{&f[anchors.r], anchors.r_prime};
  std::vector<Piece> lv{lp}, rv{rp};
  auto a = first_hit(c, lv);
  auto b = first_hit(c, rv);
  if (!a && !b) return Side::Neither;
  // the definition read literally: the initial part of s before its first hit avoids the other anchor piece
  const bool left = a && !subcurves_intersect(Piece{&c, Span::prefix(c, a->on_curve, false)}, rp);
  const bool right = b && !subcurves_intersect(Piece{&c, Span::prefix(c, b->on_curve, false)}, lp);
  if (left == right)
    throw Error(ErrorKind::InconsistentSide, quoted(f, s) + " is " + (left ? "both left and right" : "neither left nor right") +
                                                 " for the clique");
  return left ? Side::Left : Side::Right;
}

CurveSet CliqueSystem::members(std::size_t universe) const {
  CurveSet out(universe);
  for (const auto& a : cliques) out |= a.clique;
  return out;
}

CliqueSystem build_clique_system(const IntersectionGraph& g, const std::vector<CurveSet>& cliques) {
  const auto& f = g.family();
  CliqueSystem cs;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    try {
      cs.cliques.push_back(clique_anchors(g, cliques[i]));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidCliqueSystem, "clique " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  cs.sides.resize(cliques.size());
  for (std::size_t j = 0; j < cliques.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& outer = cs.cliques[i];
      if (!cliques[j].subset_of(between(f, outer.l, outer.r)))
        throw Error(ErrorKind::InvalidCliqueSystem, "clique " + std::to_string(j + 1) + " is not between the anchors of clique " +
                                                        std::to_string(i + 1));
      std::optional<Side> common;
      cliques[j].for_each([&](std::size_t c) {
        const Side s = side_for_clique(f, c, outer);
        if (s == Side::Neither)
          throw Error(ErrorKind::InvalidCliqueSystem, quoted(f, c) + " misses the anchors of clique " + std::to_string(i + 1));
        if (common && *common != s)
          throw Error(ErrorKind::InvalidCliqueSystem, "clique " + std::to_string(j + 1) + " has mixed sides for clique " +
                                                          std::to_string(i + 1));
        common = s;
      });
      cs.sides[j].push_back(*common);
    }
  }
  const std::size_t n = cs.cliques.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(cs.cliques[i].l < cs.cliques[i + 1].l && cs.cliques[i + 1].r < cs.cliques[i].r))
      throw Error(ErrorKind::InternalContradiction, "anchor order is not nested");
  if (n > 0 && !(cs.cliques[n - 1].l < cs.cliques[n - 1].r))
    throw Error(ErrorKind::InternalContradiction, "anchor order is not nested");
  auto curves = f.pointers(cs.members(f.size()));
  cs.exterior = std::make_shared<const ExteriorOracle>(curves);
  return cs;
}

CurveSet system_window(const CurveFamily& f, const CliqueSystem& cs) {
  if (cs.cliques.empty()) return f.all();
  return between(f, cs.cliques.back().l, cs.cliques.back().r);
}

bool crosses_system(const CurveFamily& f, const CliqueSystem& cs, std::size_t s) {
  if (cs.cliques.empty()) return true;
  if (!system_window(f, cs).contains(s))
    throw Error(ErrorKind::PreconditionFailure, quoted(f, s) + " is not between the anchors of the last clique");
  return cs.exterior->meets(f[s]);
}

std::vector<int> signature(const CurveFamily& f, const CliqueSystem& cs, std::size_t s) {
  if (!crosses_system(f, cs, s)) throw Error(ErrorKind::NotCrossing, quoted(f, s) + " does not cross the clique system");
  std::vector<int> sigma;
  for (std::size_t j = 0; j < cs.cliques.size(); ++j) {
    const Side side = side_for_clique(f, s, cs.cliques[j]);
    if (side == Side::Neither)
      throw Error(ErrorKind::NotCrossing, quoted(f, s) + " misses the anchors of clique " + std::to_string(j + 1));
    sigma.push_back(side == Side::Left ? 0 : 1);
  }
  return sigma;
}

bool check_signature_betweenness(const IntersectionGraph& g, const CliqueSystem& cs, std::size_t s1, std::size_t s2,
                                 std::size_t s3) {
  const auto& f = g.family();
  if (!(s1 < s2 && s2 < s3)) throw Error(ErrorKind::PreconditionFailure, "curves are not in basepoint order");
  if (g.adjacent(s1, s2) || g.adjacent(s2, s3) || g.adjacent(s1, s3))
    throw Error(ErrorKind::PreconditionFailure, "curves are not pairwise disjoint");
  const CurveSet window = system_window(f, cs);
  for (auto s : {s1, s2, s3}) {
    if (!window.contains(s)) throw Error(ErrorKind::PreconditionFailure, quoted(f, s) + " is outside the window");
    if (!crosses_system(f, cs, s)) throw Error(ErrorKind::PreconditionFailure, quoted(f, s) + " does not cross the system");
  }
  const auto outer = signature(f, cs, s1);
  if (outer != signature(f, cs, s3)) throw Error(ErrorKind::PreconditionFailure, "outer signatures differ");
  return signature(f, cs, s2) == outer;
}

}  // namespace outerstring
