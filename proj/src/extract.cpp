#include "outerstring/extract.hpp"

#include <algorithm>
#include <climits>

#include "outerstring/bounds.hpp"

namespace outerstring {

std::string_view to_string(ExtractionReport::Outcome o) {
  return o == ExtractionReport::Outcome::Found ? "found" : "step_failure";
}

namespace {

std::string num(long v) { return std::to_string(v); }

std::string text(const std::optional<Rational>& q) { return q ? to_string(*q) : std::string("unrepresentable"); }

std::optional<Rational> bound_or_none(const auto& compute) {
  try {
    return Rational(compute());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundTooLarge) return std::nullopt;
    throw;
  }
}

std::optional<long> as_long(const std::optional<Rational>& q) {
  if (!q) return std::nullopt;
  BigInt z = q->get_num() / q->get_den();
  if (!z.fits_slong_p()) return std::nullopt;
  return z.get_si();
}

// Shared bookkeeping for the report-producing procedures.
struct Run {
  ChiOracle& chi;
  const BoundParams& params;
  ExtractionReport& rep;
  std::string scope;

  const IntersectionGraph& g() const { return chi.graph(); }
  const CurveFamily& f() const { return chi.graph().family(); }
  std::string name(const std::string& step) const { return scope.empty() ? step : scope + "." + step; }

  std::optional<Rational> threshold(const std::string& step, std::optional<Rational> paper) const {
    if (auto it = params.overrides.find(name(step)); it != params.overrides.end()) return it->second;
    if (auto it = params.overrides.find("*"); it != params.overrides.end()) return it->second;
    return paper;
  }

  TraceStep& step(const std::string& step, std::vector<std::pair<std::string, std::string>> values = {},
                  const CurveSet* chosen = nullptr) {
    TraceStep s{name(step), std::move(values), {}};
    if (chosen) s.chosen = f().ids_of(*chosen);
    rep.steps.push_back(std::move(s));
    return rep.steps.back();
  }

  bool fail(const std::string& step, std::string threshold, std::string measured) {
    if (!rep.failure) rep.failure = StepFailure{name(step), std::move(threshold), std::move(measured)};
    rep.outcome = ExtractionReport::Outcome::StepFailure;
    return false;
  }

  /// chi(s) > threshold, where the threshold may be overridden.
  bool above(const std::string& stepname, const CurveSet& s, std::optional<Rational> paper) {
    const auto thr = threshold(stepname, std::move(paper));
    const int x = chi.chi(s);
    step(stepname, {{"chi", num(x)}, {"threshold", text(thr)}}, &s);
    if (!thr || !(Rational(x) > *thr)) return fail(stepname, "chi > " + text(thr), num(x));
    return true;
  }

  /// A claim of the proof of the form chi(s) <= bound (never overridden).
  bool at_most(const std::string& stepname, const CurveSet& s, long bound) {
    const int x = chi.chi(s);
    step(stepname, {{"chi", num(x)}, {"at_most", num(bound)}}, &s);
    if (x > bound) return fail(stepname, "chi <= " + num(bound), num(x));
    return true;
  }
};

CurveSet set_of(std::size_t universe, std::initializer_list<std::size_t> xs) { return CurveSet(universe, xs); }

}  // namespace

// ---- McGuinness ----

McGuinnessResult mcguinness(ChiOracle& chi, const CurveSet& domain, long alpha, long beta) {
  const auto& g = chi.graph();
  const auto& f = g.family();
  const int total = chi.chi(domain);
  if (alpha < 0 || beta < 0) throw Error(ErrorKind::PreconditionFailure, "alpha and beta must be nonnegative");
  if (!(Rational(total) > Rational(2 * alpha) * (beta + 1)))
    throw Error(ErrorKind::PreconditionFailure, "chi = " + num(total) + " is not above 2*alpha*(beta+1) = " +
                                                    to_string(Rational(2 * alpha) * (beta + 1)));
  McGuinnessResult out;
  CurveSet current(f.size());
  domain.for_each([&](std::size_t c) {
    current.insert(c);
    const int x = chi.chi(current);
    if (x > beta + 1) throw Error(ErrorKind::InternalContradiction, "block chromatic number jumped past beta+1");
    if (x == beta + 1) {
      out.blocks.push_back(current);
      current = CurveSet(f.size());
    }
  });
  if (!current.empty()) out.blocks.push_back(current);

  CurveSet parity[2] = {CurveSet(f.size()), CurveSet(f.size())};
  for (std::size_t i = 0; i < out.blocks.size(); ++i) parity[i % 2] |= out.blocks[i];
  const Rational need = Rational(alpha) * (beta + 1);
  if (Rational(chi.chi(parity[0])) > need)
    out.parity = 0;
  else if (Rational(chi.chi(parity[1])) > need)
    out.parity = 1;
  else
    throw Error(ErrorKind::InternalContradiction, "neither parity class is above alpha*(beta+1)");

  std::vector<CurveSet> classes(static_cast<std::size_t>(beta + 1), CurveSet(f.size()));
  for (std::size_t i = static_cast<std::size_t>(out.parity); i < out.blocks.size(); i += 2) {
    auto w = chromatic_number(g, out.blocks[i]);
    if (w.colors > beta + 1) throw Error(ErrorKind::InternalContradiction, "block needs more than beta+1 colors");
    for (int c = 0; c < w.colors; ++c) classes[static_cast<std::size_t>(c)] |= w.color_class(c);
  }
  int best = -1;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const int x = chi.chi(classes[j]);
    if (x > best) {
      best = x;
      out.color = static_cast<int>(j);
    }
  }
  out.h = classes[static_cast<std::size_t>(out.color)];

  if (!(best > alpha)) throw Error(ErrorKind::InternalContradiction, "chi(H) = " + num(best) + " is not above alpha");
  const auto members = out.h.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!g.adjacent(members[a], members[b])) continue;
      const int gap = chi.chi(between(f, members[a], members[b]) & domain);
      if (!(gap > beta))
        throw Error(ErrorKind::InternalContradiction, "chi between '" + f[members[a]].id + "' and '" + f[members[b]].id +
                                                          "' is " + num(gap) + ", not above beta");
    }
  return out;
}

std::pair<std::size_t, std::size_t> intersecting_gap_pair(ChiOracle& chi, const CurveSet& domain, long beta) {
  const auto& g = chi.graph();
  auto m = mcguinness(chi, domain, 1, beta);
  const auto members = m.h.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (g.adjacent(members[a], members[b])) {
        if (!(chi.chi(between(g.family(), members[a], members[b]) & domain) > beta))
          throw Error(ErrorKind::InternalContradiction, "gap pair fails its bound");
        return {members[a], members[b]};
      }
  throw Error(ErrorKind::InternalContradiction, "H with chi > 1 has no intersecting pair");
}

// ---- BFS layers ----

std::optional<std::size_t> external_support(const IntersectionGraph& g, const ExteriorOracle& ext_g,
                                            const CurveSet& domain, std::size_t p, std::optional<std::size_t> witness) {
  const auto& f = g.family();
  if (witness && domain.contains(*witness) && g.adjacent(p, *witness) && ext_g.meets(f[*witness])) return witness;
  std::optional<std::size_t> found;
  (g.neighbors(p) & domain).for_each([&](std::size_t s) {
    if (!found && ext_g.meets(f[s])) found = s;
  });
  return found;
}

BfsResult bfs_supported(ChiOracle& chi, const CurveSet& domain) {
  const auto& g = chi.graph();
  const auto& f = g.family();
  if (clique_number(g, domain).size < 2) throw Error(ErrorKind::PreconditionFailure, "the family has no intersecting pair");
  BfsResult out;
  int best = -1;
  for (const auto& comp : g.components(domain)) {
    const int x = chi.chi(comp);
    if (x > best) {
      best = x;
      out.component = comp;
    }
  }
  CurveSet seen(f.size());
  CurveSet frontier = set_of(f.size(), {out.component.first()});
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    seen |= frontier;
    frontier = g.touching(frontier, out.component) - seen;
  }
  if (seen != out.component) throw Error(ErrorKind::InternalContradiction, "BFS layers do not cover the component");
  for (std::size_t i = 0; i < out.layers.size(); ++i)
    for (std::size_t j = i + 2; j < out.layers.size(); ++j)
      if (!g.touching(out.layers[i], out.layers[j]).empty())
        throw Error(ErrorKind::InternalContradiction, "layers " + num(static_cast<long>(i)) + " and " +
                                                          num(static_cast<long>(j)) + " intersect");
  int layer_best = -1;
  for (std::size_t d = 1; d < out.layers.size(); ++d) {
    const int x = chi.chi(out.layers[d]);
    if (x > layer_best) {
      layer_best = x;
      out.d = d;
    }
  }
  out.g = out.layers[out.d];
  if (!(Rational(layer_best) >= Rational(chi.chi(domain), 2)))
    throw Error(ErrorKind::InternalContradiction, "chi(G) is below chi(F)/2");
  ExteriorOracle ext(f.pointers(out.g));
  out.g.for_each([&](std::size_t p) {
    std::optional<std::size_t> witness;
    const CurveSet prev = g.neighbors(p) & out.layers[out.d - 1];
    if (!prev.empty()) witness = prev.first();
    auto s = external_support(g, ext, domain, p, witness);
    if (!s) throw Error(ErrorKind::InternalContradiction, "'" + f[p].id + "' has no external support");
    out.support.emplace_back(p, *s);
  });
  return out;
}

// ---- skeleton search ----

std::optional<SkeletonSupported> find_skeleton_supported(ChiOracle& chi, const CurveSet& domain, const Rational& threshold) {
  const auto& g = chi.graph();
  const auto& f = g.family();
  const auto members = domain.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const std::size_t u = members[a], v = members[b];
      if (!g.adjacent(u, v)) continue;
      const CurveSet inner = between(f, u, v) & domain;
      const CurveSet q = g.touching(set_of(f.size(), {u, v}), inner);
      if (q.empty()) continue;
      const auto coloring = greedy_coloring(g, q);
      for (int c = 0; c < coloring.colors; ++c) {
        Skeleton sk{u, v, coloring.color_class(c)};
        const CurveSet p = supported_subfamily(g, sk) & domain;
        const int x = chi.chi(p);
        if (!(Rational(x) > threshold)) continue;
        validate_skeleton(g, sk);
        p.for_each([&](std::size_t c2) {
          if (!is_supported(g, sk, c2)) throw Error(ErrorKind::InternalContradiction, "returned curve is not supported");
        });
        return SkeletonSupported{sk, p, x};
      }
    }
  return std::nullopt;
}

// ---- report wrappers ----

ExtractionReport run_mcguinness(ChiOracle& chi, const CurveSet& domain, const BoundParams& params) {
  ExtractionReport rep;
  rep.procedure = "mcguinness";
  Run run{chi, params, rep, ""};
  const Rational need = Rational(2 * params.alpha) * (params.beta + 1);
  if (!run.above("chi_F", domain, need)) return rep;
  try {
    auto m = mcguinness(chi, domain, params.alpha, params.beta);
    for (std::size_t i = 0; i < m.blocks.size(); ++i)
      run.step("block_" + num(static_cast<long>(i)), {{"chi", num(chi.chi(m.blocks[i]))}}, &m.blocks[i]);
    run.step("H", {{"chi", num(chi.chi(m.h))}, {"parity", num(m.parity)}, {"color", num(m.color)}}, &m.h);
    rep.structure = "subfamily";
    rep.subfamily = m.h;
    rep.outcome = ExtractionReport::Outcome::Found;
  } catch (const Error& e) {
    run.fail("mcguinness", "postconditions", e.what());
  }
  return rep;
}

ExtractionReport run_bfs_supported(ChiOracle& chi, const CurveSet& domain) {
  ExtractionReport rep;
  rep.procedure = "bfs";
  BoundParams none;
  Run run{chi, none, rep, ""};
  const auto omega = clique_number(chi.graph(), domain).size;
  run.step("omega", {{"omega", num(static_cast<long>(omega))}});
  if (omega < 2) {
    run.fail("omega", "omega >= 2", num(static_cast<long>(omega)));
    return rep;
  }
  try {
    auto r = bfs_supported(chi, domain);
    for (std::size_t i = 0; i < r.layers.size(); ++i)
      run.step("layer_" + num(static_cast<long>(i)), {{"chi", num(chi.chi(r.layers[i]))}}, &r.layers[i]);
    auto& s = run.step("G", {{"chi", num(chi.chi(r.g))}, {"chi_F", num(chi.chi(domain))}, {"d", num(static_cast<long>(r.d))}}, &r.g);
    for (auto [p, sup] : r.support) s.chosen.push_back(chi.graph().family()[p].id + "<-" + chi.graph().family()[sup].id);
    rep.structure = "subfamily";
    rep.subfamily = r.g;
    rep.outcome = ExtractionReport::Outcome::Found;
  } catch (const Error& e) {
    run.fail("bfs", "postconditions", e.what());
  }
  return rep;
}

ExtractionReport run_find_skeleton(ChiOracle& chi, const CurveSet& domain, const BoundParams& params) {
  ExtractionReport rep;
  rep.procedure = "skeleton";
  Run run{chi, params, rep, ""};
  auto found = find_skeleton_supported(chi, domain, Rational(params.alpha));
  if (!found) {
    run.step("search", {{"threshold", num(params.alpha)}});
    run.fail("search", "chi > " + num(params.alpha), "no skeleton");
    return rep;
  }
  const auto& f = chi.graph().family();
  auto& s = run.step("skeleton", {{"chi", num(found->chi)}}, &found->p);
  s.chosen.insert(s.chosen.begin(), {f[found->skeleton.u].id, f[found->skeleton.v].id});
  rep.structure = "skeleton";
  rep.skeleton = found->skeleton;
  rep.subfamily = found->p;
  rep.outcome = ExtractionReport::Outcome::Found;
  return rep;
}

// ---- bracket system pipeline ----

ExtractionReport attempt_bracket_system(ChiOracle& chi, const CurveSet& domain, const BoundParams& params) {
  ExtractionReport rep;
  rep.procedure = "bracket-system";
  Run run{chi, params, rep, ""};
  const auto& g = chi.graph();
  const auto& f = g.family();
  const long k = params.k, xi = params.xi;
  if (k < 1 || xi < 1 || params.alpha < 0) {
    run.fail("params", "k >= 1, xi >= 1, alpha >= 0", "k=" + num(k) + " xi=" + num(xi) + " alpha=" + num(params.alpha));
    return rep;
  }
  const auto tr = f_bound_trace(BigInt(params.alpha), k, BigInt(xi));
  const Rational gamma = run.threshold("gamma", Rational(tr.gamma)).value();
  auto beta = [&](long i) {
    return run.threshold("beta_" + num(i), Rational(tr.beta[static_cast<std::size_t>(i)])).value();
  };
  run.step("constants", {{"gamma", to_string(gamma)}, {"beta_" + num(k + 1), to_string(beta(k + 1))}});

  const auto omega = clique_number(g, domain).size;
  run.step("omega", {{"omega", num(static_cast<long>(omega))}, {"k", num(k)}});
  if (static_cast<long>(omega) > k) return run.fail("omega", "omega <= " + num(k), num(static_cast<long>(omega))), rep;

  // (1) nested externally supported families
  std::vector<CurveSet> fam{domain};
  if (!run.above("chi_F_0", domain, gamma)) return rep;
  for (long i = 1; i <= k + 1; ++i) {
    const CurveSet& prev = fam.back();
    if (clique_number(g, prev).size < 2) return run.fail("bfs_" + num(i), "omega >= 2", "1"), rep;
    auto r = bfs_supported(chi, prev);
    fam.push_back(r.g);
    Rational pow = 1;
    for (long j = 0; j < i; ++j) pow *= 2;
    if (!run.above("chi_F_" + num(i), r.g, gamma / pow)) return rep;
  }

  // (2) gap pair
  const CurveSet& last = fam.back();
  const Rational gap_beta = beta(k + 1) + 2 * xi;
  auto gap_long = as_long(gap_beta);
  if (!run.above("gap_pair", last, 2 * (gap_beta + 1))) return rep;
  if (!gap_long) return run.fail("gap_pair", "beta fits", "too large"), rep;
  auto [u, v] = intersecting_gap_pair(chi, last, *gap_long);
  const CurveSet uv = set_of(f.size(), {u, v});
  {
    CurveSet between_uv = between(f, u, v) & last;
    run.step("gap_pair", {{"chi_between", num(chi.chi(between_uv))}}, &uv);
  }

  // (3) discard curves meeting u or v
  const CurveSet inner = between(f, u, v) & last;
  const CurveSet meeting = g.touching(uv, inner);
  if (!run.at_most("meets_u_or_v", meeting, 2 * xi)) return rep;
  CurveSet big_g = inner - meeting;
  if (!run.above("chi_G", big_g, beta(k + 1))) return rep;

  // (4) reverse loop
  std::vector<std::optional<Bracket>> brackets(static_cast<std::size_t>(k + 1));
  CurveSet g_next = big_g;
  for (long i = k; i >= 0; --i) {
    const std::string si = num(i);
    const CurveSet& fi = fam[static_cast<std::size_t>(i)];
    const CurveSet& fnext = fam[static_cast<std::size_t>(i + 1)];
    const CurveSet q = g.touching(uv, between(f, u, v) & fi);
    if (!run.at_most("Q_" + si, q, 2 * xi)) return rep;
    const auto coloring = chromatic_number(g, q);
    CurveSet supported(f.size());
    for (int c = 0; c < coloring.colors; ++c) {
      Skeleton sk{u, v, coloring.color_class(c)};
      const CurveSet all_supported = supported_subfamily(g, sk) & domain;
      const int x = chi.chi(all_supported);
      run.step("skeleton_" + si + "_" + num(c), {{"chi_supported", num(x)}, {"alpha", num(params.alpha)}}, &sk.supports);
      if (x > params.alpha) {
        rep.structure = "skeleton";
        rep.skeleton = sk;
        rep.subfamily = all_supported;
        rep.outcome = ExtractionReport::Outcome::Found;
        return rep;
      }
      supported |= all_supported & g_next;
    }
    const CurveSet h = g_next - supported;
    if (!run.above("H_" + si, h, 2 * beta(i) + 6 * k * xi + 2)) return rep;

    // s(p): first curve along p among the curves of F_i meeting ext(F_{i+1})
    ExteriorOracle ext(f.pointers(fnext));
    std::vector<std::size_t> reach;
    fi.for_each([&](std::size_t s) {
      if (ext.meets(f[s])) reach.push_back(s);
    });
    std::vector<std::size_t> s_of(f.size(), SIZE_MAX);
    CurveSet left(f.size()), right(f.size());
    bool ok = true;
    h.for_each([&](std::size_t p) {
      if (!ok) return;
      std::vector<Piece> obstacles;
      std::vector<std::size_t> owner;
      for (auto s : reach)
        if (g.adjacent(p, s)) {
          obstacles.push_back(Piece::whole(f[s]));
          owner.push_back(s);
        }
      auto hit = first_hit(f[p], obstacles);
      if (!hit) {
        ok = run.fail("s_of_" + si, "external support of '" + f[p].id + "'", "none");
        return;
      }
      s_of[p] = owner[hit->obstacle];
      (s_of[p] < p ? left : right).insert(p);
    });
    if (!ok) return rep;
    const int chi_h = chi.chi(h);
    const bool use_left = 2 * chi.chi(left) >= chi_h;
    const CurveSet side = use_left ? left : right;
    run.step("split_" + si, {{"chi_left", num(chi.chi(left))}, {"chi_right", num(chi.chi(right))},
                             {"side", use_left ? "left" : "right"}});
    if (2 * chi.chi(side) < chi_h) return run.fail("split_" + si, "chi(side) >= chi(H)/2", num(chi.chi(side))), rep;
    if (!run.above("H_side_" + si, side, beta(i) + 3 * k * xi + 1)) return rep;

    CurveSet c_i(f.size());
    int c_best = -1;
    for (const auto& comp : g.components(side)) {
      const int x = chi.chi(comp);
      if (x > c_best) {
        c_best = x;
        c_i = comp;
      }
    }
    run.step("C_" + si, {{"chi", num(c_best)}}, &c_i);
    bool outside = true;
    c_i.for_each([&](std::size_t p) {
      if (use_left ? !(s_of[p] < c_i.first()) : !(s_of[p] > c_i.last())) outside = false;
    });
    if (!outside) return run.fail("supports_outside_C_" + si, "every s(p) beyond C", "violated"), rep;

    // P_i: from the far end inward until chi reaches k*xi + 1
    CurveSet p_i(f.size());
    auto order = c_i.members();
    if (use_left) std::reverse(order.begin(), order.end());
    for (auto p : order) {
      if (chi.chi(p_i) == k * xi + 1) break;
      p_i.insert(p);
    }
    if (chi.chi(p_i) != k * xi + 1) return run.fail("P_" + si, "chi = " + num(k * xi + 1), num(chi.chi(p_i))), rep;
    CurveSet s_i(f.size());
    p_i.for_each([&](std::size_t p) { s_i.insert(s_of[p]); });
    std::optional<Bracket> br;
    try {
      br = build_bracket(f, p_i, s_i);
    } catch (const Error& e) {
      return run.fail("bracket_" + si, "valid bracket", e.what()), rep;
    }
    bool same = true;
    p_i.for_each([&](std::size_t p) { same = same && br->s_of(p) == s_of[p]; });
    if (!same) return run.fail("bracket_" + si, "s(p) agrees", "differs"), rep;
    run.step("P_" + si, {{"chi", num(chi.chi(p_i))}}, &p_i);
    run.step("S_" + si, {}, &s_i);

    const CurveSet rest = c_i - p_i;
    CurveSet boundary(f.size()), inside(f.size());
    rest.for_each([&](std::size_t c) {
      const auto cls = interior_classify(*br, f[c]);
      if (cls == InteriorClass::Contained) inside.insert(c);
      if (cls == InteriorClass::CrossesBoundaryOffBaseline) boundary.insert(c);
    });
    if (!run.at_most("boundary_" + si, boundary, 2 * k * xi)) return rep;
    if (!run.above("G_" + si, inside, beta(i))) return rep;
    brackets[static_cast<std::size_t>(i)] = std::move(br);
    g_next = inside;
  }

  std::vector<Bracket> system;
  for (auto& b : brackets) system.push_back(*b);
  try {
    validate_bracket_system(chi, system, xi);
  } catch (const Error& e) {
    return run.fail("bracket_system", "valid bracket system", e.what()), rep;
  }
  rep.brackets = system;
  try {
    rep.clique = extract_clique(chi, system, xi);
  } catch (const Error& e) {
    return run.fail("extract_clique", "clique extraction", e.what()), rep;
  }
  CurveSet clique(f.size());
  for (auto c : rep.clique) clique.insert(c);
  run.step("clique", {{"size", num(static_cast<long>(rep.clique.size()))}}, &clique);
  rep.structure = "bracket_system";
  rep.outcome = ExtractionReport::Outcome::Found;
  return rep;
}

// ---- clique systems ----

namespace {

std::vector<int> common_signature(const CliqueSystem& cs, std::size_t j, std::size_t n) {
  std::vector<int> sig;
  for (std::size_t i = 0; i < n; ++i) sig.push_back(cs.sides[j][i] == Side::Left ? 0 : 1);
  return sig;
}

std::vector<CurveSet> sets_of(const CliqueSystem& cs) {
  std::vector<CurveSet> out;
  for (const auto& a : cs.cliques) out.push_back(a.clique);
  return out;
}

}  // namespace

std::optional<CliqueSystem> merge_last_cliques(const IntersectionGraph& g, const CliqueSystem& cs, std::size_t n,
                                               TraceStep* trace) {
  const std::size_t total = cs.size();
  if (total < n + 2) return std::nullopt;
  for (std::size_t i = n; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j) {
      if (common_signature(cs, i, n) != common_signature(cs, j, n)) continue;
      const auto& li = cs.cliques[i];
      const bool left = cs.sides[j][i] == Side::Left;
      CurveSet merged = cs.cliques[j].clique;
      merged.insert(left ? li.l : li.r);
      if (!g.is_clique(merged))
        throw Error(ErrorKind::InternalContradiction, "merged clique is not a clique");
      auto sets = sets_of(cs);
      sets.resize(n);
      sets.push_back(merged);
      if (trace) {
        trace->values.emplace_back("i", std::to_string(i - n + 1));
        trace->values.emplace_back("j", std::to_string(j - n + 1));
        trace->values.emplace_back("side", left ? "left" : "right");
        trace->chosen = g.family().ids_of(merged);
      }
      try {
        return build_clique_system(g, sets);
      } catch (const Error& e) {
        throw Error(ErrorKind::InternalContradiction, std::string("merged system is invalid: ") + e.what());
      }
    }
  return std::nullopt;
}

namespace {

struct Searcher {
  const IntersectionGraph& g;
  const std::vector<long>& sizes;
  std::size_t budget;
  std::size_t used = 0;
  std::vector<CurveSet> chosen;
  std::vector<CliqueAnchors> anchors;

  bool consistent(const CurveSet& k) {
    const auto& f = g.family();
    for (const auto& a : anchors) {
      std::optional<Side> common;
      bool ok = true;
      k.for_each([&](std::size_t c) {
        if (!ok) return;
        const Side s = side_for_clique(f, c, a);
        if (s == Side::Neither || (common && *common != s)) ok = false;
        common = s;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool level(const CurveSet& window) {
    if (chosen.size() == sizes.size()) return true;
    const auto members = window.members();
    const std::size_t want = static_cast<std::size_t>(sizes[chosen.size()]);
    std::vector<std::size_t> pick;
    return grow(window, members, 0, want, pick);
  }

  bool grow(const CurveSet& window, const std::vector<std::size_t>& members, std::size_t from, std::size_t want,
            std::vector<std::size_t>& pick) {
    if (++used > budget) return false;
    if (pick.size() == want) {
      CurveSet k(g.size());
      for (auto c : pick) k.insert(c);
      if (!consistent(k)) return false;
      auto a = clique_anchors(g, k);
      chosen.push_back(k);
      anchors.push_back(a);
      if (level(between(g.family(), a.l, a.r) & window)) return true;
      chosen.pop_back();
      anchors.pop_back();
      return false;
    }
    for (std::size_t i = from; i < members.size(); ++i) {
      bool ok = true;
      for (auto c : pick) ok = ok && g.adjacent(c, members[i]);
      if (!ok) continue;
      pick.push_back(members[i]);
      if (grow(window, members, i + 1, want, pick)) return true;
      pick.pop_back();
      if (used > budget) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<CliqueSystem> search_clique_system(const IntersectionGraph& g, const CurveSet& domain,
                                                 const std::vector<long>& sizes, std::size_t budget) {
  for (auto s : sizes)
    if (s < 2) throw Error(ErrorKind::PreconditionFailure, "clique sizes must be at least 2");
  Searcher s{g, sizes, budget, 0, {}, {}};
  if (!s.level(domain)) return std::nullopt;
  return build_clique_system(g, s.chosen);
}

namespace {

struct CliqueRun {
  Run& run;
  const BoundParams& params;

  const IntersectionGraph& g() const { return run.g(); }
  const CurveFamily& f() const { return run.f(); }

  static std::string label(const std::vector<long>& sizes) {
    std::string s = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s + ")";
  }

  // alpha of the level that appends the last clique: the bound under which the prefix is guaranteed
  std::optional<BigInt> chain_bound(const std::vector<long>& sizes) const {
    try {
      BigInt b(0);
      for (std::size_t i = 0; i < sizes.size(); ++i)
        b = gt_bound(static_cast<unsigned long>(sizes[i]), b, static_cast<unsigned long>(i), params.k, BigInt(params.xi));
      return b;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BoundTooLarge) return std::nullopt;
      throw;
    }
  }

  std::optional<CliqueSystem> hypothesis(const CurveSet& domain, const std::vector<long>& sizes) {
    if (sizes.empty()) return build_clique_system(g(), {});
    if (params.source == SystemSource::Search) {
      auto cs = search_clique_system(g(), domain, sizes, params.search_budget);
      run.step(label(sizes) + ".search", {{"found", cs ? "true" : "false"}}, &domain);
      if (!cs) run.fail(label(sizes) + ".search", "a clique system exists", "none within budget");
      return cs;
    }
    return find(domain, sizes, chain_bound(std::vector<long>(sizes.begin(), sizes.end() - 1)));
  }

  std::optional<CliqueSystem> find(const CurveSet& domain, const std::vector<long>& sizes, std::optional<BigInt> alpha) {
    std::vector<long> prefix(sizes.begin(), sizes.end() - 1);
    const long t = sizes.back();
    const std::string saved = run.scope;
    run.scope = label(sizes);
    auto out = t == 2 ? two(domain, prefix, alpha) : general(domain, prefix, t);
    run.scope = saved;
    return out;
  }

  std::optional<CliqueSystem> general(const CurveSet& domain, const std::vector<long>& prefix, long t) {
    const std::size_t n = prefix.size();
    if (n >= 20) return run.fail("m", "2^n+1 manageable", std::to_string(n)), std::nullopt;
    const std::size_t m = (std::size_t{1} << n) + 1;
    std::vector<long> sizes = prefix;
    sizes.insert(sizes.end(), m, t - 1);
    run.step("extend", {{"m", std::to_string(m)}});
    auto cs = hypothesis(domain, sizes);
    if (!cs) return std::nullopt;
    TraceStep merge{run.name("merge"), {}, {}};
    std::optional<CliqueSystem> merged;
    try {
      merged = merge_last_cliques(g(), *cs, n, &merge);
    } catch (const Error& e) {
      return run.fail("merge", "valid merged system", e.what()), std::nullopt;
    }
    run.rep.steps.push_back(merge);
    if (!merged) return run.fail("merge", "two equal signatures", "none"), std::nullopt;
    return merged;
  }

  std::optional<CliqueSystem> two(const CurveSet& domain, const std::vector<long>& prefix, std::optional<BigInt> alpha_big) {
    const auto& f = this->f();
    const auto& g = this->g();
    auto& chi = run.chi;
    const long xi = params.xi;
    const std::size_t n = prefix.size();
    if (n == 0) {
      if (!run.above("chi_F", domain, Rational(1))) return std::nullopt;
      const auto members = domain.members();
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          if (g.adjacent(members[a], members[b])) {
            CurveSet pair = CurveSet(f.size(), {members[a], members[b]});
            run.step("pair", {}, &pair);
            return build_clique_system(g, {pair});
          }
      return run.fail("pair", "an intersecting pair", "none"), std::nullopt;
    }
    if (n >= 20) return run.fail("m", "2^n+1 manageable", std::to_string(n)), std::nullopt;
    const unsigned long m = (1UL << n) + 1;
    const auto alpha_l = as_long(alpha_big ? std::optional<Rational>(Rational(*alpha_big)) : std::nullopt);
    auto gap_paper = bound_or_none([&] {
      BigInt p2;
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, m * n + 2);
      BigInt gap = (p2 + 2 * BigInt(m)) * xi;
      return gap;
    });
    auto beta_paper = (alpha_big && gap_paper) ? std::optional<Rational>(2 * Rational(*alpha_big) * (*gap_paper + 1))
                                               : std::nullopt;
    const auto beta = run.threshold("beta", beta_paper);
    const auto gap = run.threshold("gap", gap_paper);
    run.step("constants", {{"m", std::to_string(m)}, {"alpha", alpha_big ? to_string(*alpha_big) : "unrepresentable"},
                           {"beta", text(beta)}, {"gap", text(gap)}});

    // nested skeleton-supported families
    std::vector<CurveSet> fam{domain};
    std::vector<Skeleton> skeletons;
    for (unsigned long i = 0; i <= m; ++i) {
      std::optional<Rational> paper;
      if (beta && beta->get_den() == 1) {
        paper = bound_or_none([&] {
          BigInt x = beta->get_num();
          for (unsigned long j = 0; j < m - i; ++j) {
            x = f_bound(x, params.k, BigInt(xi));
            if (mpz_sizeinbase(x.get_mpz_t(), 2) > kMaxBoundBits) throw Error(ErrorKind::BoundTooLarge, "f iterate");
          }
          return x;
        });
      }
      const auto thr = run.threshold("chi_F_" + std::to_string(i), paper);
      if (i == 0) {
        if (!run.above("chi_F_0", domain, paper)) return std::nullopt;
        continue;
      }
      if (!thr) return run.fail("skeleton_" + std::to_string(i), "threshold representable", "none"), std::nullopt;
      auto found = find_skeleton_supported(chi, fam.back(), *thr);
      if (!found) {
        run.step("chi_F_" + std::to_string(i), {{"threshold", text(thr)}});
        return run.fail("chi_F_" + std::to_string(i), "chi > " + text(thr), "no skeleton-supported subfamily"), std::nullopt;
      }
      CurveSet uv(f.size(), {found->skeleton.u, found->skeleton.v});
      auto& st = run.step("chi_F_" + std::to_string(i), {{"chi", std::to_string(found->chi)}, {"threshold", text(thr)}},
                          &found->p);
      st.chosen.insert(st.chosen.begin(), "skeleton:" + f[found->skeleton.u].id + "," + f[found->skeleton.v].id);
      skeletons.push_back(found->skeleton);
      fam.push_back(found->p);
    }
    const CurveSet& fm = fam.back();
    const auto gap_l = as_long(gap);
    if (!gap_l || !alpha_l) return run.fail("mcguinness", "alpha and gap representable", "too large"), std::nullopt;
    McGuinnessResult mc;
    try {
      mc = mcguinness(chi, fm, *alpha_l, *gap_l);
    } catch (const Error& e) {
      return run.fail("mcguinness", "chi > 2*alpha*(gap+1)", e.what()), std::nullopt;
    }
    run.step("H", {{"chi", std::to_string(chi.chi(mc.h))}}, &mc.h);

    const std::string saved = run.scope;
    auto base = hypothesis(mc.h, prefix);
    run.scope = saved;
    if (!base) return std::nullopt;
    const auto& last = base->cliques.back();
    const std::size_t l = last.l, r = last.r;
    CurveSet lr = between(f, l, r);
    if (!run.above("chi_F_m_lr", fm & lr, gap)) return std::nullopt;

    // s_i(p): earliest support window met along p
    std::vector<std::vector<Piece>> windows(m);
    std::vector<std::vector<std::size_t>> owners(m);
    for (unsigned long i = 0; i < m; ++i)
      skeletons[i].supports.for_each([&](std::size_t s) {
        windows[i].push_back(Piece{&f[s], support_window(f, skeletons[i], s)});
        owners[i].push_back(s);
      });
    auto s_of = [&](unsigned long i, std::size_t p) -> std::optional<std::size_t> {
      auto hit = first_hit(f[p], windows[i]);
      if (!hit) return std::nullopt;
      return owners[i][hit->obstacle];
    };
    CurveSet big_g(f.size());
    std::vector<std::vector<std::size_t>> s_table(f.size());
    bool ok = true;
    (fm & lr).for_each([&](std::size_t p) {
      if (!ok) return;
      bool inside = true;
      for (unsigned long i = 0; i < m; ++i) {
        auto s = s_of(i, p);
        if (!s) {
          ok = run.fail("s_" + std::to_string(i + 1), "'" + f[p].id + "' is supported", "no support met");
          return;
        }
        s_table[p].push_back(*s);
        inside = inside && lr.contains(*s);
      }
      if (inside) big_g.insert(p);
    });
    if (!ok) return std::nullopt;
    auto g_paper = bound_or_none([&] {
      BigInt p2;
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, m * n + 2);
      BigInt x = p2 * xi;
      return x;
    });
    if (!run.above("chi_G", big_g, g_paper)) return std::nullopt;

    // signature pigeonhole
    std::map<std::vector<std::vector<int>>, CurveSet> groups;
    try {
      big_g.for_each([&](std::size_t p) {
        std::vector<std::vector<int>> key;
        for (unsigned long i = 0; i < m; ++i) key.push_back(signature(f, *base, s_table[p][i]));
        groups.try_emplace(key, CurveSet(f.size())).first->second.insert(p);
      });
    } catch (const Error& e) {
      return run.fail("signatures", "supports cross the system", e.what()), std::nullopt;
    }
    const std::vector<std::vector<int>>* key = nullptr;
    CurveSet big_p(f.size());
    int p_best = -1;
    for (const auto& [k, members] : groups) {
      const int x = chi.chi(members);
      if (x > p_best) {
        p_best = x;
        big_p = members;
        key = &k;
      }
    }
    if (!run.above("chi_P", big_p, run.threshold("chi_P", Rational(4 * xi)))) return std::nullopt;
    std::optional<std::pair<unsigned long, unsigned long>> ij;
    for (unsigned long i = 0; i < m && !ij; ++i)
      for (unsigned long j = i + 1; j < m && !ij; ++j)
        if ((*key)[i] == (*key)[j]) ij = std::make_pair(i, j);
    if (!ij) return run.fail("pigeonhole", "two equal signatures", "none"), std::nullopt;
    const auto [i, j] = *ij;

    CurveSet si_curves(f.size()), sj_curves(f.size());
    big_p.for_each([&](std::size_t p) {
      si_curves.insert(s_table[p][i]);
      sj_curves.insert(s_table[p][j]);
    });
    const std::size_t s_l = si_curves.first(), s_r = si_curves.last();
    const CurveSet ends(f.size(), {s_l, s_r});
    run.step("window", {{"i", std::to_string(i + 1)}, {"j", std::to_string(j + 1)}}, &ends);
    if (!run.at_most("P_left_of_window", big_p & between(f, l, s_l), xi)) return std::nullopt;
    if (!run.at_most("P_right_of_window", big_p & between(f, s_r, r), xi)) return std::nullopt;
    if (!(s_l < s_r)) return run.fail("chi_P_window", "s_i^L precedes s_i^R", "single support"), std::nullopt;
    const CurveSet mid = between(f, s_l, s_r);
    if (!run.above("chi_P_window", big_p & mid, run.threshold("chi_P_window", Rational(2 * xi)))) return std::nullopt;
    std::optional<std::size_t> chosen_p;
    (big_p & mid).for_each([&](std::size_t p) {
      if (!chosen_p && mid.contains(s_table[p][j])) chosen_p = p;
    });
    if (!chosen_p) return run.fail("p", "s_j(p) inside the window", "none"), std::nullopt;
    const std::size_t sj = s_table[*chosen_p][j];
    auto s = s_of(i, sj);
    if (!s) return run.fail("s", "s_j(p) is supported by skeleton i", "no support met"), std::nullopt;
    if (!(*s == s_l || *s == s_r || (s_l < *s && *s < s_r)))
      return run.fail("s", "support within the window", f[*s].id), std::nullopt;
    CurveSet pair(f.size(), {*s, sj});
    run.step("pair", {{"p", f[*chosen_p].id}}, &pair);
    try {
      if (signature(f, *base, *s) != signature(f, *base, sj))
        return run.fail("pair_signature", "equal signatures", "differ"), std::nullopt;
      auto sets = sets_of(*base);
      sets.push_back(pair);
      return build_clique_system(g, sets);
    } catch (const Error& e) {
      return run.fail("system", "valid clique system", e.what()), std::nullopt;
    }
  }
};

}  // namespace

ExtractionReport attempt_clique_system(ChiOracle& chi, const CurveSet& domain, const BoundParams& params) {
  ExtractionReport rep;
  rep.procedure = "clique-system";
  Run run{chi, params, rep, ""};
  if (params.t < 2 || params.n < 0 || params.k < 1 || params.xi < 1 || params.alpha < 0) {
    run.fail("params", "t >= 2, n >= 0, k >= 1, xi >= 1, alpha >= 0", "invalid");
    return rep;
  }
  std::vector<long> sizes(static_cast<std::size_t>(params.n), 2);
  sizes.push_back(params.t);
  CliqueRun cr{run, params};
  std::optional<CliqueSystem> cs;
  try {
    cs = cr.find(domain, sizes, BigInt(params.alpha));
  } catch (const Error& e) {
    run.fail("internal", "no contradiction", e.what());
    return rep;
  }
  if (!cs) return rep;
  rep.clique_system = *cs;
  rep.clique_sets = sets_of(*cs);
  rep.structure = "clique_system";
  rep.failure.reset();
  rep.outcome = ExtractionReport::Outcome::Found;
  return rep;
}

}  // namespace outerstring
