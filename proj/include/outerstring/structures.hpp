#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "outerstring/arrangement.hpp"
#include "outerstring/geom.hpp"
#include "outerstring/graph.hpp"
#include "outerstring/region.hpp"

namespace outerstring {

// ---- skeletons ----

/// Intersecting u ≺ v plus pairwise disjoint supports strictly between them.
struct Skeleton {
  std::size_t u = 0;
  std::size_t v = 0;
  CurveSet supports;
};

/// Checks the skeleton definition; throws Error(InvalidSkeleton) naming the failure.
void validate_skeleton(const IntersectionGraph& g, const Skeleton& sk);
Skeleton make_skeleton(const IntersectionGraph& g, std::string_view u, std::string_view v,
                       std::span<const std::string> supports);

/// Initial part of support `s` that can carry supported curves: up to (excluding) its first
/// point on u ∪ v, or the whole curve if it never meets them.
Span support_window(const CurveFamily& f, const Skeleton& sk, std::size_t s);

/// Curves outside F(u,v) and the supports themselves are never supported.
bool is_supported(const IntersectionGraph& g, const Skeleton& sk, std::size_t p);
CurveSet supported_subfamily(const IntersectionGraph& g, const Skeleton& sk);

// ---- brackets ----

struct BracketEntry {
  std::size_t p = 0;
  std::size_t s = 0;
  Span p_prime;        // end-open at the hit with s
  CurvePoint hit_on_s;
  ClosedRegion region;  // I(p)
};

class Bracket {
 public:
  Bracket(const CurveFamily& f, CurveSet p, CurveSet s, std::vector<BracketEntry> entries, bool supports_left);

  const CurveFamily& family() const { return *family_; }
  const CurveSet& P() const { return p_; }
  const CurveSet& S() const { return s_; }
  const std::vector<BracketEntry>& entries() const { return entries_; }
  const BracketEntry& entry(std::size_t p) const;
  std::size_t s_of(std::size_t p) const { return entry(p).s; }
  /// True when S ≺ P.
  bool supports_left() const { return supports_left_; }

  /// Membership in I, the intersection of the closed regions I(p).
  bool in_interior(const Point& x) const;
  /// Oracle for E = ext(P ∪ S).
  const ExteriorOracle& exterior() const { return *exterior_; }

  /// Points of `c` sufficient to decide how it sits relative to every I(p): vertices,
  /// crossings with region boundaries, and one point inside each piece between them.
  std::vector<Point> region_samples(const GroundedCurve& c) const;
  /// Points where `c` meets the boundary of some I(p).
  std::vector<Point> boundary_points(const GroundedCurve& c) const;

 private:
  const CurveFamily* family_;
  CurveSet p_;
  CurveSet s_;
  std::vector<BracketEntry> entries_;
  bool supports_left_;
  std::shared_ptr<const ExteriorOracle> exterior_;
};

/// Throws SideOrderViolation, UnhitCurve, UnusedSupport, or PreconditionFailure (P and S overlap).
Bracket build_bracket(const CurveFamily& f, const CurveSet& p, const CurveSet& s);

enum class InteriorClass { Contained, CrossesBoundaryOffBaseline, Outside };
std::string_view to_string(InteriorClass c);

InteriorClass interior_classify(const Bracket& br, const GroundedCurve& c);
bool meets_interior(const Bracket& br, const GroundedCurve& c);

struct BracketCrossing {
  bool hypothesis = false;  // c meets both I and E
  bool holds = true;        // c meets p or s(p) for every p in P (only meaningful when hypothesis holds)
};

BracketCrossing check_bracket_crossing(const Bracket& br, const GroundedCurve& c);
/// The implication "c meets I and E  =>  c meets p or s(p) for all p".
inline bool verify_bracket_crossing(const Bracket& br, const GroundedCurve& c) {
  auto r = check_bracket_crossing(br, c);
  return !r.hypothesis || r.holds;
}

// ---- bracket systems ----

/// Structural conditions of a bracket system (containment in later interiors, reach into later
/// exteriors). Throws Error(PreconditionFailure) naming the first failing bracket (1-based).
void validate_bracket_system(std::span<const Bracket> system);

/// Additionally requires chi(P_i) > (n-1)·xi for every i.
void validate_bracket_system(ChiOracle& chi, std::span<const Bracket> system, long xi);

/// One support per bracket, pairwise intersecting. Throws PreconditionFailure on bad input and
/// InternalContradiction if a claim of the construction fails to hold.
std::vector<std::size_t> extract_clique(ChiOracle& chi, std::span<const Bracket> system, long xi);

// ---- clique systems ----

struct CliqueAnchors {
  CurveSet clique;
  std::size_t l = 0;
  std::size_t r = 0;
  Span l_prime;  // closed, ends at the first point of l on r
  Span r_prime;  // end-open at that same point
  Point joint;
};

/// Throws Error(NotAClique).
CliqueAnchors clique_anchors(const IntersectionGraph& g, const CurveSet& k);

enum class Side { Left, Right, Neither };
std::string_view to_string(Side s);

/// Throws PreconditionFailure unless ℓ ≺ s ≺ r; InconsistentSide on a kernel inconsistency.
Side side_for_clique(const CurveFamily& f, std::size_t s, const CliqueAnchors& anchors);

struct CliqueSystem {
  std::vector<CliqueAnchors> cliques;
  /// sides[j][i] for i < j: the common side of clique j for clique i.
  std::vector<std::vector<Side>> sides;
  /// ext of the union of all cliques.
  std::shared_ptr<const ExteriorOracle> exterior;

  std::size_t size() const { return cliques.size(); }
  CurveSet members(std::size_t universe) const;
};

/// Validates every clique-system condition; throws Error(InvalidCliqueSystem).
CliqueSystem build_clique_system(const IntersectionGraph& g, const std::vector<CurveSet>& cliques);

/// Curves strictly between ℓ and r of the last clique (everything for the empty system).
CurveSet system_window(const CurveFamily& f, const CliqueSystem& cs);

bool crosses_system(const CurveFamily& f, const CliqueSystem& cs, std::size_t s);

/// σ_j = 0 for left, 1 for right. Throws Error(NotCrossing).
std::vector<int> signature(const CurveFamily& f, const CliqueSystem& cs, std::size_t s);

/// Throws PreconditionFailure if the triple does not satisfy the hypotheses.
bool check_signature_betweenness(const IntersectionGraph& g, const CliqueSystem& cs, std::size_t s1,
                                 std::size_t s2, std::size_t s3);

}  // namespace outerstring
