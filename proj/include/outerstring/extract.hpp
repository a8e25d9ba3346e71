#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "outerstring/graph.hpp"
#include "outerstring/rational.hpp"
#include "outerstring/structures.hpp"

namespace outerstring {

/// Where the clique systems assumed by the clique-system lemmas come from.
enum class SystemSource {
  Lemmas,  // recursive application of the lemmas themselves
  Search,  // exhaustive search (small families only)
};

struct BoundParams {
  long k = 2;
  long xi = 1;
  long alpha = 0;
  long beta = 0;
  long n = 0;
  long t = 2;
  /// Replaces the threshold of the step with this name; "gamma" replaces gamma itself and
  /// "*" replaces every threshold that has no entry of its own.
  std::map<std::string, Rational> overrides;
  SystemSource source = SystemSource::Lemmas;
  /// Node budget for SystemSource::Search.
  std::size_t search_budget = 200000;
};

/// Step names are stable and serve as override keys.
struct TraceStep {
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;  // measured quantities, decimal
  std::vector<std::string> chosen;                         // curve ids
};

struct StepFailure {
  std::string step;
  std::string threshold;  // e.g. "chi > 12"
  std::string measured;
};

struct ExtractionReport {
  enum class Outcome { Found, StepFailure };
  Outcome outcome = Outcome::StepFailure;
  std::string procedure;
  std::string structure;  // "bracket_system", "clique_system", "skeleton", "subfamily", "pair"
  std::vector<TraceStep> steps;
  std::optional<StepFailure> failure;

  // payloads (which are set depends on `structure`)
  CurveSet subfamily;
  std::optional<Skeleton> skeleton;
  std::vector<Bracket> brackets;
  std::vector<std::size_t> clique;
  std::optional<CliqueSystem> clique_system;
  std::vector<CurveSet> clique_sets;

  bool found() const { return outcome == Outcome::Found; }
};

std::string_view to_string(ExtractionReport::Outcome o);

struct McGuinnessResult {
  CurveSet h;
  std::vector<CurveSet> blocks;
  int parity = 0;
  int color = 0;
};

/// Throws PreconditionFailure when chi(domain) <= 2·alpha·(beta+1); InternalContradiction
/// when a verified postcondition fails.
McGuinnessResult mcguinness(ChiOracle& chi, const CurveSet& domain, long alpha, long beta);

/// Lexicographically first intersecting pair of the alpha = 1 subfamily.
std::pair<std::size_t, std::size_t> intersecting_gap_pair(ChiOracle& chi, const CurveSet& domain, long beta);

struct BfsResult {
  CurveSet component;
  std::vector<CurveSet> layers;
  std::size_t d = 0;
  CurveSet g;
  /// For each member of g (in index order), a curve meeting it and ext(g).
  std::vector<std::pair<std::size_t, std::size_t>> support;
};

/// Throws PreconditionFailure when omega(domain) < 2.
BfsResult bfs_supported(ChiOracle& chi, const CurveSet& domain);

/// A curve of `domain` that intersects `p` and ext(g), if any; `witness` is tried first.
std::optional<std::size_t> external_support(const IntersectionGraph& g, const ExteriorOracle& ext_g,
                                            const CurveSet& domain, std::size_t p,
                                            std::optional<std::size_t> witness = std::nullopt);

struct SkeletonSupported {
  Skeleton skeleton;
  CurveSet p;
  int chi = 0;
};

/// Skeletons (u,v,Q) with Q a greedy color class of the curves of domain(u,v) meeting u or v,
/// tried pair by pair; the first with chi(supported ∩ domain) > threshold.
std::optional<SkeletonSupported> find_skeleton_supported(ChiOracle& chi, const CurveSet& domain,
                                                         const Rational& threshold);

/// Report-producing wrappers used by the command line.
ExtractionReport run_mcguinness(ChiOracle& chi, const CurveSet& domain, const BoundParams& params);
ExtractionReport run_bfs_supported(ChiOracle& chi, const CurveSet& domain);
ExtractionReport run_find_skeleton(ChiOracle& chi, const CurveSet& domain, const BoundParams& params);

ExtractionReport attempt_bracket_system(ChiOracle& chi, const CurveSet& domain, const BoundParams& params);

/// Looks for a (2,…,2,t)-clique system with params.n leading 2-cliques and params.t last,
/// following the clique-system lemmas.
ExtractionReport attempt_clique_system(ChiOracle& chi, const CurveSet& domain, const BoundParams& params);

/// The merge step of the general lemma: the system ends in m cliques of size t-1 after a prefix of
/// length n; two of them with equal prefix signature are merged into a t-clique.
std::optional<CliqueSystem> merge_last_cliques(const IntersectionGraph& g, const CliqueSystem& cs, std::size_t n,
                                               TraceStep* trace = nullptr);

/// Exhaustive search for a clique system with the given sizes inside `domain`.
std::optional<CliqueSystem> search_clique_system(const IntersectionGraph& g, const CurveSet& domain,
                                                 const std::vector<long>& sizes, std::size_t budget);

}  // namespace outerstring
