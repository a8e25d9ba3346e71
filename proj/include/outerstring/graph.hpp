#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring {

/// Intersection graph of a family; vertices are family indices.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(const CurveFamily& f);

  const CurveFamily& family() const { return *family_; }
  std::size_t size() const { return adjacency_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].contains(j); }
  const CurveSet& neighbors(std::size_t i) const { return adjacency_[i]; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Components of the induced subgraph, ordered by their leftmost member.
  std::vector<CurveSet> components(const CurveSet& within) const;
  bool is_clique(const CurveSet& s) const;
  /// Members of `within` meeting at least one member of `s`.
  CurveSet touching(const CurveSet& s, const CurveSet& within) const;

 private:
  const CurveFamily* family_;
  std::vector<CurveSet> adjacency_;
};

struct CliqueWitness {
  std::size_t size = 0;
  CurveSet members;
};

CliqueWitness clique_number(const IntersectionGraph& g, const CurveSet& within);
inline CliqueWitness clique_number(const IntersectionGraph& g) {
  return clique_number(g, CurveSet::full(g.size()));
}

/// color[i] is in 0..colors-1 for colored curves and -1 for the rest.
struct ColoringWitness {
  std::vector<int> color;
  int colors = 0;

  CurveSet colored() const;
  CurveSet color_class(int c) const;
  bool proper(const IntersectionGraph& g) const;
};

/// Exact chromatic number of the induced subgraph with a proper witness using exactly that many colors.
ColoringWitness chromatic_number(const IntersectionGraph& g, const CurveSet& within);
inline ColoringWitness chromatic_number(const IntersectionGraph& g) {
  return chromatic_number(g, CurveSet::full(g.size()));
}

/// Greedy proper coloring in index order (first fit).
ColoringWitness greedy_coloring(const IntersectionGraph& g, const CurveSet& within);

/// Memoized chi over subsets of one graph. Not thread-safe; use one per thread.
class ChiOracle {
 public:
  explicit ChiOracle(const IntersectionGraph& g) : graph_(&g) {}

  int chi(const CurveSet& s);
  const IntersectionGraph& graph() const { return *graph_; }
  std::size_t cached() const { return cache_.size(); }

 private:
  const IntersectionGraph* graph_;
  std::unordered_map<CurveSet, int, CurveSetHash> cache_;
};

/// Curves strictly between u and v in basepoint order. Throws Error(OrderViolation) unless u precedes v.
CurveSet between(const CurveFamily& f, std::size_t u, std::size_t v);
CurveSet between(const CurveFamily& f, std::string_view u, std::string_view v);

using GroupColoring = std::function<ColoringWitness(const CurveSet&)>;

/// Colors `members` by assigning each curve to the first piercer it meets and combining
/// the per-group colorings as (group, color) pairs, renumbered densely in that order.
/// Throws Error(UncoveredCurve) if some member meets no piercer.
ColoringWitness piercer_cover_coloring(const IntersectionGraph& g, const CurveSet& members,
                                       std::span<const std::size_t> piercers, const GroupColoring& color_group);

}  // namespace outerstring
