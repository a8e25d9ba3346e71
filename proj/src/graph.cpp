#include "outerstring/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace outerstring {

IntersectionGraph::IntersectionGraph(const CurveFamily& f) : family_(&f) {
  const std::size_t n = f.size();
  adjacency_.assign(n, CurveSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (curves_intersect(f[i], f[j])) {
        adjacency_[i].insert(j);
        adjacency_[j].insert(i);
      }
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    adjacency_[i].for_each([&](std::size_t j) {
      if (i < j) out.emplace_back(i, j);
    });
  return out;
}

std::vector<CurveSet> IntersectionGraph::components(const CurveSet& within) const {
  std::vector<CurveSet> out;
  CurveSet left = within;
  while (!left.empty()) {
    CurveSet comp(size());
    std::deque<std::size_t> queue{left.first()};
    comp.insert(queue.front());
    left.erase(queue.front());
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      (adjacency_[v] & left).for_each([&](std::size_t w) {
        comp.insert(w);
        left.erase(w);
        queue.push_back(w);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool IntersectionGraph::is_clique(const CurveSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) {
    CurveSet others = s;
    others.erase(i);
    if (!others.subset_of(adjacency_[i])) ok = false;
  });
  return ok;
}

CurveSet IntersectionGraph::touching(const CurveSet& s, const CurveSet& within) const {
  CurveSet out(size());
  s.for_each([&](std::size_t i) { out |= adjacency_[i]; });
  return out & within;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<CurveSet> adj) : adj_(std::move(adj)) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> current;
    expand(current, CurveSet::full(adj_.size()));
    return best_;
  }

 private:
  std::vector<CurveSet> adj_;
  std::vector<std::size_t> best_;

  void expand(std::vector<std::size_t>& current, CurveSet candidates) {
    // greedy color classes give the bound |current| + colors still available
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    CurveSet uncolored = candidates;
    std::size_t color = 0;
    while (!uncolored.empty()) {
      ++color;
      CurveSet open = uncolored;
      while (!open.empty()) {
        const std::size_t v = open.first();
        open.erase(v);
        open -= adj_[v];
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + bound[k] <= best_.size()) return;
      const std::size_t v = order[k];
      current.push_back(v);
      CurveSet next = candidates & adj_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.erase(v);
    }
  }
};

struct LocalGraph {
  std::vector<std::size_t> vertices;
  std::vector<CurveSet> adj;
  std::vector<std::vector<std::size_t>> neighbors;

  LocalGraph(const IntersectionGraph& g, const CurveSet& within) : vertices(within.members()) {
    const std::size_t n = vertices.size();
    adj.assign(n, CurveSet(n));
    neighbors.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (g.adjacent(vertices[a], vertices[b])) {
          adj[a].insert(b);
          adj[b].insert(a);
          neighbors[a].push_back(b);
          neighbors[b].push_back(a);
        }
  }
};

class ColoringSearch {
 public:
  explicit ColoringSearch(const LocalGraph& g)
      : g_(g), n_(g.vertices.size()), color_(n_, -1), saturation_(n_, 0), seen_(n_, std::vector<int>(n_ + 1, 0)) {}

  std::vector<int> run(const std::vector<std::size_t>& clique) {
    lower_ = static_cast<int>(clique.size());
    greedy();
    if (best_colors_ == lower_) return best_;
    int used = 0;
    for (auto v : clique) assign(v, used++);
    search(static_cast<int>(clique.size()), used);
    return best_;
  }

  int colors() const { return best_colors_; }

 private:
  const LocalGraph& g_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<int> saturation_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> best_;
  int best_colors_ = 0;
  int lower_ = 0;

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (auto u : g_.neighbors[v])
      if (seen_[u][c]++ == 0) ++saturation_[u];
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    for (auto u : g_.neighbors[v])
      if (--seen_[u][c] == 0) --saturation_[u];
    color_[v] = -1;
  }

  // max saturation, then max degree, then leftmost
  std::size_t pick() const {
    std::size_t best = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      if (best == n_ || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.neighbors[v].size() > g_.neighbors[best].size()))
        best = v;
    }
    return best;
  }

  void greedy() {
    int used = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t v = pick();
      int c = 0;
      while (seen_[v][c] != 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = color_;
    best_colors_ = used;
    for (std::size_t v = 0; v < n_; ++v) unassign(v);
  }

  void search(int colored, int used) {
    if (used >= best_colors_) return;
    if (colored == static_cast<int>(n_)) {
      best_ = color_;
      best_colors_ = used;
      return;
    }
    const std::size_t v = pick();
    for (int c = 0; c < used; ++c) {
      if (seen_[v][c] != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_colors_ == lower_) return;
    }
    if (used + 1 < best_colors_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }
};

}  // namespace

CliqueWitness clique_number(const IntersectionGraph& g, const CurveSet& within) {
  LocalGraph local(g, within);
  CliqueWitness out{0, CurveSet(g.size())};
  if (local.vertices.empty()) return out;
  for (auto v : CliqueSearch(local.adj).run()) out.members.insert(local.vertices[v]);
  out.size = out.members.size();
  return out;
}

CurveSet ColoringWitness::colored() const {
  CurveSet s(color.size());
  for (std::size_t i = 0; i < color.size(); ++i)
    if (color[i] >= 0) s.insert(i);
  return s;
}

CurveSet ColoringWitness::color_class(int c) const {
  CurveSet s(color.size());
  for (std::size_t i = 0; i < color.size(); ++i)
    if (color[i] == c) s.insert(i);
  return s;
}

bool ColoringWitness::proper(const IntersectionGraph& g) const {
  if (color.size() != g.size()) return false;
  for (auto [i, j] : g.edges())
    if (color[i] >= 0 && color[i] == color[j]) return false;
  for (int c : color)
    if (c >= colors) return false;
  return true;
}

ColoringWitness chromatic_number(const IntersectionGraph& g, const CurveSet& within) {
  ColoringWitness out{std::vector<int>(g.size(), -1), 0};
  LocalGraph local(g, within);
  if (local.vertices.empty()) return out;
  std::vector<std::size_t> clique;
  for (auto v : CliqueSearch(local.adj).run()) clique.push_back(v);
  ColoringSearch search(local);
  auto colors = search.run(clique);
  for (std::size_t k = 0; k < colors.size(); ++k) out.color[local.vertices[k]] = colors[k];
  out.colors = search.colors();
  return out;
}

ColoringWitness greedy_coloring(const IntersectionGraph& g, const CurveSet& within) {
  ColoringWitness out{std::vector<int>(g.size(), -1), 0};
  within.for_each([&](std::size_t v) {
    std::vector<bool> taken(static_cast<std::size_t>(out.colors) + 1, false);
    (g.neighbors(v) & within).for_each([&](std::size_t u) {
      if (out.color[u] >= 0) taken[static_cast<std::size_t>(out.color[u])] = true;
    });
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    out.color[v] = c;
    out.colors = std::max(out.colors, c + 1);
  });
  return out;
}

int ChiOracle::chi(const CurveSet& s) {
  if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  const int value = chromatic_number(*graph_, s).colors;
  cache_.emplace(s, value);
  return value;
}

CurveSet between(const CurveFamily& f, std::size_t u, std::size_t v) {
  if (u >= f.size() || v >= f.size()) throw Error(ErrorKind::UnknownCurve, "curve index out of range");
  if (!(u < v))
    throw Error(ErrorKind::OrderViolation, "'" + f[u].id + "' does not precede '" + f[v].id + "'");
  CurveSet out(f.size());
  for (std::size_t i = u + 1; i < v; ++i) out.insert(i);
  return out;
}

CurveSet between(const CurveFamily& f, std::string_view u, std::string_view v) {
  return between(f, f.require(u), f.require(v));
}

ColoringWitness piercer_cover_coloring(const IntersectionGraph& g, const CurveSet& members,
                                       std::span<const std::size_t> piercers, const GroupColoring& color_group) {
  const auto& f = g.family();
  std::vector<CurveSet> groups(piercers.size(), CurveSet(g.size()));
  members.for_each([&](std::size_t c) {
    for (std::size_t i = 0; i < piercers.size(); ++i) {
      if (piercers[i] == c)
        throw Error(ErrorKind::PreconditionFailure, "'" + f[c].id + "' is itself a piercer");
      if (g.adjacent(c, piercers[i])) {
        groups[i].insert(c);
        return;
      }
    }
    throw Error(ErrorKind::UncoveredCurve, "'" + f[c].id + "' meets no piercer");
  });

  ColoringWitness out{std::vector<int>(g.size(), -1), 0};
  std::map<std::pair<std::size_t, int>, int> renumber;
  std::vector<ColoringWitness> local;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    local.push_back(color_group(groups[i]));
    const auto& w = local.back();
    if (w.color.size() != g.size() || !w.proper(g) || !groups[i].subset_of(w.colored()))
      throw Error(ErrorKind::PreconditionFailure, "group coloring " + std::to_string(i + 1) + " is not proper on its group");
    groups[i].for_each([&](std::size_t c) { renumber.emplace(std::make_pair(i, w.color[c]), 0); });
  }
  int next = 0;
  for (auto& [key, value] : renumber) value = next++;
  for (std::size_t i = 0; i < groups.size(); ++i)
    groups[i].for_each([&](std::size_t c) { out.color[c] = renumber.at({i, local[i].color[c]}); });
  out.colors = next;
  return out;
}

}  // namespace outerstring
