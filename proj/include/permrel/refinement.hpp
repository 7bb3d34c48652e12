#pragma once

// Automorphism groups of colored hypergraphs by individualization and
// refinement.
//
// Points carry an initial color, sets carry a color. Refinement repeatedly
// splits cells by a hash of the colors of incident sets, where a set's color
// is a hash of its own color and the cells of its members. All hashes depend
// only on cell positions, so refinement commutes with automorphisms.
// The search follows the first path to a discrete partition, then looks for
// one automorphism per unexplored child of each first-path node, skipping
// children already known to be equivalent.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "perm_group.hpp"
#include "relation.hpp"

namespace permrel {

constexpr std::size_t default_refinement_cap = 24;

class Hypergraph {
 public:
  Hypergraph(std::size_t degree, std::vector<PointSet> sets, std::vector<std::uint32_t> set_color = {},
             std::vector<std::uint32_t> point_color = {})
      : n_(degree), sets_(std::move(sets)), set_color_(std::move(set_color)), point_color_(std::move(point_color)) {
    if (set_color_.empty()) set_color_.assign(sets_.size(), 0);
    if (point_color_.empty()) point_color_.assign(n_, 0);
    if (set_color_.size() != sets_.size() || point_color_.size() != n_)
      throw PreconditionError("hypergraph color vectors have the wrong length");
    incidence_.resize(n_);
    members_.resize(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (sets_[i].degree() != n_) throw DegreeMismatch(n_, sets_[i].degree());
      members_[i] = sets_[i].points();
      for (Point p : members_[i]) incidence_[p].push_back(static_cast<std::uint32_t>(i));
      auto [it, fresh] = index_.emplace(sets_[i], set_color_[i]);
      if (!fresh && it->second != set_color_[i]) throw PreconditionError("set listed with two colors");
    }
  }

  explicit Hypergraph(const Relation& r) : Hypergraph(r.degree(), r.sets()) {}

  std::size_t degree() const noexcept { return n_; }
  const std::vector<PointSet>& sets() const noexcept { return sets_; }
  const std::vector<std::uint32_t>& set_colors() const noexcept { return set_color_; }
  const std::vector<std::uint32_t>& point_colors() const noexcept { return point_color_; }
  const std::vector<std::vector<std::uint32_t>>& incidence() const noexcept { return incidence_; }
  const std::vector<std::vector<Point>>& members() const noexcept { return members_; }

  /// True iff g preserves point colors and maps every set to a set of the same color.
  bool preserved_by(const Permutation& g) const {
    for (std::size_t a = 0; a < n_; ++a)
      if (point_color_[a] != point_color_[g[static_cast<Point>(a)]]) return false;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      auto it = index_.find(act_set(g, sets_[i]));
      if (it == index_.end() || it->second != set_color_[i]) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<PointSet> sets_;
  std::vector<std::uint32_t> set_color_;
  std::vector<std::uint32_t> point_color_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<std::vector<Point>> members_;
  std::unordered_map<PointSet, std::uint32_t, PointSetHash> index_;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t h, std::uint64_t v) { return mix64(h ^ mix64(v)); }

/// Ordered partition of the points.
struct Partition {
  std::vector<std::vector<Point>> cells;
  std::vector<std::uint32_t> cell_of;

  bool discrete() const { return cells.size() == cell_of.size(); }

  void reindex() {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Point p : cells[c]) cell_of[p] = static_cast<std::uint32_t>(c);
  }
};

inline Partition initial_partition(const Hypergraph& h) {
  // Cells by point color, ascending.
  std::vector<std::pair<std::uint32_t, Point>> order;
  for (std::size_t a = 0; a < h.degree(); ++a) order.emplace_back(h.point_colors()[a], static_cast<Point>(a));
  std::sort(order.begin(), order.end());
  Partition p;
  p.cell_of.resize(h.degree());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || order[i].first != order[i - 1].first) p.cells.emplace_back();
    p.cells.back().push_back(order[i].second);
  }
  p.reindex();
  return p;
}

/// Refines to a fixpoint. Returns a hash of the refinement history.
inline std::uint64_t refine(const Hypergraph& h, Partition& p) {
  const std::size_t n = h.degree();
  const auto& members = h.members();
  const auto& incidence = h.incidence();
  std::vector<std::uint64_t> set_sig(members.size());
  std::vector<std::uint64_t> point_sig(n);
  std::uint64_t trace = combine(0x7261636500ull, p.cells.size());
  for (;;) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::uint64_t acc = 0;
      for (Point a : members[i]) acc += mix64(p.cell_of[a] + 1);
      set_sig[i] = combine(combine(h.set_colors()[i], members[i].size()), acc);
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::uint64_t sum = 0, sum2 = 0;
      for (auto i : incidence[a]) {
        sum += set_sig[i];
        sum2 += mix64(set_sig[i] ^ 0x5bd1e995ull);
      }
      point_sig[a] = combine(combine(incidence[a].size(), sum), sum2);
    }
    std::vector<std::vector<Point>> next;
    next.reserve(n);
    for (auto& cell : p.cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::uint64_t, Point>> keyed;
      for (Point a : cell) keyed.emplace_back(point_sig[a], a);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) {
          next.emplace_back();
          trace = combine(trace, keyed[i].first);
        }
        next.back().push_back(keyed[i].second);
      }
      trace = combine(trace, cell.size());
    }
    bool stable = next.size() == p.cells.size();
    p.cells = std::move(next);
    p.reindex();
    trace = combine(trace, p.cells.size());
    if (stable) return trace;
  }
}

inline Partition individualize(const Partition& p, Point v) {
  Partition q = p;
  std::uint32_t c = q.cell_of[v];
  auto& cell = q.cells[c];
  std::vector<Point> rest;
  for (Point a : cell)
    if (a != v) rest.push_back(a);
  cell = {v};
  q.cells.insert(q.cells.begin() + c + 1, std::move(rest));
  q.reindex();
  return q;
}

/// Smallest non-singleton cell, first such.
inline std::size_t target_cell(const Partition& p) {
  std::size_t best = p.cells.size();
  for (std::size_t c = 0; c < p.cells.size(); ++c)
    if (p.cells[c].size() > 1 && (best == p.cells.size() || p.cells[c].size() < p.cells[best].size())) best = c;
  return best;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Hypergraph& h, std::uint64_t node_budget) : h_(h), budget_(node_budget) {}

  PermGroup run() {
    Partition p = initial_partition(h_);
    first_path(0, std::move(p));
    PermGroup g(h_.degree(), autos_);
    // The individualized points form a base; the chain is built from it.
    return g;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("automorphism search exceeded its node budget");
  }

  void first_path(std::size_t depth, Partition p) {
    tick();
    std::uint64_t t = refine(h_, p);
    traces_.push_back(t);
    if (p.discrete()) {
      for (auto& c : p.cells) first_leaf_.push_back(c.front());
      return;
    }
    std::size_t c = target_cell(p);
    targets_.push_back(c);
    std::vector<Point> pts = p.cells[c];
    std::sort(pts.begin(), pts.end());
    Point v = pts.front();
    first_path(depth + 1, individualize(p, v));

    std::vector<bool> failed(h_.degree(), false);
    for (std::size_t k = 1; k < pts.size(); ++k) {
      Point w = pts[k];
      if (failed[w] || in_orbit(v, w)) continue;
      if (!other_path(depth + 1, individualize(p, w)))
        for (Point x : orbit(w)) failed[x] = true;
    }
  }

  bool other_path(std::size_t depth, Partition p) {
    tick();
    std::uint64_t t = refine(h_, p);
    if (t != traces_[depth]) return false;
    if (p.discrete()) {
      std::vector<Point> img(h_.degree());
      for (std::size_t i = 0; i < p.cells.size(); ++i) img[first_leaf_[i]] = p.cells[i].front();
      Permutation g(std::move(img));
      if (!h_.preserved_by(g)) return false;
      autos_.push_back(std::move(g));
      return true;
    }
    std::size_t c = targets_[depth];
    if (c >= p.cells.size() || p.cells[c].size() <= 1) return false;
    std::vector<Point> pts = p.cells[c];
    std::sort(pts.begin(), pts.end());
    for (Point w : pts)
      if (other_path(depth + 1, individualize(p, w))) return true;
    return false;
  }

  std::vector<Point> orbit(Point a) const {
    std::vector<bool> seen(h_.degree(), false);
    std::vector<Point> out{a};
    seen[a] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (auto& g : autos_) {
        Point b = g[out[k]];
        if (!seen[b]) {
          seen[b] = true;
          out.push_back(b);
        }
      }
    return out;
  }

  bool in_orbit(Point a, Point b) const {
    for (Point x : orbit(a))
      if (x == b) return true;
    return false;
  }

  const Hypergraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> traces_;
  std::vector<std::size_t> targets_;
  std::vector<Point> first_leaf_;
  std::vector<Permutation> autos_;
};

}  // namespace detail

/// Automorphism group of a colored hypergraph. Throws BudgetExceeded above
/// max_degree or when the node budget runs out.
inline PermGroup automorphism_group(const Hypergraph& h, std::size_t max_degree = default_refinement_cap,
                                    std::uint64_t node_budget = 50'000'000) {
  if (h.degree() > max_degree)
    throw BudgetExceeded("degree " + std::to_string(h.degree()) + " is above the refinement cap " +
                         std::to_string(max_degree));
  detail::AutomorphismSearch search(h, node_budget);
  return search.run();
}

/// Cells of the stable partition reached from the point colors, as a color per point.
inline std::vector<std::uint32_t> stable_point_colors(const Hypergraph& h) {
  detail::Partition p = detail::initial_partition(h);
  detail::refine(h, p);
  return p.cell_of;
}

}  // namespace permrel
