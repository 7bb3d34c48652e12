#pragma once

// Orbits of a group on k-subsets, regular sets and distinguishing numbers.
//
// The census marks k-subsets in a bitmap indexed by colex rank and walks each
// unmarked subset's orbit under the generators. Subsets are 64-bit masks, so
// the census is limited to degree 64.

#include <random>
#include <unordered_set>

#include "stabilizers.hpp"

namespace permrel {

constexpr std::uint64_t default_census_budget = std::uint64_t{1} << 28;  // subsets per level

struct CensusLevel {
  std::size_t k = 0;
  std::uint64_t subsets = 0;  // C(n, k)
  std::uint64_t orbit_count = 0;
  std::uint64_t max_orbit_length = 0;
  std::optional<PointSet> regular_witness;  // first subset, in colex order, of the first regular orbit
};

struct OrbitCensus {
  std::size_t degree = 0;
  BigInt group_order;
  std::vector<CensusLevel> levels;
};

namespace detail {

class SubsetRanker {
 public:
  explicit SubsetRanker(std::size_t n) : n_(n), binom_(n + 1, std::vector<std::uint64_t>(n + 2, 0)) {
    for (std::size_t a = 0; a <= n; ++a) {
      binom_[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }

  std::uint64_t binom(std::size_t a, std::size_t b) const { return b > a ? 0 : binom_[a][b]; }

  /// Colex rank: sum over the i-th smallest member c_i of C(c_i, i).
  std::uint64_t rank(std::uint64_t mask) const {
    std::uint64_t r = 0;
    std::size_t i = 1;
    while (mask) {
      auto c = static_cast<std::size_t>(std::countr_zero(mask));
      r += binom(c, i++);
      mask &= mask - 1;
    }
    return r;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

inline std::uint64_t image_mask(const std::vector<Point>& img, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    out |= std::uint64_t{1} << img[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return out;
}

/// Next k-subset mask in increasing numeric (= colex) order.
inline std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

struct CensusOptions {
  bool stop_at_regular = false;
  std::uint64_t budget = default_census_budget;
};

inline CensusLevel sweep(const PermGroup& g, std::size_t k, const CensusOptions& opt) {
  const std::size_t n = g.degree();
  if (n > 64) throw BudgetExceeded("orbit census supports degree <= 64");
  if (k > n) throw PreconditionError("k exceeds the degree");
  SubsetRanker ranker(n);
  CensusLevel out;
  out.k = k;
  out.subsets = ranker.binom(n, k);
  if (out.subsets > opt.budget)
    throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceed the census budget");
  const BigInt order = g.order();
  std::vector<std::vector<Point>> gens;
  for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  std::vector<std::uint64_t> marked((out.subsets + 63) / 64, 0);
  auto test_and_mark = [&](std::uint64_t r) {
    std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (marked[r >> 6] & bit) return false;
    marked[r >> 6] |= bit;
    return true;
  };
  std::vector<std::uint64_t> stack;
  std::uint64_t mask = k == 0 ? 0 : (k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  for (std::uint64_t r = 0; r < out.subsets; ++r, mask = (r < out.subsets ? next_subset(mask) : 0)) {
    if (!test_and_mark(r)) continue;
    std::uint64_t len = 1;
    stack.assign(1, mask);
    while (!stack.empty()) {
      std::uint64_t s = stack.back();
      stack.pop_back();
      for (const auto& img : gens) {
        std::uint64_t t = image_mask(img, s);
        if (test_and_mark(ranker.rank(t))) {
          ++len;
          stack.push_back(t);
        }
      }
    }
    ++out.orbit_count;
    out.max_orbit_length = std::max(out.max_orbit_length, len);
    if (!out.regular_witness && BigInt(len) == order) {
      out.regular_witness = PointSet::from_mask(n, mask);
      if (opt.stop_at_regular) return out;
    }
  }
  return out;
}

}  // namespace detail

/// Orbits of G on k-subsets. Throws BudgetExceeded when C(n,k) exceeds the budget.
inline CensusLevel orbit_census(const PermGroup& g, std::size_t k, std::uint64_t budget = default_census_budget) {
  return detail::sweep(g, k, {false, budget});
}

inline OrbitCensus full_orbit_census(const PermGroup& g, std::uint64_t budget = default_census_budget) {
  OrbitCensus out;
  out.degree = g.degree();
  out.group_order = g.order();
  for (std::size_t k = 0; k <= g.degree(); ++k) out.levels.push_back(orbit_census(g, k, budget));
  return out;
}

/// Random k-subsets tested for regularity. Finds witnesses only; an empty
/// result proves nothing.
inline std::optional<PointSet> sample_regular_set(const PermGroup& g, std::size_t k, std::size_t trials,
                                                  std::uint64_t seed = 1) {
  const std::size_t n = g.degree();
  if (k > n) throw PreconditionError("k exceeds the degree");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  for (std::size_t t = 0; t < trials; ++t) {
    std::shuffle(pts.begin(), pts.end(), rng);
    PointSet s = PointSet::of(n, std::span<const Point>(pts.data(), k));
    if (is_regular_set(g, s)) return s;
  }
  return std::nullopt;
}

/// A regular k-set, or nullopt if none exists. Tries sampling first, then an
/// exhaustive sweep, which is the only way to answer "none".
inline std::optional<PointSet> find_regular_set(const PermGroup& g, std::size_t k,
                                                std::uint64_t budget = default_census_budget,
                                                std::size_t samples = 200) {
  const std::size_t n = g.degree();
  detail::SubsetRanker ranker(std::min<std::size_t>(n, 64));
  if (n <= 64 && BigInt(ranker.binom(n, k)) < g.order()) return std::nullopt;
  if (g.is_trivial()) {
    std::vector<Point> first(k);
    std::iota(first.begin(), first.end(), Point{0});
    return PointSet::of(n, first);
  }
  if (auto s = sample_regular_set(g, k, samples, 0x5eed + k)) return s;
  return detail::sweep(g, k, {true, budget}).regular_witness;
}

/// All k admitting a regular k-set.
inline std::vector<std::size_t> regular_set_sizes(const PermGroup& g, std::uint64_t budget = default_census_budget) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= g.degree(); ++k)
    if (find_regular_set(g, k, budget)) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// Distinguishing number.

struct DistinguishingPartition {
  std::vector<PointSet> parts;
  std::size_t part_count() const { return parts.size(); }
};

/// True iff only the identity of G maps every part onto itself.
inline bool is_distinguishing(const PermGroup& g, const std::vector<PointSet>& parts) {
  PermGroup h = g;
  for (const auto& p : parts) {
    if (h.is_trivial()) break;
    h = setwise_stabilizer(h, p);
  }
  return h.order() == 1;
}

namespace detail {

/// Colors `rest` with at most d colors so that only the identity of g (which
/// maps rest to itself) preserves every color class. Classes are chosen
/// largest first, one representative per g-orbit of candidate classes.
inline bool distinguish(const PermGroup& g, const PointSet& rest, std::size_t d, std::vector<PointSet>& parts,
                        std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw BudgetExceeded("distinguishing number search exceeded its node budget");
  if (g.order() == 1) {
    if (!rest.empty()) parts.push_back(rest);
    return true;
  }
  if (d <= 1 || rest.size() <= 1) return false;
  const std::size_t m = rest.size();
  const std::size_t min_size = (m + d - 1) / d;
  auto pts = rest.points();
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::vector<Point>> gens;
  for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  // Sizes from large to small; within a size, subsets of rest in colex order.
  for (std::size_t size = m - 1; size + 1 > min_size && size >= 1; --size) {
    std::uint64_t local = (std::uint64_t{1} << size) - 1;
    const std::uint64_t end = std::uint64_t{1} << m;
    for (; local < end; local = next_subset(local)) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < m; ++i)
        if ((local >> i) & 1u) mask |= std::uint64_t{1} << pts[i];
      if (seen.count(mask)) continue;
      // Mark the whole orbit.
      std::vector<std::uint64_t> stack{mask};
      seen.insert(mask);
      while (!stack.empty()) {
        std::uint64_t s = stack.back();
        stack.pop_back();
        for (const auto& img : gens) {
          std::uint64_t t = image_mask(img, s);
          if (seen.insert(t).second) stack.push_back(t);
        }
      }
      PointSet part = PointSet::from_mask(rest.degree(), mask);
      PermGroup h = setwise_stabilizer(g, part);
      parts.push_back(part);
      if (distinguish(h, rest - part, d - 1, parts, nodes, budget)) return true;
      parts.pop_back();
    }
  }
  return false;
}

}  // namespace detail

/// D(G) with a witness partition. Degree below 64.
inline DistinguishingPartition distinguishing_partition(const PermGroup& g, std::size_t max_parts = 8,
                                                        std::uint64_t node_budget = 10'000'000) {
  const std::size_t n = g.degree();
  if (n > 63) throw BudgetExceeded("distinguishing number search supports degree < 64");
  DistinguishingPartition out;
  PointSet all = PointSet::full(n);
  if (g.order() == 1) {
    if (n > 0) out.parts.push_back(all);
    return out;
  }
  // Two parts: a regular set and its complement.
  for (std::size_t k = 1; k < n; ++k)
    if (auto s = find_regular_set(g, k)) {
      out.parts = {*s, s->complement()};
      return out;
    }
  std::uint64_t nodes = 0;
  for (std::size_t d = 3; d <= max_parts; ++d) {
    std::vector<PointSet> parts;
    if (detail::distinguish(g, all, d, parts, nodes, node_budget)) {
      out.parts = std::move(parts);
      return out;
    }
  }
  throw BudgetExceeded("no distinguishing partition with at most " + std::to_string(max_parts) + " parts");
}

inline std::size_t distinguishing_number(const PermGroup& g) {
  return std::max<std::size_t>(1, distinguishing_partition(g).part_count());
}

}  // namespace permrel
