#pragma once

// Orbit closure and membership in BGR(k).
//
// A group is the symmetry group of some k-valued Boolean function iff it
// equals the largest group with the same orbits on the power set. The closure
// is found by colouring every subset with its orbit number and searching the
// symmetric group for colour-preserving permutations, base 0, 1, ..., n-1.
// With that base a partial image on {0..l} lets every subset of {0..l} that
// contains l be checked at level l.

#include <optional>
#include <vector>

#include "builders.hpp"
#include "regular_sets.hpp"
#include "relation.hpp"

namespace permrel {

constexpr std::size_t default_closure_cap = 20;

namespace detail {

/// Orbit number of every subset mask under g, numbered in order of first mask.
inline std::vector<std::uint32_t> subset_orbit_ids(const PermGroup& g) {
  const std::size_t n = g.degree();
  const std::uint64_t total = std::uint64_t{1} << n;
  constexpr std::uint32_t none = ~std::uint32_t{0};
  std::vector<std::uint32_t> id(total, none);
  std::vector<std::vector<Point>> gens;
  for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  std::uint32_t next = 0;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (id[m] != none) continue;
    id[m] = next;
    stack.assign(1, m);
    while (!stack.empty()) {
      std::uint64_t s = stack.back();
      stack.pop_back();
      for (const auto& img : gens) {
        std::uint64_t t = image_mask(img, s);
        if (id[t] == none) {
          id[t] = next;
          stack.push_back(t);
        }
      }
    }
    ++next;
  }
  return id;
}

/// { p in Sym(n) : colour(S^p) = colour(S) for every subset S }. `known`
/// elements must preserve the colouring.
inline PermGroup colour_preserving_group(std::size_t n, const std::vector<std::uint32_t>& colour,
                                         const std::vector<Permutation>& known,
                                         std::uint64_t node_budget = default_node_budget) {
  if (n <= 1) return PermGroup::trivial(n);
  std::vector<Point> prefix(n);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  StabilizerChain sym = symmetric_group(n).chain_with_base(prefix);
  std::vector<Point> base = sym.base();
  for (std::size_t i = 0; i < base.size(); ++i)
    if (base[i] != i) throw PreconditionError("symmetric group chain has an unexpected base");
  std::vector<std::uint64_t> img(std::size_t{1} << n);

  // Checks every subset of {0..level} containing `level`; images built from
  // the lowest point upwards.
  auto level_ok = [&](std::size_t level, const Permutation& t) {
    img[0] = 0;
    const std::uint64_t top = std::uint64_t{1} << level;
    for (std::uint64_t s = 1; s < 2 * top; ++s) {
      std::uint64_t low = s & (~s + 1);
      img[s] = img[s ^ low] | (std::uint64_t{1} << t[static_cast<Point>(std::countr_zero(low))]);
      if ((s & top) && colour[s] != colour[img[s]]) return false;
    }
    return true;
  };
  SearchProblem p;
  p.point_ok = [&](std::size_t level, Point a) {
    return colour[std::uint64_t{1} << base[level]] == colour[std::uint64_t{1} << a];
  };
  p.partial_ok = level_ok;
  // Levels stop one point short of n; the last point is forced.
  p.accept = [&](const Permutation& g) { return level_ok(n - 1, g); };
  return subgroup_search(sym, p, known, std::nullopt, node_budget);
}

}  // namespace detail

/// The largest group with the same orbits on subsets as g.
inline PermGroup orbit_closure(const PermGroup& g, std::size_t max_degree = default_closure_cap) {
  if (g.degree() > max_degree)
    throw BudgetExceeded("orbit closure supports degree <= " + std::to_string(max_degree));
  auto colour = detail::subset_orbit_ids(g);
  return detail::colour_preserving_group(g.degree(), colour, g.generators());
}

/// True iff g is the symmetry group of some k-valued Boolean function for some k.
inline bool in_bgr(const PermGroup& g, std::size_t max_degree = default_closure_cap) {
  return orbit_closure(g, max_degree).order() == g.order();
}

/// A k-valued function constant on the orbits of g, given by its level sets.
struct BgrWitness {
  std::size_t k = 0;
  std::vector<Relation> levels;  // levels[v] = { S : F(S) = v }
};

/// Searches all k-valued functions that are constant on the orbits of g on
/// subsets (up to renaming values) for one whose symmetry group is g.
inline std::optional<BgrWitness> in_bgr_k_bruteforce(const PermGroup& g, std::size_t k,
                                                     std::uint64_t max_assignments = 5'000'000) {
  const std::size_t n = g.degree();
  if (n > 8) throw BudgetExceeded("brute-force BGR(k) search supports degree <= 8");
  if (k == 0) throw PreconditionError("k must be positive");
  auto orbit_id = detail::subset_orbit_ids(g);
  std::uint32_t m = 0;
  for (auto v : orbit_id) m = std::max(m, v + 1);
  const BigInt target = g.order();
  // Value of each orbit as a restricted growth string: value[i] <= 1 + max(value[0..i-1]).
  std::vector<std::uint32_t> value(m, 0), prefix_max(m, 0);
  std::vector<std::uint32_t> colour(orbit_id.size());
  std::uint64_t tried = 0;
  for (;;) {
    if (++tried > max_assignments) throw BudgetExceeded("too many orbit assignments");
    for (std::size_t s = 0; s < orbit_id.size(); ++s) colour[s] = value[orbit_id[s]];
    if (detail::colour_preserving_group(n, colour, g.generators()).order() == target) {
      BgrWitness w;
      w.k = k;
      std::vector<std::vector<PointSet>> sets(k);
      for (std::uint64_t s = 0; s < colour.size(); ++s) sets[colour[s]].push_back(PointSet::from_mask(n, s));
      for (auto& v : sets) w.levels.emplace_back(n, std::move(v));
      return w;
    }
    // Next restricted growth string with values below k.
    std::size_t i = m;
    while (i-- > 1) {
      std::uint32_t cap = std::min<std::uint32_t>(static_cast<std::uint32_t>(k) - 1, prefix_max[i - 1] + 1);
      if (value[i] < cap) {
        ++value[i];
        prefix_max[i] = std::max(prefix_max[i - 1], value[i]);
        for (std::size_t j = i + 1; j < m; ++j) {
          value[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        break;
      }
    }
    if (i == 0 || m <= 1) return std::nullopt;
  }
}

/// The symmetry group of a k-valued function given by its level relations.
inline PermGroup joint_symmetry_group(const std::vector<Relation>& levels) {
  if (levels.empty()) throw PreconditionError("no level relations");
  const std::size_t n = levels.front().degree();
  if (n > default_closure_cap) throw BudgetExceeded("joint symmetry group supports degree <= 20");
  std::vector<std::uint32_t> colour(std::size_t{1} << n, static_cast<std::uint32_t>(levels.size()));
  for (std::size_t v = 0; v < levels.size(); ++v)
    for (const auto& s : levels[v]) colour[s.mask()] = static_cast<std::uint32_t>(v);
  return detail::colour_preserving_group(n, colour, {});
}

}  // namespace permrel
