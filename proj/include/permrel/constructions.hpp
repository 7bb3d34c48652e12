#pragma once

// Defining relations built from smaller ones: subgroups through a regular
// set, coset actions G/N from G/H, parallel sums and parallel multiples.
//
// Every builder returns a union of orbits of its target group. None of them
// certifies its result; pass the output to check_defining_relation.

#include <optional>
#include <vector>

#include "regular_sets.hpp"
#include "symmetry.hpp"

namespace permrel {

/// A relation together with a regular set of the group it defines.
struct BuiltRelation {
  Relation relation;
  PointSet regular_set;
};

// ---------------------------------------------------------------------------
// Parallel multiples of symmetric groups.

/// Singletons of the first copy and the pairs {(i,j),(i+1,j)} linking copy i
/// to copy i+1. Point (i,j) (copy i, point j, both 1-based) is (i-1)n + j.
inline Relation q_relation(std::size_t n, std::size_t r) {
  if (n < 2 || r < 1) throw PreconditionError("q_relation needs n >= 2 and r >= 1");
  const std::size_t deg = n * r;
  std::vector<PointSet> sets;
  for (std::size_t j = 0; j < n; ++j) sets.push_back(PointSet(deg, {static_cast<Point>(j)}));
  for (std::size_t i = 0; i + 1 < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sets.push_back(PointSet(deg, {static_cast<Point>(i * n + j), static_cast<Point>((i + 1) * n + j)}));
  return Relation(deg, std::move(sets));
}

/// (i,j) is in y iff bit i-1 of j is set, j = 1..n. Column j then spells j in
/// binary, so no nontrivial element of S_n^(r) fixes y. Complemented when
/// |y| <= 2 to keep it off the arities of the Q-relation.
inline PointSet binary_regular_set(std::size_t n, std::size_t r) {
  if (r >= 64 || (std::uint64_t{1} << r) < n) throw PreconditionError("binary_regular_set needs 2^r >= n");
  PointSet y(n * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if ((j >> i) & 1u) y.insert(static_cast<Point>(i * n + j - 1));
  return y.size() <= 2 ? y.complement() : y;
}

// ---------------------------------------------------------------------------
// Subgroups through a regular set.

/// R ∪ y^K, which defines K when R defines H, y is regular in H, K <= H and
/// y^𝒢(R') misses R, R' being R without its |y|-sets. The last condition is
/// checked by computing 𝒢(R') when |y| is an arity of R and the degree is at
/// most max_degree; above that it is required that |y| is not an arity of R.
inline Relation relation_sies(const PermGroup& h, const Relation& r, const PointSet& y, const PermGroup& k,
                              std::size_t max_degree = default_refinement_cap) {
  if (h.degree() != r.degree()) throw DegreeMismatch(h.degree(), r.degree());
  if (y.degree() != h.degree()) throw DegreeMismatch(h.degree(), y.degree());
  if (!r.invariant_under(h)) throw PreconditionError("R is not invariant under H");
  if (!is_regular_set(h, y)) throw PreconditionError("y is not regular in H");
  if (!k.is_subgroup_of(h)) throw PreconditionError("K is not a subgroup of H");
  Relation same = r.with_cardinality(y.size());
  if (!same.empty()) {
    if (r.degree() > max_degree)
      throw PreconditionError("|y| is an arity of R and 𝒢(R') is beyond the refinement cap");
    PermGroup wider = symmetry_group_full(r.without_cardinality(y.size()), max_degree);
    Relation orbit = orbit_of_set(wider, y);
    for (const auto& x : same)
      if (orbit.contains(x))
        throw PreconditionError("the orbit of y under 𝒢(R') meets R");
  }
  return r | orbit_of_set(k, y);
}

// ---------------------------------------------------------------------------
// Coset actions G/N with N < H < G.

namespace detail {

/// Block structure of G/N over G/H: block_of[j] is the H-coset containing
/// the j-th N-coset.
struct CosetTower {
  std::vector<std::size_t> block_of;
  std::vector<PointSet> blocks;  // s_1..s_n, indexed by H-coset
  std::size_t index_hn = 0;      // [H:N]
};

inline CosetTower coset_tower(const CosetActionSpec& spec_h, const CosetActionSpec& spec_n) {
  if (spec_h.group().generators() != spec_n.group().generators())
    throw PreconditionError("both coset actions must use the same generators of G");
  if (!spec_n.subgroup().is_subgroup_of(spec_h.subgroup())) throw PreconditionError("N is not a subgroup of H");
  if (spec_n.subgroup().order() == spec_h.subgroup().order()) throw PreconditionError("N must be proper in H");
  if (spec_h.index() == 1) throw PreconditionError("H must be proper in G");
  const std::size_t deg = spec_n.index();
  CosetTower t;
  t.index_hn = deg / spec_h.index();
  t.block_of.resize(deg);
  t.blocks.assign(spec_h.index(), PointSet(deg));
  for (std::size_t j = 0; j < deg; ++j) {
    t.block_of[j] = spec_h.coset_of(spec_n.reps()[j]);
    t.blocks[t.block_of[j]].insert(static_cast<Point>(j));
  }
  return t;
}

inline PointSet lift_set(const CosetTower& t, const PointSet& x) {
  PointSet out(t.block_of.size());
  for (Point p : x.points()) out = out | t.blocks[p];
  return out;
}

inline Relation lift_relation(const CosetTower& t, const Relation& r) {
  std::vector<PointSet> sets;
  for (const auto& x : r) sets.push_back(lift_set(t, x));
  return Relation(t.block_of.size(), std::move(sets));
}

inline void require_defining_candidate(const PermGroup& gh, const Relation& rprime) {
  if (rprime.degree() != gh.degree()) throw DegreeMismatch(gh.degree(), rprime.degree());
  if (!rprime.invariant_under(gh)) throw PreconditionError("R' is not invariant under (G,G/H)");
  for (std::size_t a = 0; a < gh.degree(); ++a)
    if (!rprime.contains(PointSet(gh.degree(), {static_cast<Point>(a)})))
      throw PreconditionError("R' must contain every singleton");
}

}  // namespace detail

/// Relation on G/N from a relation R' defining (G,G/H) (with all singletons)
/// and a regular set ybar of (G,G/H) avoiding H: R' lifted to unions of
/// blocks, plus the orbit of lift(ybar) ∪ {N}.
inline BuiltRelation relation_coset_regular(const CosetActionSpec& spec_h, const CosetActionSpec& spec_n,
                                            const Relation& rprime, const PointSet& ybar) {
  auto t = detail::coset_tower(spec_h, spec_n);
  PermGroup gh = spec_h.action(), gn = spec_n.action();
  detail::require_defining_candidate(gh, rprime);
  if (ybar.degree() != gh.degree()) throw DegreeMismatch(gh.degree(), ybar.degree());
  if (ybar.contains(0)) throw PreconditionError("ybar must not contain the coset H");
  if (!is_regular_set(gh, ybar)) throw PreconditionError("ybar is not regular in (G,G/H)");
  PointSet z = detail::lift_set(t, ybar);
  z.insert(0);
  return {detail::lift_relation(t, rprime) | orbit_of_set(gn, z), z};
}

/// Relation on G/N when [H:N] >= [G:H]-1: the blocks s_i and the orbit of a
/// set y meeting the blocks in pairwise different numbers of points, 1 in s_1
/// and [H:N] in the last block.
inline BuiltRelation relation_injective_labelling(const CosetActionSpec& spec_h, const CosetActionSpec& spec_n) {
  auto t = detail::coset_tower(spec_h, spec_n);
  const std::size_t n = spec_h.index(), m = t.index_hn;
  if (m + 1 < n) throw PreconditionError("injective labelling needs [H:N] >= [G:H]-1");
  // Counts 1, 0, 2, 3, ... with the last block full.
  std::vector<std::size_t> counts{1};
  for (std::size_t c = 0; counts.size() + 1 < n; ++c)
    if (c != 1 && c != m) counts.push_back(c);
  counts.push_back(m);
  PointSet y(spec_n.index());
  for (std::size_t i = 0; i < n; ++i) {
    auto pts = t.blocks[i].points();
    for (std::size_t c = 0; c < counts[i]; ++c) y.insert(pts[c]);
  }
  Relation blocks(spec_n.index(), t.blocks);
  return {blocks | orbit_of_set(spec_n.action(), y), y};
}

/// Relation on G/N from a relation R' defining (G,G/H) and a distinguishing
/// partition t_1..t_d of G/H with [H:N] >= d-1. Every block in t_j meets y in
/// c_j points, with c_1 = 1, c_d = [H:N] and the c_j pairwise different.
inline BuiltRelation relation_distinguishing(const CosetActionSpec& spec_h, const CosetActionSpec& spec_n,
                                             const Relation& rprime, const DistinguishingPartition& partition) {
  auto t = detail::coset_tower(spec_h, spec_n);
  PermGroup gh = spec_h.action();
  detail::require_defining_candidate(gh, rprime);
  const auto& parts = partition.parts;
  const std::size_t d = parts.size(), m = t.index_hn;
  if (d < 2) throw PreconditionError("a distinguishing partition of a nontrivial group has at least two parts");
  PointSet seen(gh.degree());
  for (const auto& p : parts) {
    if (p.degree() != gh.degree()) throw DegreeMismatch(gh.degree(), p.degree());
    if (!(seen & p).empty()) throw PreconditionError("partition parts overlap");
    seen = seen | p;
  }
  if (seen != PointSet::full(gh.degree())) throw PreconditionError("partition does not cover G/H");
  if (!is_distinguishing(gh, parts)) throw PreconditionError("partition is not distinguishing");
  if (m + 1 < d)
    throw PreconditionError("distinguishing construction needs [H:N] >= d-1 (here [H:N] = " + std::to_string(m) +
                            ", d = " + std::to_string(d) + ")");
  std::vector<std::size_t> counts{1};
  for (std::size_t c = 0; counts.size() + 1 < d; ++c)
    if (c != 1 && c != m) counts.push_back(c);
  counts.push_back(m);
  PointSet y(spec_n.index());
  for (std::size_t j = 0; j < d; ++j)
    for (Point b : parts[j].points()) {
      auto pts = t.blocks[b].points();
      for (std::size_t c = 0; c < counts[j]; ++c) y.insert(pts[c]);
    }
  return {detail::lift_relation(t, rprime) | orbit_of_set(spec_n.action(), y), y};
}

/// PSL(2,8) on the 63 cosets of C2^3 (index 7 in a point stabilizer H of the
/// 9-point action). R' defines the cyclic two-point stabilizer on the other
/// seven H-cosets; each x in R' is lifted, one point a of s_alpha and two
/// points b, c of s_beta are added, and the results are closed under G. The
/// blocks are added as well.
inline Relation relation_psl28_cosets(const CosetActionSpec& spec_h, const CosetActionSpec& spec_n,
                                      const Relation& rprime, Point alpha, Point beta) {
  auto t = detail::coset_tower(spec_h, spec_n);
  PermGroup gn = spec_n.action();
  const std::size_t n = spec_h.index();
  if (rprime.degree() != n) throw DegreeMismatch(n, rprime.degree());
  if (alpha >= n || beta >= n || alpha == beta) throw PreconditionError("alpha and beta must be distinct cosets");
  for (const auto& x : rprime)
    if (x.contains(alpha) || x.contains(beta)) throw PreconditionError("R' must avoid alpha and beta");
  auto sa = t.blocks[alpha].points(), sb = t.blocks[beta].points();
  if (sb.size() < 2) throw PreconditionError("blocks must have at least two points");
  std::vector<PointSet> reps;
  for (const auto& x : rprime) {
    PointSet xx = detail::lift_set(t, x);
    xx.insert(sa[0]);
    xx.insert(sb[0]);
    xx.insert(sb[1]);
    reps.push_back(xx);
  }
  return Relation(gn.degree(), t.blocks) | orbits_of_sets(gn, reps);
}

/// R' lifted to G/N plus the orbit of the first k-set, in colex order, for
/// which the union defines (G,G/N). Each candidate is certified by refinement,
/// so the degree must be within max_degree. Returns nullopt if none of the
/// first `max_tries` orbits works.
struct LiftedRelation {
  Relation relation;
  PointSet representative;  // the k-set whose orbit was added
};

inline std::optional<LiftedRelation> relation_lift_with_orbit(const CosetActionSpec& spec_h,
                                                              const CosetActionSpec& spec_n, const Relation& rprime,
                                                              std::size_t k, std::size_t max_tries = 200,
                                                              std::size_t max_degree = default_refinement_cap) {
  auto t = detail::coset_tower(spec_h, spec_n);
  PermGroup gn = spec_n.action();
  const std::size_t deg = gn.degree();
  if (deg > max_degree) throw BudgetExceeded("lift search certifies by refinement up to the cap");
  detail::require_defining_candidate(spec_h.action(), rprime);
  Relation lifted = detail::lift_relation(t, rprime);
  if (!lifted.with_cardinality(k).empty()) throw PreconditionError("k is already an arity of the lifted relation");
  std::unordered_set<PointSet, PointSetHash> seen;
  std::size_t tried = 0;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  for (; tried < max_tries && mask < (std::uint64_t{1} << deg); mask = detail::next_subset(mask)) {
    PointSet x = PointSet::from_mask(deg, mask);
    if (seen.count(x)) continue;
    Relation orbit = orbit_of_set(gn, x);
    seen.insert(orbit.begin(), orbit.end());
    ++tried;
    Relation r = lifted | orbit;
    if (symmetry_group_full(r, max_degree).order() == gn.order()) return LiftedRelation{r, x};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parallel sums.

/// Relation for G = H ||_phi K on Omega ∪ Delta from R0 defining H on Omega
/// and a regular set y of H: R0, the sets x ∪ Delta with |x| = |Omega|-1, and
/// the G-orbits of y ∪ Delta_i for 0 < i < |Delta|, Delta_i being the first i
/// points of Delta. y is replaced by its complement when |y| = |Omega|-1.
inline BuiltRelation relation_parallel_sum(const IsoMap& phi, const Relation& r0, PointSet y) {
  const PermGroup& h = phi.source();
  const std::size_t n1 = h.degree(), m = phi.target().degree(), deg = n1 + m;
  if (r0.degree() != n1) throw DegreeMismatch(n1, r0.degree());
  if (y.degree() != n1) throw DegreeMismatch(n1, y.degree());
  if (!r0.invariant_under(h)) throw PreconditionError("R0 is not invariant under H");
  if (!is_regular_set(h, y)) throw PreconditionError("y is not regular in H");
  if (y.size() + 1 == n1) y = y.complement();
  PermGroup g = parallel_sum(phi);
  auto widen = [&](const PointSet& s) {
    PointSet out(deg);
    for (Point p : s.points()) out.insert(p);
    return out;
  };
  PointSet delta(deg);
  for (std::size_t j = n1; j < deg; ++j) delta.insert(static_cast<Point>(j));
  std::vector<PointSet> sets;
  for (const auto& s : r0) sets.push_back(widen(s));
  for (std::size_t a = 0; a < n1; ++a) {
    PointSet x = delta;
    for (std::size_t b = 0; b < n1; ++b)
      if (b != a) x.insert(static_cast<Point>(b));
    sets.push_back(x);
  }
  std::vector<PointSet> reps;
  PointSet yd = widen(y);
  for (std::size_t i = 1; i < m; ++i) {
    yd.insert(static_cast<Point>(n1 + i - 1));
    reps.push_back(yd);
  }
  Relation out = Relation(deg, std::move(sets)) | orbits_of_sets(g, reps);
  return {out, widen(y) | delta};
}

/// Parallel multiple H^(2) from a relation R1 defining H on n points whose
/// sets all have fewer than n points: R1 on the first copy and the
/// complements of the Q-relation sets (arities 2n-1 and 2n-2).
inline Relation relation_doubled(const Relation& r1) {
  const std::size_t n = r1.degree();
  std::vector<PointSet> sets;
  for (const auto& s : r1) {
    if (s.size() >= n) throw PreconditionError("sets of R1 must be proper");
    PointSet x(2 * n);
    for (Point p : s.points()) x.insert(p);
    sets.push_back(x);
  }
  return Relation(2 * n, std::move(sets)) | q_relation(n, 2).complemented();
}

/// Relation for a parallel sum H ||_psi H twisted by a non-permutation
/// automorphism, from R0 defining H on the first n points: R0 and its copy on
/// the second n points, the first orbit, and the orbit of the pair {1, 1'}.
inline Relation relation_twisted_copy(const PermGroup& g, const Relation& r0) {
  const std::size_t n = r0.degree();
  if (g.degree() != 2 * n) throw DegreeMismatch(2 * n, g.degree());
  std::vector<PointSet> sets;
  PointSet first(2 * n);
  for (std::size_t a = 0; a < n; ++a) first.insert(static_cast<Point>(a));
  sets.push_back(first);
  for (const auto& s : r0) {
    PointSet a(2 * n), b(2 * n);
    for (Point p : s.points()) {
      a.insert(p);
      b.insert(static_cast<Point>(p + n));
    }
    sets.push_back(a);
    sets.push_back(b);
  }
  Relation r(2 * n, std::move(sets));
  if (!r.invariant_under(g)) throw PreconditionError("R0 and its copy are not invariant under the group");
  return r | orbit_of_set(g, PointSet(2 * n, {Point{0}, static_cast<Point>(n)}));
}

// ---------------------------------------------------------------------------
// Search.

struct DefiningSearchOptions {
  std::size_t min_k = 1;
  std::size_t max_k = 0;                // 0 means degree - 1
  std::size_t candidates_per_k = 64;    // orbit representatives tried per cardinality
  std::uint64_t max_orbit = 200'000;    // longer orbits are skipped
  std::size_t max_degree = default_refinement_cap;
  std::uint64_t node_budget = default_node_budget;
};

namespace detail {

/// The first `limit` orbits of g on k-subsets, in colex order of their least member.
inline std::vector<Relation> first_orbits(const PermGroup& g, std::size_t k, std::size_t limit,
                                          std::uint64_t max_orbit) {
  const std::size_t n = g.degree();
  SubsetRanker ranker(n);
  const std::uint64_t total = ranker.binom(n, k);
  std::vector<Relation> out;
  if (total > default_census_budget) return out;
  std::vector<std::uint64_t> marked((total + 63) / 64, 0);
  auto test_and_mark = [&](std::uint64_t r) {
    std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (marked[r >> 6] & bit) return false;
    marked[r >> 6] |= bit;
    return true;
  };
  std::vector<std::vector<Point>> gens;
  for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  std::uint64_t mask = k == 0 ? 0 : (k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  std::vector<std::uint64_t> orbit, stack;
  for (std::uint64_t r = 0; r < total && out.size() < limit; ++r, mask = (r < total ? next_subset(mask) : 0)) {
    if (!test_and_mark(r)) continue;
    orbit.assign(1, mask);
    stack.assign(1, mask);
    while (!stack.empty()) {
      std::uint64_t s = stack.back();
      stack.pop_back();
      for (const auto& img : gens) {
        std::uint64_t t = image_mask(img, s);
        if (test_and_mark(ranker.rank(t))) {
          orbit.push_back(t);
          stack.push_back(t);
        }
      }
    }
    if (orbit.size() > max_orbit) continue;
    std::vector<PointSet> sets;
    for (auto s : orbit) sets.push_back(PointSet::from_mask(n, s));
    out.emplace_back(n, std::move(sets));
  }
  return out;
}

}  // namespace detail

/// Greedy search for a defining relation. For k = min_k..max_k it keeps
/// adding the k-set orbit that shrinks 𝒢 the most (first in colex order
/// among ties) while that helps. A new cardinality class only cuts the
/// current group down to the orbit's stabilizer in it; a second orbit of the
/// same size is evaluated by refinement. Returns nullopt if 𝒢 never reaches
/// G. A found relation is exact; failure proves nothing.
inline std::optional<Relation> find_defining_relation(const PermGroup& g, const DefiningSearchOptions& opt = {}) {
  const std::size_t n = g.degree();
  if (n > 64) throw BudgetExceeded("defining relation search supports degree <= 64");
  const std::size_t max_k = opt.max_k == 0 ? (n == 0 ? 0 : n - 1) : std::min(opt.max_k, n);
  PermGroup current = symmetric_group(n);
  Relation rel(n, {});
  if (current.order() == g.order()) return rel;
  const bool refine_ok = n <= opt.max_degree;
  for (std::size_t k = opt.min_k; k <= max_k; ++k) {
    auto orbits = detail::first_orbits(g, k, opt.candidates_per_k, opt.max_orbit);
    std::vector<bool> used(orbits.size(), false);
    for (;;) {
      const bool fresh = rel.with_cardinality(k).empty();
      if (!fresh && !refine_ok) break;
      std::optional<std::size_t> best;
      std::optional<PermGroup> best_group;
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (used[i]) continue;
        PermGroup next = [&] {
          // Backtracking over the whole symmetric group prunes too little, so
          // the first orbit goes through refinement when the degree allows.
          if (fresh && !(rel.empty() && refine_ok))
            return symmetry_group_in(current, orbits[i], g.generators(), opt.node_budget);
          return symmetry_group_full(rel | orbits[i], opt.max_degree);
        }();
        if (next.order() < current.order() && (!best_group || next.order() < best_group->order())) {
          best = i;
          best_group = std::move(next);
          if (best_group->order() == g.order()) break;
        }
      }
      if (!best) break;
      used[*best] = true;
      rel = rel | orbits[*best];
      current = std::move(*best_group);
      if (current.order() == g.order()) return rel;
    }
  }
  return std::nullopt;
}

/// Decides by exhaustion whether some union of orbits of g on subsets
/// defines g. Cardinality classes that form a single orbit are left out:
/// every permutation preserves them. Throws BudgetExceeded when more than
/// `max_orbits` orbits remain. Returns a defining relation or nullopt (none
/// exists).
inline std::optional<Relation> defining_relation_exhaustive(const PermGroup& g, std::size_t max_orbits = 16,
                                                            std::size_t max_degree = default_refinement_cap) {
  const std::size_t n = g.degree();
  if (n > max_degree) throw BudgetExceeded("exhaustive relation search certifies by refinement up to the cap");
  std::vector<Relation> orbits;
  for (std::size_t k = 1; k < n; ++k) {
    auto level = detail::first_orbits(g, k, max_orbits + 1, ~std::uint64_t{0});
    if (level.size() <= 1) continue;
    for (auto& o : level) orbits.push_back(std::move(o));
    if (orbits.size() > max_orbits) throw BudgetExceeded("too many orbits for an exhaustive relation search");
  }
  const BigInt target = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    Relation r(n, {});
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if ((mask >> i) & 1u) r = r | orbits[i];
    if (symmetry_group_full(r, max_degree).order() == target) return r;
  }
  return std::nullopt;
}

}  // namespace permrel
