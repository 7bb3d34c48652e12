#pragma once

// Symmetry groups of relations: relative to an overgroup (backtrack over the
// overgroup's chain) and absolute (refinement over the whole symmetric group).

#include <map>
#include <optional>
#include <unordered_set>

#include "backtrack.hpp"
#include "builders.hpp"
#include "refinement.hpp"
#include "relation.hpp"

namespace permrel {

/// 𝒢(R) inside Sym(Ω) by refinement.
inline PermGroup symmetry_group_full(const Relation& r, std::size_t max_degree = default_refinement_cap) {
  return automorphism_group(Hypergraph(r), max_degree);
}

namespace detail {

/// Base order that completes small member sets early.
inline std::vector<Point> relation_base_order(const Relation& r) {
  const std::size_t n = r.degree();
  std::vector<bool> used(n, false);
  std::vector<Point> order;
  for (const auto& s : r)  // sets are sorted by cardinality
    for (Point p : s.points())
      if (!used[p]) {
        used[p] = true;
        order.push_back(p);
      }
  for (std::size_t a = 0; a < n; ++a)
    if (!used[a]) order.push_back(static_cast<Point>(a));
  return order;
}

}  // namespace detail

/// { g in overgroup : R^g = R }. Elements of `known` must preserve R and lie
/// in the overgroup; they seed the search.
inline PermGroup symmetry_group_in(const PermGroup& overgroup, const Relation& r,
                                   const std::vector<Permutation>& known = {},
                                   std::uint64_t node_budget = default_node_budget) {
  if (overgroup.degree() != r.degree()) throw DegreeMismatch(overgroup.degree(), r.degree());
  for (const auto& k : known)
    if (!r.invariant_under(k) || !overgroup.contains(k))
      throw PreconditionError("seed element does not preserve the relation inside the overgroup");
  if (overgroup.is_trivial()) return overgroup;
  const std::size_t n = r.degree();
  Hypergraph h(r);
  std::vector<std::uint32_t> color = stable_point_colors(h);

  StabilizerChain ch = overgroup.chain_with_base(detail::relation_base_order(r));
  std::vector<Point> base = ch.base();
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < base.size(); ++i) pos[base[i]] = i;
  // Sets whose last point in base order is base[level].
  std::vector<std::vector<PointSet>> completed(base.size());
  for (const auto& s : r) {
    if (s.empty()) continue;
    std::size_t last = 0;
    for (Point p : s.points()) last = std::max(last, pos[p]);
    completed[last].push_back(s);
  }
  std::unordered_set<PointSet, PointSetHash> members(r.begin(), r.end());
  // Leaf check: cardinality classes smallest first, so failures show early.
  std::map<std::size_t, std::vector<PointSet>> by_card;
  for (const auto& s : r) by_card[s.size()].push_back(s);
  std::vector<const std::vector<PointSet>*> classes;
  for (auto& [k, v] : by_card) classes.push_back(&v);
  std::sort(classes.begin(), classes.end(), [](auto a, auto b) { return a->size() < b->size(); });

  SearchProblem p;
  p.point_ok = [&](std::size_t level, Point img) { return color[base[level]] == color[img]; };
  p.partial_ok = [&](std::size_t level, const Permutation& t) {
    for (const auto& s : completed[level])
      if (!members.count(act_set(t, s))) return false;
    return true;
  };
  p.accept = [&](const Permutation& g) {
    for (auto cls : classes)
      for (const auto& s : *cls)
        if (!members.count(act_set(g, s))) return false;
    return true;
  };
  return subgroup_search(ch, p, known, std::nullopt, node_budget);
}

/// True iff G is transitive on k-subsets.
inline bool k_homogeneous(const PermGroup& g, std::size_t k) {
  const std::size_t n = g.degree();
  if (k > n) throw PreconditionError("k exceeds the degree");
  BigInt binom = 1;
  for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  if (binom > g.order()) return false;
  std::vector<Point> first(k);
  std::iota(first.begin(), first.end(), Point{0});
  return BigInt(orbit_of_set(g, PointSet::of(n, first)).size()) == binom;
}

inline bool set_transitive(const PermGroup& g) {
  for (std::size_t k = 0; k <= g.degree(); ++k)
    if (!k_homogeneous(g, k)) return false;
  return true;
}

/// How a symmetry group was certified to contain 𝒢(R).
struct Overgroup {
  PermGroup group;
  /// Union of whole cardinality classes of R with 𝒢(sub_relation) = group,
  /// so that 𝒢(R) <= group.
  Relation sub_relation;
  /// "partition" (group is the wreath stabilizer of the block partition),
  /// "absolute" (group checked by refinement) or "imported" (known fact).
  std::string basis;
};

struct DefiningCheck {
  bool holds = false;
  PermGroup symmetry_group;
  std::string method;  // "absolute" or "relative:<basis>"
};

/// Decides 𝒢(R) = G. Uses refinement up to `max_degree`; otherwise needs an
/// overgroup certificate.
inline DefiningCheck check_defining_relation(const PermGroup& g, const Relation& r,
                                             const std::optional<Overgroup>& cert = std::nullopt,
                                             std::size_t max_degree = default_refinement_cap) {
  if (!r.invariant_under(g)) throw PreconditionError("relation is not invariant under the group");
  DefiningCheck out;
  if (!cert) {
    out.symmetry_group = symmetry_group_full(r, max_degree);
    out.method = "absolute";
  } else {
    const auto& sub = cert->sub_relation;
    auto ar = sub.arity();
    for (std::size_t k : ar)
      if (r.with_cardinality(k) != sub.with_cardinality(k))
        throw PreconditionError("certificate relation must consist of whole cardinality classes");
    if (cert->basis == "partition") {
      PermGroup expected = partition_group(sub.sets());
      if (!(expected == cert->group)) throw PreconditionError("overgroup is not the partition stabilizer");
    } else if (cert->basis == "absolute") {
      if (!(symmetry_group_full(sub, std::max(max_degree, sub.degree())) == cert->group))
        throw PreconditionError("overgroup is not the symmetry group of the certificate relation");
    } else if (cert->basis != "imported") {
      throw PreconditionError("unknown certificate basis " + cert->basis);
    }
    if (!sub.invariant_under(cert->group)) throw PreconditionError("overgroup does not preserve its relation");
    out.symmetry_group = symmetry_group_in(cert->group, r, g.generators());
    out.method = "relative:" + cert->basis;
  }
  out.holds = out.symmetry_group.order() == g.order();
  return out;
}

inline bool is_defining_relation(const PermGroup& g, const Relation& r) {
  return check_defining_relation(g, r).holds;
}

}  // namespace permrel
