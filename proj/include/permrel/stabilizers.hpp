#pragma once

#include "backtrack.hpp"

namespace permrel {

/// { g in G : a^g = a for all a in s }.
inline PermGroup pointwise_stabilizer(const PermGroup& g, const PointSet& s) {
  if (s.degree() != g.degree()) throw DegreeMismatch(g.degree(), s.degree());
  if (s.empty() || g.is_trivial()) return g;
  auto prefix = s.points();
  StabilizerChain ch = g.chain_with_base(prefix);
  const auto& levels = ch.levels();
  if (levels.size() <= prefix.size()) return PermGroup::trivial(g.degree());
  BigInt order = 1;
  for (std::size_t i = prefix.size(); i < levels.size(); ++i) order *= levels[i].orbit.size();
  return PermGroup(g.degree(), levels[prefix.size()].generators).with_order_hint(order);
}

namespace detail {

/// Search problem for "g maps s onto itself" over a chain whose base starts
/// with the points of s or of its complement.
inline SearchProblem set_problem(const StabilizerChain& ch, const PointSet& s) {
  std::vector<Point> base = ch.base();
  SearchProblem p;
  p.point_ok = [base, s](std::size_t level, Point img) { return s.contains(base[level]) == s.contains(img); };
  p.accept = [s](const Permutation& g) { return act_set(g, s) == s; };
  return p;
}

inline std::vector<Point> set_base_prefix(const PointSet& s) {
  return s.size() * 2 <= s.degree() ? s.points() : s.complement().points();
}

}  // namespace detail

/// { g in G : s^g = s }.
inline PermGroup setwise_stabilizer(const PermGroup& g, const PointSet& s) {
  if (s.degree() != g.degree()) throw DegreeMismatch(g.degree(), s.degree());
  if (s.empty() || s.size() == s.degree() || g.is_trivial()) return g;
  StabilizerChain ch = g.chain_with_base(detail::set_base_prefix(s));
  return subgroup_search(ch, detail::set_problem(ch, s));
}

/// True iff the setwise stabilizer of s in G is trivial. Stops at the first
/// nontrivial stabilizing element.
inline bool is_regular_set(const PermGroup& g, const PointSet& s) {
  if (s.degree() != g.degree()) throw DegreeMismatch(g.degree(), s.degree());
  if (g.is_trivial()) return true;
  if (s.empty() || s.size() == s.degree()) return false;
  StabilizerChain ch = g.chain_with_base(detail::set_base_prefix(s));
  SearchProblem p = detail::set_problem(ch, s);
  auto accept = p.accept;
  p.accept = [accept](const Permutation& x) { return !x.is_identity() && accept(x); };
  return !find_element(ch, p).has_value();
}

}  // namespace permrel
