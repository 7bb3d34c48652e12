#pragma once

// Subgroup and element search over a stabilizer chain.
//
// An element g of G is described level by level by the images of the base
// points. The search walks these images depth first and asks the problem to
// reject partial images early. For subgroup searches the property must be
// closed under products and inverses; already found elements are used to skip
// whole orbits of candidates.

#include <functional>
#include <optional>
#include <vector>

#include "perm_group.hpp"

namespace permrel {

struct SearchProblem {
  /// Cheap test on the image of base point number `level`. Optional.
  std::function<bool(std::size_t level, Point image)> point_ok;
  /// Test on a partial element that is correct on base points 0..level. Optional.
  std::function<bool(std::size_t level, const Permutation& partial)> partial_ok;
  /// Final test on a complete element. Required.
  std::function<bool(const Permutation&)> accept;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

namespace detail {

class ChainWalker {
 public:
  ChainWalker(const StabilizerChain& chain, const SearchProblem& problem, SearchStats& stats,
              std::uint64_t node_budget)
      : chain_(chain), problem_(problem), stats_(stats), budget_(node_budget) {}

  /// Depth-first over elements g of the chain's level-`from` subgroup, with
  /// t the product of transversal elements chosen for levels from..depth-1.
  /// Calls found(g) for every accepted leaf; stops when found returns true.
  bool walk(std::size_t depth, const Permutation& t, const std::function<bool(const Permutation&)>& found) {
    if (++stats_.nodes > budget_) throw BudgetExceeded("backtrack search exceeded its node budget");
    const auto& levels = chain_.levels();
    if (depth == levels.size()) return problem_.accept(t) && found(t);
    const auto& lv = levels[depth];
    // Images of the base point, sorted so the first solution is canonical.
    std::vector<std::pair<Point, std::size_t>> cand;
    cand.reserve(lv.orbit.size());
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      Point img = t[lv.orbit[k]];
      if (problem_.point_ok && !problem_.point_ok(depth, img)) continue;
      cand.emplace_back(img, k);
    }
    std::sort(cand.begin(), cand.end());
    for (auto [img, k] : cand) {
      Permutation next = lv.transversal[k] * t;
      if (problem_.partial_ok && !problem_.partial_ok(depth, next)) continue;
      if (walk(depth + 1, next, found)) return true;
    }
    return false;
  }

 private:
  const StabilizerChain& chain_;
  const SearchProblem& problem_;
  SearchStats& stats_;
  std::uint64_t budget_;
};

inline std::vector<Point> orbit_under(Point a, const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> out{a};
  seen[a] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto& g : gens) {
      Point b = g[out[k]];
      if (!seen[b]) {
        seen[b] = true;
        out.push_back(b);
      }
    }
  return out;
}

}  // namespace detail

constexpr std::uint64_t default_node_budget = 2'000'000'000ull;

/// First element of G (in the canonical base-image order) satisfying the problem.
inline std::optional<Permutation> find_element(const StabilizerChain& chain, const SearchProblem& problem,
                                               std::uint64_t node_budget = default_node_budget,
                                               SearchStats* stats = nullptr) {
  SearchStats local;
  detail::ChainWalker walker(chain, problem, stats ? *stats : local, node_budget);
  std::optional<Permutation> result;
  walker.walk(0, Permutation(chain.degree()), [&](const Permutation& g) {
    result = g;
    return true;
  });
  return result;
}

/// The subgroup { g in G : problem accepts g }. The property must define a
/// subgroup. `known` lists elements already known to satisfy it; `target`,
/// when given, is the order of the answer if known in advance.
inline PermGroup subgroup_search(const StabilizerChain& chain, const SearchProblem& problem,
                                 std::vector<Permutation> known = {}, std::optional<BigInt> target = std::nullopt,
                                 std::uint64_t node_budget = default_node_budget, SearchStats* stats = nullptr) {
  const std::size_t n = chain.degree();
  const auto& levels = chain.levels();
  const std::vector<Point> base = chain.base();
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  std::vector<Permutation> gens;
  for (auto& g : known)
    if (!g.is_identity()) gens.push_back(g);
  StabilizerChain k_chain(n, gens, base);
  auto done = [&] { return target && k_chain.order() >= *target; };

  detail::ChainWalker walker(chain, problem, st, node_budget);
  for (std::size_t l = levels.size(); l-- > 0 && !done();) {
    const auto& lv = levels[l];
    std::vector<bool> failed(n, false);
    std::vector<Point> cand(lv.orbit.begin(), lv.orbit.end());
    std::sort(cand.begin(), cand.end());
    for (Point gamma : cand) {
      if (done()) break;
      if (gamma == lv.base_point || failed[gamma]) continue;
      const auto& klv = k_chain.levels()[l];
      if (klv.in_orbit(gamma)) continue;
      if (problem.point_ok && !problem.point_ok(l, gamma)) {
        failed[gamma] = true;
        continue;
      }
      const Permutation& u = lv.rep(gamma);
      bool hit = false;
      if (!problem.partial_ok || problem.partial_ok(l, u)) {
        hit = walker.walk(l + 1, u, [&](const Permutation& g) {
          gens.push_back(g);
          k_chain = StabilizerChain(n, gens, base);
          return true;
        });
      }
      if (!hit)
        for (Point p : detail::orbit_under(gamma, k_chain.levels()[l].generators, n)) failed[p] = true;
    }
  }
  PermGroup result(n, gens);
  return result.with_order_hint(k_chain.order());
}

}  // namespace permrel
