#pragma once

// Unordered relations: families of subsets of the domain.

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "perm_group.hpp"

namespace permrel {

class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t degree) : degree_(degree) {}

  /// Sorts and removes duplicates; every set must have the given degree.
  Relation(std::size_t degree, std::vector<PointSet> sets) : degree_(degree), sets_(std::move(sets)) {
    for (const auto& s : sets_)
      if (s.degree() != degree_) throw DegreeMismatch(degree_, s.degree());
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<PointSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(const PointSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

  /// Distinct cardinalities of member sets, ascending.
  std::vector<std::size_t> arity() const {
    std::vector<std::size_t> out;
    for (const auto& s : sets_)
      if (out.empty() || out.back() != s.size()) out.push_back(s.size());
    return out;
  }

  Relation with_cardinality(std::size_t k) const {
    std::vector<PointSet> out;
    for (const auto& s : sets_)
      if (s.size() == k) out.push_back(s);
    return Relation(degree_, std::move(out));
  }

  Relation without_cardinality(std::size_t k) const {
    std::vector<PointSet> out;
    for (const auto& s : sets_)
      if (s.size() != k) out.push_back(s);
    return Relation(degree_, std::move(out));
  }

  /// { complement of x : x in R }.
  Relation complemented() const {
    std::vector<PointSet> out;
    for (const auto& s : sets_) out.push_back(s.complement());
    return Relation(degree_, std::move(out));
  }

  Relation operator|(const Relation& o) const {
    if (o.degree_ != degree_) throw DegreeMismatch(degree_, o.degree_);
    std::vector<PointSet> all = sets_;
    all.insert(all.end(), o.sets_.begin(), o.sets_.end());
    return Relation(degree_, std::move(all));
  }

  Relation with(const PointSet& s) const { return *this | Relation(degree_, {s}); }

  /// True iff x^g lies in R for every x in R.
  bool invariant_under(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    for (const auto& s : sets_)
      if (!contains(act_set(g, s))) return false;
    return true;
  }

  bool invariant_under(const PermGroup& g) const {
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](const Permutation& p) { return invariant_under(p); });
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<PointSet> sets_;
};

/// The orbit x^G as a relation.
inline Relation orbit_of_set(const PermGroup& g, const PointSet& s, std::size_t limit = 50'000'000) {
  if (s.degree() != g.degree()) throw DegreeMismatch(g.degree(), s.degree());
  std::unordered_set<PointSet, PointSetHash> seen{s};
  std::vector<PointSet> out{s};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& gen : g.generators()) {
      PointSet img = act_set(gen, out[k]);
      if (seen.insert(img).second) {
        out.push_back(img);
        if (out.size() > limit) throw BudgetExceeded("set orbit larger than " + std::to_string(limit));
      }
    }
  return Relation(g.degree(), std::move(out));
}

/// Union of the orbits of the given sets.
inline Relation orbits_of_sets(const PermGroup& g, const std::vector<PointSet>& reps) {
  Relation r(g.degree());
  for (const auto& s : reps) r = r | orbit_of_set(g, s);
  return r;
}

inline Relation union_of(const std::vector<Relation>& parts) {
  if (parts.empty()) throw PreconditionError("union of no relations has no degree");
  Relation r(parts.front().degree());
  for (const auto& p : parts) r = r | p;
  return r;
}

/// All singletons {a}.
inline Relation singletons(std::size_t degree) {
  std::vector<PointSet> out;
  for (std::size_t a = 0; a < degree; ++a) out.push_back(PointSet(degree, {static_cast<Point>(a)}));
  return Relation(degree, std::move(out));
}

}  // namespace permrel
