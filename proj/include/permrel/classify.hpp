#pragma once

// Classification of simple permutation groups: membership in BGR(2), in BGR
// and existence of a regular set.
//
// The verdict follows the case analysis for simple groups. Fixed points are
// stripped, the rest splits into transitive components, every component is
// recognised by degree, order and primitivity, and the combination of
// component kinds selects a rule. Alongside the rule the classifier
// computes what it can afford (a defining relation, the orbit closure, an
// exhaustive search over unions of orbits, a regular-set census) and lists
// every disagreement with the rule as a conflict.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "closure.hpp"
#include "constructions.hpp"
#include "catalog.hpp"
#include "regular_sets.hpp"

namespace permrel {

/// How a transitive component was recognised.
enum class ComponentKind {
  alternating,  // A_n natural, n >= 3
  cyclic_five,  // C5 natural
  psl28,        // PSL(2,8) on 9 points
  list_member,  // primitive, in BGR(2), no regular set
  other,        // in BGR(2) with a regular set
};

inline const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::alternating: return "alternating";
    case ComponentKind::cyclic_five: return "cyclic-five";
    case ComponentKind::psl28: return "projective-line-eight";
    case ComponentKind::list_member: return "list-member";
    case ComponentKind::other: return "relation-group-with-regular-set";
  }
  return "?";
}

struct ComponentInfo {
  PointSet points;
  std::size_t degree = 0;
  BigInt order;
  bool primitive = false;
  ComponentKind kind = ComponentKind::other;
  std::string label;  // e.g. "A5", "M11@12"
};

/// Values established by computation rather than by the case analysis.
struct ComputedChecks {
  std::optional<bool> bgr;          // orbit closure equals G
  std::optional<bool> bgr2;         // defining relation found, or exhaustion
  std::optional<bool> regular_set;  // witness found, or full census
  std::vector<std::string> methods;
};

struct ClassificationVerdict {
  std::string name;
  std::size_t degree = 0;
  std::size_t moved_degree = 0;
  BigInt order;
  std::vector<ComponentInfo> components;
  std::string structure;  // e.g. "A6 ||psi A6", "A5^(3)"
  std::string rule;       // tag of the case that decided
  bool bgr = false;
  bool bgr2 = false;
  bool regular_set = false;
  std::vector<std::string> notes;

  std::optional<Relation> witness;
  std::string witness_status;  // "verified:<method>", "verdict by theorem, witness unverified", "none"
  std::optional<PointSet> regular_witness;

  ComputedChecks computed;
  std::vector<std::string> conflicts;

  std::string summary() const {
    if (rule == "unclassified") return "unclassified";
    std::string s = bgr2 ? "BGR(2)" : (bgr ? "BGR(k), k > 2" : "not BGR");
    s += regular_set ? ", regular set" : ", no regular set";
    return s;
  }
};

struct ClassifyOptions {
  bool assume_simple = false;
  std::size_t witness_max_degree = 16;   // greedy defining-relation search
  std::size_t closure_max_degree = 15;   // orbit closure cross-check
  std::size_t census_max_degree = 15;    // exhaustive regular-set census
  std::size_t exhaustive_max_degree = 24;  // exhaustive search over unions of orbits
  std::size_t exhaustive_max_orbits = 12;
  std::uint64_t node_budget = 200'000'000;

  static ClassifyOptions fast() { return {false, 12, 12, 12, 16, 10, 50'000'000}; }
  static ClassifyOptions standard() { return {}; }
  static ClassifyOptions deep() { return {false, 24, 20, 24, 24, 16, default_node_budget}; }
};

namespace detail {

struct ListEntry {
  std::size_t degree;
  std::uint64_t order;
  const char* label;
};

/// Simple primitive groups without regular sets, by degree and order. Within
/// each degree the order singles out one group up to permutation isomorphism.
inline const std::vector<ListEntry>& no_regular_set_fingerprints() {
  static const std::vector<ListEntry> list{
      {6, 60, "L2(5)@6"},          {7, 168, "L3(2)@7"},       {8, 168, "L2(7)@8"},
      {9, 504, "L2(8)@9"},         {10, 360, "L2(9)@10"},     {11, 660, "L2(11)@11"},
      {11, 7920, "M11@11"},        {12, 7920, "M11@12"},      {12, 95040, "M12@12"},
      {13, 5616, "L3(3)@13"},      {15, 20160, "L4(2)@15"},   {22, 443520, "M22@22"},
      {23, 10200960, "M23@23"},    {24, 244823040, "M24@24"},
  };
  return list;
}

inline ComponentInfo recognise(const PermGroup& g, const PointSet& pts) {
  ComponentInfo c;
  c.points = pts;
  PermGroup h = restriction(g, pts);
  c.degree = h.degree();
  c.order = h.order();
  c.primitive = is_primitive(h);
  const std::size_t d = c.degree;
  if (d >= 3 && c.order * 2 == factorial(d)) {
    c.kind = ComponentKind::alternating;
    c.label = "A" + std::to_string(d);
    return c;
  }
  if (d == 5 && c.order == 5) {
    c.kind = ComponentKind::cyclic_five;
    c.label = "C5";
    return c;
  }
  if (c.primitive)
    for (const auto& e : no_regular_set_fingerprints())
      if (e.degree == d && c.order == e.order) {
        c.kind = d == 9 ? ComponentKind::psl28 : ComponentKind::list_member;
        c.label = e.label;
        return c;
      }
  c.kind = ComponentKind::other;
  c.label = (c.primitive ? "primitive " : "transitive ") + std::to_string(d) + "-point group of order " +
            c.order.str();
  return c;
}

/// Two transitive components give equivalent actions iff the stabilizer of a
/// point of the first fixes a point of the second.
inline bool equivalent_components(const PermGroup& g, const ComponentInfo& a, const ComponentInfo& b) {
  if (a.degree != b.degree) return false;
  PermGroup stab = pointwise_stabilizer(g, PointSet::of(g.degree(), std::vector<Point>{a.points.points().front()}));
  for (Point p : b.points.points())
    if (std::all_of(stab.generators().begin(), stab.generators().end(), [&](const Permutation& x) { return x[p] == p; }))
      return true;
  return false;
}

inline bool power_of_two_at_least(std::size_t r, std::size_t n) {
  return r >= 63 || (std::uint64_t{1} << r) >= n;
}

}  // namespace detail

/// Necessary conditions for simplicity: G is perfect (or of prime order) and
/// the normal closure of each generator, and of each product of two
/// generators, is G. Not a proof of simplicity.
inline bool looks_simple(const PermGroup& g) {
  if (g.is_trivial()) return false;
  const BigInt order = g.order();
  PermGroup derived = derived_subgroup(g);
  if (!(derived == g)) {
    if (derived.is_trivial()) {
      // Abelian: simple iff of prime order.
      for (BigInt p = 2; p * p <= order; ++p)
        if (order % p == 0) return false;
      return true;
    }
    return false;
  }
  const auto& gens = g.generators();
  std::vector<Permutation> probes(gens.begin(), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) probes.push_back(gens[i] * gens[j]);
  for (const auto& x : probes)
    if (!x.is_identity() && normal_closure(g, {x}).order() != order) return false;
  return true;
}

namespace detail {

/// Fills rule, bgr, bgr2, regular_set and structure from the components.
inline void apply_rules(const PermGroup& moved, ClassificationVerdict& v) {
  const auto& cs = v.components;
  const std::size_t r = cs.size();
  auto all_kind = [&](ComponentKind k) {
    return std::all_of(cs.begin(), cs.end(), [&](const ComponentInfo& c) { return c.kind == k; });
  };
  auto any_kind = [&](ComponentKind k) {
    return std::any_of(cs.begin(), cs.end(), [&](const ComponentInfo& c) { return c.kind == k; });
  };
  auto all_equivalent = [&] {
    for (std::size_t i = 1; i < r; ++i)
      if (!equivalent_components(moved, cs[0], cs[i])) return false;
    return true;
  };
  auto set = [&](std::string rule, bool bgr2, bool bgr, bool reg) {
    v.rule = std::move(rule);
    v.bgr2 = bgr2;
    v.bgr = bgr;
    v.regular_set = reg;
  };
  const std::string multiple = r == 1 ? cs[0].label : cs[0].label + "^(" + std::to_string(r) + ")";

  if (r == 1) {
    const auto& c = cs[0];
    v.structure = c.label;
    switch (c.kind) {
      case ComponentKind::alternating:
        // r = 1: BGR needs 2 >= n; a regular set needs 2 >= n - 1.
        set("alternating-natural", false, false, c.degree <= 3);
        return;
      case ComponentKind::cyclic_five: set("cyclic-five", false, false, true); return;
      case ComponentKind::psl28:
        set("projective-line-eight", false, false, false);
        v.notes.push_back("set-transitive: every k-set orbit is all k-sets");
        return;
      case ComponentKind::list_member: set("list-member-primitive", true, true, false); return;
      case ComponentKind::other:
        if (c.primitive)
          set("primitive-relation-group", true, true, true);
        else
          set("transitive-imprimitive", true, true, true);
        return;
    }
  }

  const bool none_in_bgr = std::all_of(cs.begin(), cs.end(), [](const ComponentInfo& c) {
    return c.kind == ComponentKind::alternating || c.kind == ComponentKind::cyclic_five ||
           c.kind == ComponentKind::psl28;
  });
  if (none_in_bgr) {
    if (!all_kind(cs[0].kind) ||
        !std::all_of(cs.begin(), cs.end(), [&](const ComponentInfo& c) { return c.degree == cs[0].degree; })) {
      // Only A6 has two inequivalent faithful actions of the same degree
      // among these, so mixed kinds do not occur for simple groups.
      v.rule = "unclassified";
      v.notes.push_back("components of different kinds outside every rule");
      return;
    }
    const std::size_t n = cs[0].degree;
    if (all_equivalent()) {
      v.structure = multiple;
      switch (cs[0].kind) {
        case ComponentKind::alternating: {
          const bool b = power_of_two_at_least(r, n);
          const bool reg = power_of_two_at_least(r, n - 1);
          set("alternating-parallel-multiple", b, b, reg);
          if (r < 63 && (std::uint64_t{1} << r) == n)
            v.notes.push_back("2^r = n: r < log2(n) fails, so this is the BGR(2) side of the bound");
          if (r < 63 && (std::uint64_t{1} << r) == n - 1)
            v.notes.push_back("2^r = n-1: r < log2(n-1) fails, so a regular set exists");
          return;
        }
        case ComponentKind::cyclic_five:
          set("cyclic-five-multiple", true, true, true);
          v.notes.push_back("parallel multiples of C5 are relation groups (imported result)");
          return;
        default:
          set("projective-line-eight-multiple", true, true, true);
          return;
      }
    }
    if (cs[0].kind == ComponentKind::alternating && n == 6) {
      v.structure = "A6 ||psi A6 (" + std::to_string(r) + " components)";
      set("twisted-alternating-sum", true, true, r != 2);
      return;
    }
    v.rule = "unclassified";
    v.notes.push_back("inequivalent components of a group with only permutation automorphisms");
    return;
  }

  if (any_kind(ComponentKind::other)) {
    v.structure = "parallel sum of " + std::to_string(r) + " components";
    set("parallel-sum-regular-component", true, true, true);
    return;
  }

  // Every component lacks a regular set and at least one is in BGR(2).
  if (all_kind(ComponentKind::list_member) &&
      std::all_of(cs.begin(), cs.end(), [&](const ComponentInfo& c) { return c.label == cs[0].label; })) {
    if (all_equivalent()) {
      v.structure = multiple;
      set("doubled-list-member", true, true, true);
    } else {
      v.structure = cs[0].label + " ||psi " + cs[0].label + " (" + std::to_string(r) + " components)";
      set("twisted-list-member", true, true, true);
    }
    return;
  }
  v.structure.clear();
  for (std::size_t i = 0; i < r; ++i) v.structure += (i ? " || " : "") + cs[i].label;
  set("pair-of-list-members", true, true, true);
}

/// Relations given by the constructions for parallel multiples, for groups
/// laid out exactly as the catalog builds them: A_n^(r) with 2^r >= n from the
/// Q-relation and the binary regular set, and PSL(2,8)^(2) from its printed
/// regular set and the complemented Q-relation.
inline std::optional<Relation> constructed_witness(const PermGroup& g, const ClassificationVerdict& v) {
  if (v.moved_degree != g.degree() || v.components.size() < 2) return std::nullopt;
  const std::size_t n = v.components[0].degree, r = v.components.size();
  if (v.rule == "alternating-parallel-multiple" && v.bgr2) {
    PermGroup target = parallel_multiple(alternating_group(n), r);
    if (!(target == g)) return std::nullopt;
    return relation_sies(parallel_multiple(symmetric_group(n), r), q_relation(n, r), binary_regular_set(n, r), g);
  }
  if (v.rule == "projective-line-eight-multiple" && r == 2) {
    if (!(parallel_multiple(catalog_group("L2(8)@9"), 2) == g)) return std::nullopt;
    for (const auto& row : doubled_rows())
      if (row.group == "L2(8)@9")
        return orbit_of_set(g, PointSet::from_one_based(18, row.y)) | q_relation(9, 2).complemented();
  }
  return std::nullopt;
}

inline std::optional<PointSet> regular_set_near_half(const PermGroup& g, std::size_t census_cap,
                                                     std::uint64_t budget) {
  const std::size_t n = g.degree();
  for (std::size_t step = 0; step <= n / 2; ++step)
    for (std::size_t k : {n / 2 - step, n - n / 2 + step}) {
      auto s = n <= census_cap ? find_regular_set(g, k, budget) : sample_regular_set(g, k, 200, 0x5eed + k);
      if (s) return s;
    }
  return std::nullopt;
}

}  // namespace detail

/// Decides BGR(2), BGR and regular-set existence for a simple group and
/// gathers what evidence the budget allows. Throws NotSimple when a proper
/// normal subgroup is detected (skipped with assume_simple).
inline ClassificationVerdict classify_simple(const PermGroup& g, const ClassifyOptions& opt = {}) {
  if (!opt.assume_simple && !looks_simple(g)) throw NotSimple(g.name() + " is not simple");
  ClassificationVerdict v;
  v.name = g.name();
  v.degree = g.degree();
  v.order = g.order();
  const PointSet moved_pts = moved_points(g);
  v.moved_degree = moved_pts.size();
  PermGroup moved = restriction(g, moved_pts);
  if (v.moved_degree < g.degree())
    v.notes.push_back("fixed points: " + std::to_string(g.degree() - v.moved_degree) +
                      "; the verdict is that of the group on the moved points");

  for (const auto& orb : moved.orbits())
    v.components.push_back(detail::recognise(moved, PointSet::of(moved.degree(), orb)));
  detail::apply_rules(moved, v);

  if (v.rule == "cyclic-five" && g.degree() - v.moved_degree == 1)
    v.notes.push_back("subgroup of PSL(2,5) on 6 points, which is a relation group");

  // Evidence for the verdict.
  const std::size_t n = g.degree();
  if (v.rule == "unclassified") {
    v.witness_status = "none";
  } else if (!v.bgr2) {
    v.witness_status = "none";
  } else {
    if (n <= default_refinement_cap) {
      try {
        if (auto rel = detail::constructed_witness(g, v)) {
          auto check = check_defining_relation(g, *rel);
          if (check.holds) {
            v.witness = std::move(*rel);
            v.witness_status = "verified:" + check.method + " (construction)";
          } else {
            v.notes.push_back("construction did not define the group");
          }
        }
      } catch (const PreconditionError& e) {
        v.notes.push_back(std::string("construction not applicable: ") + e.what());
      }
    }
    if (!v.witness && n <= opt.witness_max_degree) {
      DefiningSearchOptions so;
      so.node_budget = opt.node_budget;
      try {
        if (auto rel = find_defining_relation(g, so)) {
          auto check = check_defining_relation(g, *rel, std::nullopt, std::max(n, so.max_degree));
          if (check.holds) {
            v.witness = std::move(*rel);
            v.witness_status = "verified:" + check.method;
          }
        }
      } catch (const BudgetExceeded&) {
      }
    }
    if (!v.witness) v.witness_status = "verdict by theorem, witness unverified";
  }
  if (v.regular_set || n <= opt.census_max_degree) {
    try {
      v.regular_witness = detail::regular_set_near_half(g, opt.census_max_degree, default_census_budget);
    } catch (const BudgetExceeded&) {
    }
  }

  // Computed cross-checks.
  auto& c = v.computed;
  if (v.witness) {
    c.bgr2 = true;
    c.bgr = true;
    c.methods.push_back("bgr2: defining relation found and certified");
  }
  if (!c.bgr && n <= opt.closure_max_degree) {
    c.bgr = in_bgr(g, opt.closure_max_degree);
    c.methods.push_back("bgr: orbit closure on all subsets");
  }
  if (!c.bgr2 && n <= std::min(opt.exhaustive_max_degree, default_refinement_cap)) {
    try {
      auto rel = defining_relation_exhaustive(g, opt.exhaustive_max_orbits);
      c.bgr2 = rel.has_value();
      c.methods.push_back("bgr2: exhaustive search over unions of orbits");
    } catch (const BudgetExceeded&) {
    }
  }
  if (c.bgr2 == false && c.bgr == true)
    v.notes.push_back("computed: in BGR(k) for some k > 2 but not in BGR(2)");
  if (v.regular_witness) {
    c.regular_set = true;
    c.methods.push_back("regular set: witness found");
  } else if (n <= opt.census_max_degree) {
    c.regular_set = false;
    c.methods.push_back("regular set: full census, none at any size");
  }

  if (v.rule != "unclassified") {
    if (c.bgr && *c.bgr != v.bgr)
      v.conflicts.push_back(std::string("orbit closure says ") + (*c.bgr ? "in BGR" : "not in BGR"));
    if (c.bgr2 && *c.bgr2 != v.bgr2)
      v.conflicts.push_back(*c.bgr2 ? "a defining relation exists"
                                    : "no union of orbits on subsets defines the group, so it is not in BGR(2)");
    if (c.regular_set && *c.regular_set != v.regular_set)
      v.conflicts.push_back(*c.regular_set ? "a regular set exists" : "the census finds no regular set");
  }
  return v;
}

/// The classifier applied to a named catalog group.
inline ClassificationVerdict classify_catalog(std::string_view key, const ClassifyOptions& opt = {}) {
  return classify_simple(catalog_group(key), opt);
}

}  // namespace permrel
