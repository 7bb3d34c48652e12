#pragma once

// Named groups: the primitive groups without regular sets, the imprimitive
// and intransitive examples built on them, and parametric families.
//
// Points are 1-based in all cycle strings. A primed point i' of an n-point
// copy is stored as n+i, a double primed one as 2n+i.
//
// Keys:
//   fixed keys      see catalog_keys()
//   S<n> A<n> C<n> D<n>   natural actions, optionally written with "@<n>"
//   A<n>@<m>        A_n on k-subsets where m = C(n,k), smallest such k
//   <key>^(r)       parallel multiple
//   <key>+I<m>      m added fixed points

#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <regex>
#include <string>
#include <vector>

#include "builders.hpp"

namespace permrel {

struct CatalogEntry {
  std::string key;
  std::string about;
  std::string order;  // decimal
  std::function<PermGroup()> make;
};

/// A printed regular set y of H^(2) (one per row of the doubled-group table).
struct DoubledRow {
  std::string group;  // key of H; the group checked is H^(2)
  std::vector<int> y;
};

/// A parallel sum of two non-isomorphic permutation groups with a set x whose
/// orbit defines it inside the overgroup, and a regular set y.
struct PairRow {
  std::string group;
  std::string overgroup;
  std::size_t first_orbit;  // |Omega_1|; Omega_1 = {1..first_orbit}
  std::vector<int> x;
  std::vector<int> y_complement;  // y = Omega minus these points
};

namespace detail {

inline PermGroup printed(std::size_t n, std::vector<std::string> gens, std::string name) {
  return PermGroup::from_cycles(n, gens, std::move(name));
}

/// Generators (a_i, b_i) on n1 + n2 points from cycle strings on each part.
inline PermGroup paired(std::size_t n1, const std::vector<std::string>& a, std::size_t n2,
                        const std::vector<std::string>& b, std::string name) {
  const std::size_t n = n1 + n2;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < a.size(); ++i)
    gens.push_back(Permutation::from_cycles(a[i], n1).shifted(n, 0) *
                   Permutation::from_cycles(b[i], n2).shifted(n, n1));
  return PermGroup(n, gens, std::move(name));
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string key, std::string about, std::string order, std::function<PermGroup()> make) {
    c.push_back({std::move(key), std::move(about), std::move(order), std::move(make)});
  };

  // Simple primitive groups with no regular set.
  add("L2(5)@6", "PSL(2,5) = A5 on the projective line", "60",
      [] { return printed(6, {"(1,2,5)(3,4,6)", "(3,5)(4,6)"}, "L2(5)@6"); });
  add("L3(2)@7", "PSL(3,2) on points of the Fano plane", "168",
      [] { return printed(7, {"(1,4)(6,7)", "(1,3,2)(4,7,5)"}, "L3(2)@7"); });
  add("L2(7)@8", "PSL(2,7) on the projective line", "168",
      [] { return printed(8, {"(3,7,8)(4,6,5)", "(1,4,2,5,7,8,6)"}, "L2(7)@8"); });
  add("L2(8)@9", "PSL(2,8) on the projective line; set-transitive", "504",
      [] { return printed(9, {"(1,5,4,2,8,3,6)", "(1,8,6,2,7,3,9)"}, "L2(8)@9"); });
  add("L2(9)@10", "PSL(2,9) = A6 on the projective line", "360",
      [] { return printed(10, {"(1,9,6,3,8)(2,10,7,5,4)", "(1,10,6,2,5)(3,4,9,8,7)"}, "L2(9)@10"); });
  add("L2(11)@11", "PSL(2,11) on 11 points", "660",
      [] { return printed(11, {"(1,5)(2,4)(3,10)(7,11)", "(3,11,5)(4,7,9)(6,8,10)"}, "L2(11)@11"); });
  add("M11@11", "Mathieu group M11, natural action", "7920",
      [] { return printed(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}, "M11@11"); });
  add("M11@12", "Mathieu group M11 on 12 points", "7920",
      [] { return printed(12, {"(1,12)(2,10,5,7)(3,8)(4,6,11,9)", "(1,3)(2,7)(8,11)(9,10)"}, "M11@12"); });
  add("M12@12", "Mathieu group M12, natural action", "95040",
      [] { return printed(12, {"(1,4,12,6)(2,7,5,9,8,10,3,11)", "(1,12)(2,6,4,9,7,8,11,3)"}, "M12@12"); });
  add("L3(3)@13", "PSL(3,3) on points of the projective plane", "5616",
      [] { return printed(13, {"(1,10,4)(6,9,7)(8,12,13)", "(1,3,2)(4,9,5)(7,8,12)(10,13,11)"}, "L3(3)@13"); });
  // The second generator includes the 3-cycle (7,10,13); without it the two
  // permutations generate a much larger group.
  add("L4(2)@15", "PSL(4,2) = A8 on points of PG(3,2)", "20160", [] {
    return printed(15, {"(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)", "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)"},
                   "L4(2)@15");
  });
  add("M22@22", "Mathieu group M22, natural action", "443520", [] {
    return printed(22,
                   {"(1,13,11,17)(2,7)(3,22,12,21)(4,18,16,10)(6,20,19,14)(9,15)",
                    "(1,6,12,11,14,5,22)(2,19,16,9,13,21,8)(3,17,18,15,7,4,10)"},
                   "M22@22");
  });
  add("M23@23", "Mathieu group M23, natural action", "10200960", [] {
    return printed(23,
                   {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
                    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"},
                   "M23@23");
  });
  add("M24@24", "Mathieu group M24, natural action", "244823040", [] {
    return printed(24,
                   {"(1,5)(2,14,7,12)(3,21)(4,17,16,11)(6,20,23,22)(9,10,15,13)",
                    "(1,19,15,8,20,23,24,9,14,11,5,10,22,13,2)(3,6,4)(7,16,12,17,18)"},
                   "M24@24");
  });

  // Transitive imprimitive examples.
  add("15T5", "A5 on the cosets of a Klein four-group", "60", [] {
    return printed(15, {"(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)", "(1,4,10)(2,5,8)(3,7,11)(6,9,15)(12,14,13)"},
                   "15T5");
  });
  add("14T10", "PSL(3,2) on the cosets of an index-2 subgroup of a point stabilizer", "168", [] {
    return printed(14, {"(1,5,9,13,3,7,11)(2,6,10,14,4,8,12)", "(1,10,6,14,11,9,12)(2,5,8,3,13,7,4)"}, "14T10");
  });

  // Parallel sums twisted by a non-permutation automorphism.
  add("A6xA6_twisted", "A6 ||_psi A6, psi the exceptional outer automorphism", "360",
      [] { return printed(12, {"(2,3)(4,5)(8,11)(9,10)", "(1,2,3,4)(5,6)(7,8,9,10)(11,12)"}, "A6xA6_twisted"); });
  add("A6^(2)xA6_twisted", "A6^(2) ||_psi A6", "360", [] {
    return printed(18, {"(2,3)(4,5)(8,11)(9,10)(14,17)(15,16)", "(1,2,3,4)(5,6)(7,8,9,10)(11,12)(13,14,15,16)(17,18)"},
                   "A6^(2)xA6_twisted");
  });
  add("L3(2)xL3(2)_twisted", "PSL(3,2) ||_psi PSL(3,2)", "168", [] {
    return paired(7, {"(1,2)(5,7)", "(2,3,4,7)(5,6)"}, 7, {"(1,2)(3,6)", "(2,3,4,7)(5,6)"}, "L3(2)xL3(2)_twisted");
  });
  add("L2(11)xL2(11)_twisted", "PSL(2,11) ||_psi PSL(2,11)", "660", [] {
    return paired(11, {"(1,3)(2,7)(5,9)(6,11)", "(3,5,11)(4,9,7)(6,10,8)"}, 11,
                  {"(1,4)(2,3)(5,10)(9,11)", "(3,5,11)(4,9,7)(6,10,8)"}, "L2(11)xL2(11)_twisted");
  });
  add("L3(3)xL3(3)_twisted", "PSL(3,3) ||_psi PSL(3,3)", "5616", [] {
    return paired(13, {"(3,5,11)(6,7,9)(8,12,13)", "(1,13,7)(2,10,6)(3,5,12)(4,11,9)"}, 13,
                  {"(3,8,7)(5,12,9)(6,11,13)", "(1,13,7)(2,10,6)(3,5,12)(4,11,9)"}, "L3(3)xL3(3)_twisted");
  });
  add("L4(2)xL4(2)_twisted", "PSL(4,2) ||_psi PSL(4,2)", "20160", [] {
    return paired(15, {"(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)", "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)"}, 15,
                  {"(1,4,2,14,13,7,8)(3,10,15,9,5,6,12)", "(1,2,3)(4,14,10)(5,12,9)(6,13,11)(7,15,8)"},
                  "L4(2)xL4(2)_twisted");
  });
  add("M12xM12_twisted", "M12 ||_psi M12 on 24 points", "95040", [] {
    return printed(24,
                   {"(1,19,17,23,2,4,8,9)(6,16,21,22)(3,12)(5,24,15,7,18,10,20,13)",
                    "(1,23,8,19,9,6,4,21,16,22,2)(3,14,12,7,11,20,13,5,15,24,10)"},
                   "M12xM12_twisted");
  });
  add("M12xM12_T", "transitive group between M12 ||_psi M12 and M24", "190080", [] {
    return printed(24,
                   {"(1,16,23,19,9,21,2,4)(5,15,12,10,18,24,14,20)(6,8,22,17)(7,13)",
                    "(1,5)(2,11)(3,22)(4,15)(6,10)(7,23)(8,24)(9,14)(12,21)(13,19)(16,20)(17,18)"},
                   "M12xM12_T");
  });

  // Parallel sums of abstractly isomorphic, permutationally different groups.
  add("L2(5)||A5", "PSL(2,5) on 6 points in parallel with A5 on 5", "60",
      [] { return printed(11, {"(1,3,4)(2,5,6)(8,9,11)", "(1,2)(3,4)(7,8)(9,10)"}, "L2(5)||A5"); });
  add("L2(5)+S5", "PSL(2,5) on 6 points plus S5", "7200", [] {
    return printed(11, {"(1,3,4)(2,5,6)", "(1,2)(3,4)", "(7,8,9,10,11)", "(7,8)"}, "L2(5)+S5");
  });
  add("L2(7)||L3(2)", "PSL(2,7) on 8 points in parallel with PSL(3,2) on 7", "168", [] {
    return printed(15, {"(1,6,5)(2,3,7)(9,11,10)(12,15,13)", "(1,4)(2,7)(3,5)(6,8)(9,12)(14,15)"}, "L2(7)||L3(2)");
  });
  add("L2(7)+L3(2)", "PSL(2,7) on 8 points plus PSL(3,2) on 7", "28224", [] {
    return printed(15, {"(1,6,5)(2,3,7)", "(9,11,10)(12,15,13)", "(1,4)(2,7)(3,5)(6,8)", "(9,12)(14,15)"},
                   "L2(7)+L3(2)");
  });
  // The printed pair repeats the first generator's 10-point part in the
  // second generator, which generates a group of order 1800. The second
  // 10-point part used here is the least (by image sequence) element of
  // L2(9)@10 that makes the pairing an isomorphism and keeps the printed x
  // defining and its complement regular.
  add("L2(9)||A6", "PSL(2,9) on 10 points in parallel with A6 on 6", "360", [] {
    return printed(16, {"(1,5,3,9,6)(2,7,8,4,10)(11,12,13,14,15)", "(1,5,7,2,3)(4,10,8,6,9)(11,13,14,15,16)"},
                   "L2(9)||A6");
  });
  add("L2(9)+S6", "PSL(2,9) on 10 points plus S6", "259200", [] {
    return direct_sum(printed(10, {"(1,9,6,3,8)(2,10,7,5,4)", "(1,10,6,2,5)(3,4,9,8,7)"}, ""), symmetric_group(6))
        .named("L2(9)+S6");
  });
  add("M11@12||M11", "M11 on 12 points in parallel with M11 on 11", "7920", [] {
    return printed(23,
                   {"(1,12)(2,10,5,7)(3,8)(4,6,11,9)(13,21,17,19)(16,20,23,18)",
                    "(1,3)(2,7)(8,11)(9,10)(14,16)(15,18)(19,22)(21,23)"},
                   "M11@12||M11");
  });
  add("M11@12+M11", "M11 on 12 points plus M11 on 11", "62726400", [] {
    PermGroup pair = printed(23,
                             {"(1,12)(2,10,5,7)(3,8)(4,6,11,9)(13,21,17,19)(16,20,23,18)",
                              "(1,3)(2,7)(8,11)(9,10)(14,16)(15,18)(19,22)(21,23)"},
                             "");
    PointSet first(23), second(23);
    for (Point p = 0; p < 23; ++p) (p < 12 ? first : second).insert(p);
    return direct_sum(restriction(pair, first), restriction(pair, second)).named("M11@12+M11");
  });
  add("L4(2)||A8", "PSL(4,2) on 15 points in parallel with A8 on 8", "20160", [] {
    return printed(23,
                   {"(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)(16,17,18,19,20,21,22)",
                    "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)(21,22,23)"},
                   "L4(2)||A8");
  });
  add("L4(2)+S8", "PSL(4,2) on 15 points plus S8", "812851200", [] {
    return direct_sum(printed(15, {"(1,9,5,14,13,2,6)(3,15,4,7,8,12,11)", "(1,3,2)(4,8,12)(5,11,14)(6,9,15)(7,10,13)"},
                              ""),
                      symmetric_group(8))
        .named("L4(2)+S8");
  });

  // Small groups used in statements and counterexamples.
  add("K4", "Klein four-group, regular action", "4", [] { return klein_four(); });
  add("C5+I1", "C5 with one fixed point", "5", [] { return add_fixed_points(cyclic_group(5), 1).named("C5+I1"); });
  return c;
}

inline std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::string> catalog_keys() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.push_back(e.key);
  return out;
}

/// The 14 groups of the list of simple primitive groups without regular sets.
inline const std::vector<std::string>& no_regular_set_keys() {
  static const std::vector<std::string> keys{"L2(5)@6",   "L3(2)@7",  "L2(7)@8",  "L2(8)@9", "L2(9)@10",
                                             "L2(11)@11", "M11@11",   "M11@12",   "M12@12",  "L3(3)@13",
                                             "L4(2)@15",  "M22@22",   "M23@23",   "M24@24"};
  return keys;
}

inline const std::vector<DoubledRow>& doubled_rows() {
  static const std::vector<DoubledRow> rows{
      {"L2(5)@6", {1, 2, 3, 8, 10, 12}},
      {"L3(2)@7", {1, 2, 3, 10, 12}},
      {"L2(7)@8", {1, 2, 10, 15}},
      {"L2(8)@9", {1, 2, 3, 4, 11, 12, 13, 14}},
      {"L2(9)@10", {1, 2, 13, 15}},
      {"L2(11)@11", {1, 2, 14, 16, 17}},
      {"M11@11", {1, 2, 3, 12, 16, 18}},
      {"M11@12", {1, 2, 3, 4, 13, 16, 19}},
      {"M12@12", {1, 2, 3, 4, 11, 13, 14, 17, 20, 21}},
      {"L3(3)@13", {1, 2, 3, 4, 14, 20, 22}},
      {"L4(2)@15", {1, 2, 3, 4, 5, 6, 9, 16, 22, 23, 26, 30}},
      {"M22@22", {1, 2, 3, 4, 7, 9, 23, 25, 30}},
      {"M23@23", {1, 2, 3, 4, 9, 12, 24, 33, 40}},
      {"M24@24", {1, 2, 3, 5, 11, 13, 19, 25, 28, 38, 42, 48}},
  };
  return rows;
}

inline const std::vector<PairRow>& pair_rows() {
  static const std::vector<PairRow> rows{
      {"L2(5)||A5", "L2(5)+S5", 6, {1, 3, 7, 9}, {1, 3, 7, 9}},
      {"L2(7)||L3(2)", "L2(7)+L3(2)", 8, {1, 3, 5, 10, 12, 14}, {1, 3, 5, 10, 12, 14}},
      {"L2(9)||A6", "L2(9)+S6", 10, {1, 3, 13, 15}, {1, 3, 13, 15}},
      {"M11@12||M11", "M11@12+M11", 12, {1, 3, 7, 9, 11, 14, 18}, {1, 3, 7, 9, 11, 14, 18}},
      {"L4(2)||A8", "L4(2)+S8", 15, {1, 2, 20, 21}, {1, 4, 7, 8, 18, 20, 23}},
  };
  return rows;
}

/// Named group lookup. Throws UnknownName.
inline PermGroup catalog_group(std::string_view key) {
  static std::mutex mu;
  static std::map<std::string, PermGroup, std::less<>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::string k(key);
  auto remember = [&](PermGroup g) {
    std::lock_guard lock(mu);
    return cache.emplace(k, g.named(k)).first->second;
  };
  for (const auto& e : catalog_entries())
    if (e.key == key) return remember(e.make());
  if (key == "PSL28@9") return remember(catalog_group("L2(8)@9"));

  static const std::regex fixed(R"((.+)\+I(\d+))"), multiple(R"((.+)\^\((\d+)\))"),
      family(R"(([SACD])(\d+)(?:@(\d+))?)");
  std::smatch m;
  if (std::regex_match(k, m, fixed)) {
    auto extra = detail::parse_size(m[2].str());
    if (extra) return remember(add_fixed_points(catalog_group(m[1].str()), *extra));
  }
  if (std::regex_match(k, m, multiple)) {
    auto r = detail::parse_size(m[2].str());
    if (r && *r >= 1) return remember(parallel_multiple(catalog_group(m[1].str()), *r));
  }
  if (std::regex_match(k, m, family)) {
    auto n = detail::parse_size(m[2].str());
    if (n && *n >= 1 && *n <= PointSet::max_degree) {
      char f = m[1].str()[0];
      std::size_t deg = m[3].matched ? detail::parse_size(m[3].str()).value_or(0) : *n;
      if (deg == *n) {
        switch (f) {
          case 'S': return remember(symmetric_group(*n));
          case 'A': return remember(alternating_group(*n));
          case 'C': return remember(cyclic_group(*n));
          case 'D': if (*n >= 3) return remember(dihedral_group(*n)); break;
        }
      } else if (f == 'A' && deg <= PointSet::max_degree) {
        BigInt binom = 1;
        for (std::size_t j = 1; j < *n; ++j) {
          binom = binom * (*n - j + 1) / j;
          if (binom == deg) return remember(subset_action(alternating_group(*n), j));
          if (binom > deg) break;
        }
      }
    }
  }
  throw UnknownName(k);
}

}  // namespace permrel
