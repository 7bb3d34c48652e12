#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permrel/classify.hpp"

using namespace permrel;

namespace {

struct Expected {
  const char* key;
  const char* rule;
  bool bgr2;
  bool regular;
};

// Verdicts of the case analysis; the L2(7)@8 row is the theorem verdict even
// though the computed cross-check disagrees (see ComputedConflictOnProjectiveLineOverSeven).
const Expected kExpected[] = {
    {"L2(5)@6", "list-member-primitive", true, false},
    {"L3(2)@7", "list-member-primitive", true, false},
    {"L2(7)@8", "list-member-primitive", true, false},
    {"L2(8)@9", "projective-line-eight", false, false},
    {"L2(9)@10", "list-member-primitive", true, false},
    {"M11@12", "list-member-primitive", true, false},
    {"15T5", "transitive-imprimitive", true, true},
    {"14T10", "transitive-imprimitive", true, true},
    {"A6xA6_twisted", "twisted-alternating-sum", true, false},
    {"A6^(2)xA6_twisted", "twisted-alternating-sum", true, true},
    {"L3(2)xL3(2)_twisted", "twisted-list-member", true, true},
    {"L2(5)||A5", "pair-of-list-members", true, true},
    {"L2(7)||L3(2)", "pair-of-list-members", true, true},
    {"C5+I1", "cyclic-five", false, true},
    {"A3", "alternating-natural", false, true},
    {"A5", "alternating-natural", false, false},
    {"A5^(2)", "alternating-parallel-multiple", false, true},
    {"A5^(3)", "alternating-parallel-multiple", true, true},
    {"A6^(2)", "alternating-parallel-multiple", false, false},
    {"A8^(3)", "alternating-parallel-multiple", true, true},
    {"A9^(3)", "alternating-parallel-multiple", false, true},
    {"C5^(2)", "cyclic-five-multiple", true, true},
    {"L2(8)@9^(2)", "projective-line-eight-multiple", true, true},
    {"L2(7)@8^(2)", "doubled-list-member", true, true},
    {"A5@10", "primitive-relation-group", true, true},
    {"C7", "primitive-relation-group", true, true},
    {"15T5^(2)", "parallel-sum-regular-component", true, true},
};

}  // namespace

TEST(Classify, RulesAndVerdicts) {
  for (const auto& e : kExpected) {
    auto v = classify_catalog(e.key, ClassifyOptions::fast());
    EXPECT_EQ(v.rule, e.rule) << e.key;
    EXPECT_EQ(v.bgr2, e.bgr2) << e.key;
    EXPECT_EQ(v.bgr, e.bgr2) << e.key;  // BGR = BGR(2) for simple groups
    EXPECT_EQ(v.regular_set, e.regular) << e.key;
    if (v.regular_witness) {
      EXPECT_TRUE(e.regular) << e.key;
      EXPECT_TRUE(is_regular_set(catalog_group(e.key), *v.regular_witness)) << e.key;
    }
  }
}

TEST(Classify, WitnessesDefineTheGroup) {
  for (const auto& e : kExpected) {
    auto v = classify_catalog(e.key, ClassifyOptions::fast());
    if (!v.witness) continue;
    PermGroup g = catalog_group(e.key);
    EXPECT_TRUE(v.witness->invariant_under(g)) << e.key;
    EXPECT_TRUE(symmetry_group_full(*v.witness) == g) << e.key;
    EXPECT_EQ(v.witness_status.rfind("verified:", 0), 0u) << e.key;
  }
  // The parallel-multiple constructions reach past the search cap.
  EXPECT_EQ(classify_catalog("A8^(3)", ClassifyOptions::fast()).witness_status, "verified:absolute (construction)");
  EXPECT_EQ(classify_catalog("L2(8)@9^(2)", ClassifyOptions::fast()).witness_status,
            "verified:absolute (construction)");
  EXPECT_EQ(classify_catalog("M22@22", ClassifyOptions::fast()).witness_status,
            "verdict by theorem, witness unverified");
}

TEST(Classify, ComputedChecksAgreeWithBruteForceClosure) {
  // Small groups: the orbit closure by brute force over S_n decides BGR.
  for (std::string key : {"A5", "C5", "C3", "A3^(2)", "L2(5)@6", "C5+I1"}) {
    PermGroup g = catalog_group(key);
    auto v = classify_simple(g, ClassifyOptions::standard());
    ASSERT_TRUE(v.computed.bgr.has_value()) << key;
    auto elts = oracle::elements(g.degree(), g.generators());
    std::map<PointSet, std::size_t> orbit;
    std::size_t next = 0;
    for (const auto& s : oracle::all_subsets(g.degree())) {
      if (orbit.count(s)) continue;
      for (const auto& x : elts) orbit.emplace(act_set(x, s), next);
      ++next;
    }
    std::size_t closure = 0;
    for (const auto& p : oracle::symmetric(g.degree())) {
      bool ok = true;
      for (const auto& [s, id] : orbit) ok = ok && orbit.at(act_set(p, s)) == id;
      closure += ok;
    }
    EXPECT_EQ(*v.computed.bgr, closure == elts.size()) << key;
    EXPECT_TRUE(v.conflicts.empty()) << key;
  }
}

TEST(Classify, ComputedConflictOnProjectiveLineOverSeven) {
  auto v = classify_catalog("L2(7)@8", ClassifyOptions::standard());
  EXPECT_TRUE(v.bgr2);
  ASSERT_TRUE(v.computed.bgr2.has_value());
  EXPECT_FALSE(*v.computed.bgr2);
  ASSERT_TRUE(v.computed.bgr.has_value());
  EXPECT_TRUE(*v.computed.bgr);
  ASSERT_EQ(v.conflicts.size(), 1u);
  EXPECT_FALSE(v.witness.has_value());
  // The same group with a fixed point, and doubled, does have defining relations.
  EXPECT_TRUE(classify_catalog("L2(7)@8+I1", ClassifyOptions::fast()).witness.has_value());
  EXPECT_TRUE(classify_catalog("L2(7)@8^(2)", ClassifyOptions::standard()).witness.has_value());
}

TEST(Classify, NoConflictsElsewhereWithinBudget) {
  for (const auto& e : kExpected) {
    if (std::string(e.key) == "L2(7)@8") continue;
    auto v = classify_catalog(e.key, ClassifyOptions::fast());
    EXPECT_TRUE(v.conflicts.empty()) << e.key << ": " << (v.conflicts.empty() ? "" : v.conflicts.front());
  }
}

TEST(Classify, BoundaryNotes) {
  auto has_note = [](const ClassificationVerdict& v, const std::string& prefix) {
    return std::any_of(v.notes.begin(), v.notes.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
  };
  EXPECT_TRUE(has_note(classify_catalog("A8^(3)", ClassifyOptions::fast()), "2^r = n:"));
  EXPECT_TRUE(has_note(classify_catalog("A5^(2)", ClassifyOptions::fast()), "2^r = n-1:"));
  EXPECT_TRUE(has_note(classify_catalog("A9^(3)", ClassifyOptions::fast()), "2^r = n-1:"));
  EXPECT_FALSE(has_note(classify_catalog("A7^(3)", ClassifyOptions::fast()), "2^r"));
}

TEST(Classify, FixedPointsAreStripped) {
  auto v = classify_catalog("A5+I2", ClassifyOptions::fast());
  EXPECT_EQ(v.degree, 7u);
  EXPECT_EQ(v.moved_degree, 5u);
  EXPECT_EQ(v.rule, "alternating-natural");
  auto w = classify_catalog("L2(7)@8+I1", ClassifyOptions::fast());
  EXPECT_EQ(w.rule, "list-member-primitive");
  EXPECT_FALSE(w.regular_set);
}

TEST(Classify, CyclicFiveWithAFixedPointInsideProjectiveLineOverFive) {
  PermGroup sub = catalog_group("C5+I1");
  PermGroup over = catalog_group("L2(5)@6");
  auto v = classify_simple(sub, ClassifyOptions::standard());
  EXPECT_FALSE(v.bgr);
  ASSERT_TRUE(v.computed.bgr.has_value());
  EXPECT_FALSE(*v.computed.bgr);
  EXPECT_TRUE(in_bgr(over));
  // An element of order 5 in PSL(2,5) fixes one point and generates a copy of C5+I1.
  bool found = false;
  for (const auto& x : over.elements()) {
    if (x.order() != 5) continue;
    PermGroup c(6, {x});
    EXPECT_TRUE(c.is_subgroup_of(over));
    EXPECT_TRUE(permutation_isomorphism(c, sub).has_value());
    found = true;
    break;
  }
  EXPECT_TRUE(found);
}

TEST(Classify, RejectsNonSimpleGroups) {
  for (std::string key : {"K4", "S5", "C6", "L2(5)+S5", "M12xM12_T", "A4", "D5"})
    EXPECT_THROW(classify_catalog(key, ClassifyOptions::fast()), NotSimple) << key;
  EXPECT_THROW(classify_simple(PermGroup::trivial(3)), NotSimple);
  // assume_simple skips the check; the components then decide.
  ClassifyOptions opt = ClassifyOptions::fast();
  opt.assume_simple = true;
  EXPECT_NO_THROW(classify_catalog("C6", opt));
}

TEST(Classify, SimplicityCheckAgainstBruteForce) {
  // Oracle: a group is simple iff every nontrivial conjugacy-closed subgroup
  // generated by a class is the whole group (small groups, all elements).
  for (std::string key : {"A5", "C5", "C6", "S4", "A4", "D5", "K4", "L3(2)@7", "C7", "L2(5)@6", "S5"}) {
    PermGroup g = catalog_group(key);
    auto elts = g.elements();
    bool simple = elts.size() > 1;
    for (const auto& x : elts) {
      if (x.is_identity()) continue;
      std::vector<Permutation> cls;
      for (const auto& y : elts) cls.push_back(x.conjugate_by(y));
      if (PermGroup(g.degree(), cls).order() != g.order()) simple = false;
    }
    EXPECT_EQ(looks_simple(g), simple) << key;
  }
}
