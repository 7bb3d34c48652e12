#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permrel/blocks.hpp"
#include "permrel/symmetry.hpp"

using namespace permrel;

namespace {

PermGroup make(std::size_t n, std::vector<std::string> g) { return PermGroup::from_cycles(n, g); }

const std::vector<std::string> t15 = {"(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)",
                                      "(1,4,10)(2,5,8)(3,7,11)(6,9,15)(12,14,13)"};
const std::vector<std::string> t14 = {"(1,5,9,13,3,7,11)(2,6,10,14,4,8,12)",
                                      "(1,10,6,14,11,9,12)(2,5,8,3,13,7,4)"};

Relation random_relation(std::size_t n, std::mt19937& rng) {
  std::vector<PointSet> sets;
  std::size_t m = rng() % 8;
  for (std::size_t i = 0; i < m; ++i) sets.push_back(PointSet::from_mask(n, rng() & ((1u << n) - 1)));
  return Relation(n, sets);
}

Relation relation_15t5(const PermGroup& t) {
  auto blocks = *minimal_block_system(t);
  Relation r(15, blocks);
  r = r | orbit_of_set(t, PointSet::from_one_based(15, {1, 2}));
  r = r | orbit_of_set(t, PointSet::from_one_based(15, {1, 2, 4}).complement());
  return r;
}

}  // namespace

TEST(Relation, CanonicalOrderAndArity) {
  Relation r(4, {PointSet::from_one_based(4, {2, 3}), PointSet::from_one_based(4, {1}),
                 PointSet::from_one_based(4, {2, 3}), PointSet::from_one_based(4, {1, 4})});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.sets()[0], PointSet::from_one_based(4, {1}));
  EXPECT_EQ(r.sets()[1], PointSet::from_one_based(4, {1, 4}));
  EXPECT_EQ(r.arity(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r | Relation(4), r);
}

TEST(Relation, OrbitOfSet) {
  auto s3 = make(3, {"(1,2,3)", "(1,2)"});
  EXPECT_EQ(orbit_of_set(s3, PointSet(3)).size(), 1u);
  EXPECT_EQ(orbit_of_set(s3, PointSet::from_one_based(3, {1})), singletons(3));
  auto t = make(15, t15);
  auto orb = orbit_of_set(t, PointSet::from_one_based(15, {1, 2}));
  EXPECT_EQ(60 % orb.size(), 0u);
}

TEST(SymmetryGroup, TrivialFamilies) {
  EXPECT_EQ(symmetry_group_full(Relation(6)).order(), 720);
  EXPECT_EQ(symmetry_group_full(singletons(7)).order(), 5040);
  auto s4 = symmetric_group(4);
  auto st = symmetry_group_in(s4, Relation(4, {PointSet::from_one_based(4, {1, 2})}));
  EXPECT_EQ(st.order(), 4);
  EXPECT_TRUE(st.contains(Permutation::from_cycles("(1,2)", 4)));
  EXPECT_TRUE(st.contains(Permutation::from_cycles("(3,4)", 4)));
}

TEST(SymmetryGroup, FifteenPointRelation) {
  auto t = make(15, t15);
  Relation r = relation_15t5(t);
  auto g = symmetry_group_full(r);
  EXPECT_EQ(g.order(), 60);
  EXPECT_EQ(g, t);
  auto blocks = *minimal_block_system(t);
  auto wreath = partition_group(blocks);
  EXPECT_EQ(wreath.order(), BigInt(6 * 6 * 6 * 6 * 6) * 120);
  Relation r12 = r.without_cardinality(3);
  EXPECT_EQ(symmetry_group_in(wreath, r12).order(), 60);
  EXPECT_TRUE(is_defining_relation(t, r));
}

TEST(SymmetryGroup, FourteenPointRelation) {
  auto t = make(14, t14);
  std::vector<PointSet> blocks;
  for (int i = 1; i <= 7; ++i) blocks.push_back(PointSet::from_one_based(14, {i, i + 7}));
  Relation r = Relation(14, blocks) | orbit_of_set(t, PointSet::from_one_based(14, {1, 2, 3, 4}));
  auto g = symmetry_group_full(r);
  EXPECT_EQ(g.order(), 168);
  EXPECT_EQ(g, t);
}

TEST(SymmetryGroup, EnginesAgreeWithBruteForce) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + rng() % 6;
    Relation r = random_relation(n, rng);
    std::size_t expected = oracle::symmetry_order(n, r.sets());
    auto full = symmetry_group_full(r);
    ASSERT_EQ(full.order(), expected) << trial;
    EXPECT_TRUE(r.invariant_under(full));
    EXPECT_EQ(symmetry_group_in(symmetric_group(n), r).order(), expected);
    EXPECT_EQ(symmetry_group_full(r.complemented()).order(), expected);
  }
}

TEST(SymmetryGroup, RelativeEqualsAbsoluteUpToDegreeNine) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 6 + rng() % 4;
    std::vector<PointSet> sets;
    std::size_t m = 2 + rng() % 10;
    for (std::size_t i = 0; i < m; ++i) {
      PointSet s(n);
      std::size_t k = 1 + rng() % 3;
      for (std::size_t j = 0; j < k; ++j) s.insert(static_cast<Point>(rng() % n));
      sets.push_back(s);
    }
    Relation r(n, sets);
    auto full = symmetry_group_full(r);
    auto rel = symmetry_group_in(symmetric_group(n), r);
    EXPECT_EQ(full, rel);
  }
}

TEST(SymmetryGroup, CapIsEnforced) {
  EXPECT_THROW(symmetry_group_full(Relation(25)), BudgetExceeded);
  EXPECT_EQ(symmetry_group_full(Relation(25), 25).order(), symmetric_group(25).order());
}

TEST(Homogeneity, Examples) {
  EXPECT_TRUE(k_homogeneous(symmetric_group(6), 3));
  EXPECT_TRUE(set_transitive(make(9, {"(1,5,4,2,8,3,6)", "(1,8,6,2,7,3,9)"})));
  EXPECT_FALSE(k_homogeneous(make(5, {"(1,2,3,4,5)"}), 2));
  EXPECT_FALSE(set_transitive(make(5, {"(1,2,3,4,5)"})));
  EXPECT_TRUE(set_transitive(make(5, {"(1,2,3)", "(3,4,5)"})));
}
