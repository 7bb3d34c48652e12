#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permrel/blocks.hpp"
#include "permrel/stabilizers.hpp"

using namespace permrel;

namespace {

PermGroup make(std::size_t n, std::vector<std::string> g) { return PermGroup::from_cycles(n, g); }

const std::vector<std::string> t15 = {"(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)",
                                      "(1,4,10)(2,5,8)(3,7,11)(6,9,15)(12,14,13)"};
const std::vector<std::string> t14 = {"(1,5,9,13,3,7,11)(2,6,10,14,4,8,12)",
                                      "(1,10,6,14,11,9,12)(2,5,8,3,13,7,4)"};

std::vector<Permutation> random_gens(std::size_t n, std::mt19937& rng) {
  std::vector<Permutation> gens;
  std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    std::size_t swaps = 1 + rng() % 3;
    for (std::size_t s = 0; s < swaps; ++s) std::swap(img[rng() % n], img[rng() % n]);
    gens.emplace_back(img);
  }
  return gens;
}

}  // namespace

TEST(SetwiseStabilizer, FullDomainGivesGroup) {
  auto g = make(15, t15);
  EXPECT_EQ(setwise_stabilizer(g, PointSet::full(15)), g);
}

TEST(SetwiseStabilizer, S3FixingOnePoint) {
  auto s3 = make(3, {"(1,2,3)", "(1,2)"});
  auto st = setwise_stabilizer(s3, PointSet::from_one_based(3, {1}));
  EXPECT_EQ(st.order(), 2);
  EXPECT_TRUE(st.contains(Permutation::from_cycles("(2,3)", 3)));
}

TEST(SetwiseStabilizer, RegularSetInL25Squared) {
  // L2(5) on 6 points, acting in parallel on two copies.
  auto g = make(12, {"(1,2,5)(3,4,6)(7,8,11)(9,10,12)", "(3,5)(4,6)(9,11)(10,12)"});
  ASSERT_EQ(g.order(), 60);
  auto y = PointSet::from_one_based(12, {1, 2, 3, 8, 10, 12});
  EXPECT_TRUE(setwise_stabilizer(g, y).is_trivial());
  EXPECT_TRUE(is_regular_set(g, y));
  EXPECT_TRUE(is_regular_set(g, y.complement()));
}

TEST(SetwiseStabilizer, AgreesWithBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 3 + rng() % 5;
    auto gens = random_gens(n, rng);
    PermGroup g(n, gens);
    auto elts = oracle::elements(n, gens);
    PointSet s = PointSet::from_mask(n, rng() & ((1u << n) - 1));
    auto expected = oracle::set_stabilizer(elts, s);
    auto st = setwise_stabilizer(g, s);
    ASSERT_EQ(st.order(), expected.size()) << s;
    for (auto& e : expected) EXPECT_TRUE(st.contains(e));
    EXPECT_EQ(is_regular_set(g, s), expected.size() == 1);
  }
}

TEST(PointwiseStabilizer, Basics) {
  auto s4 = make(4, {"(1,2,3,4)", "(1,2)"});
  EXPECT_EQ(pointwise_stabilizer(s4, PointSet(4)), s4);
  auto st = pointwise_stabilizer(s4, PointSet::from_one_based(4, {4}));
  EXPECT_EQ(st.order(), 6);
  EXPECT_EQ(st.fixed_points(), std::vector<Point>{3});
  // Parallel sum: fixing one component fixes everything.
  auto par = make(11, {"(1,3,4)(2,5,6)(8,9,11)", "(1,2)(3,4)(7,8)(9,10)"});
  EXPECT_TRUE(pointwise_stabilizer(par, PointSet::from_one_based(11, {1, 2, 3, 4, 5, 6})).is_trivial());
}

TEST(PointwiseStabilizer, AgreesWithBruteForce) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng() % 5;
    auto gens = random_gens(n, rng);
    PermGroup g(n, gens);
    auto elts = oracle::elements(n, gens);
    PointSet s = PointSet::from_mask(n, rng() & ((1u << n) - 1));
    std::size_t expected = 0;
    for (auto& e : elts) {
      bool fix = true;
      for (Point p : s.points()) fix = fix && e[p] == p;
      expected += fix;
    }
    EXPECT_EQ(pointwise_stabilizer(g, s).order(), expected);
  }
}

TEST(Blocks, FifteenPointGroup) {
  auto blocks = minimal_block_system(make(15, t15));
  ASSERT_TRUE(blocks);
  std::vector<std::string> text;
  for (auto& b : *blocks) text.push_back(b.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"{1,6,8}", "{2,4,9}", "{3,7,11}", "{5,10,15}", "{12,13,14}"}));
  EXPECT_TRUE(is_block_system(make(15, t15), *blocks));
}

TEST(Blocks, FourteenPointGroup) {
  auto g = make(14, t14);
  auto blocks = minimal_block_system(g);
  ASSERT_TRUE(blocks);
  ASSERT_EQ(blocks->size(), 7u);
  for (int i = 1; i <= 7; ++i) EXPECT_EQ((*blocks)[i - 1], PointSet::from_one_based(14, {i, i + 7}));
  EXPECT_TRUE(is_block_system(g, *blocks));
}

TEST(Blocks, PrimitiveGroups) {
  EXPECT_FALSE(minimal_block_system(make(5, {"(1,2,3)", "(3,4,5)"})));
  EXPECT_FALSE(minimal_block_system(make(24, {"(1,5)(2,14,7,12)(3,21)(4,17,16,11)(6,20,23,22)(9,10,15,13)",
                                              "(1,19,15,8,20,23,24,9,14,11,5,10,22,13,2)(3,6,4)(7,16,12,17,18)"})));
  EXPECT_THROW(minimal_block_system(make(4, {"(1,2)"})), PreconditionError);
}

TEST(Blocks, BlocksArePermutedOnRandomTransitiveGroups) {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 4 + rng() % 9;
    auto gens = random_gens(n, rng);
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    if (rng() & 1u) gens = {Permutation(cyc)};  // cyclic groups have many block systems
    PermGroup g(n, gens);
    if (!g.is_transitive()) continue;
    auto b = minimal_block_system(g);
    if (!b) continue;
    ++checked;
    EXPECT_TRUE(is_block_system(g, *b));
    std::size_t total = 0;
    for (auto& blk : *b) total += blk.size();
    EXPECT_EQ(total, n);
  }
  EXPECT_GT(checked, 10);
}
