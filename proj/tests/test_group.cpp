#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permrel/perm_group.hpp"

using namespace permrel;

namespace {

PermGroup make(std::size_t n, std::vector<std::string> g) { return PermGroup::from_cycles(n, g); }

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST(PermGroup, KnownOrders) {
  EXPECT_EQ(make(5, {"(1,2,3,4,5)", "(1,2,3)"}).order(), 60);
  EXPECT_EQ(make(15, {"(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)", "(1,4,10)(2,5,8)(3,7,11)(6,9,15)(12,14,13)"})
                .order(),
            60);
  EXPECT_EQ(make(9, {"(1,5,4,2,8,3,6)", "(1,8,6,2,7,3,9)"}).order(), 504);
  EXPECT_EQ(make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}).order(), 7920);
  EXPECT_EQ(make(24, {"(1,5)(2,14,7,12)(3,21)(4,17,16,11)(6,20,23,22)(9,10,15,13)",
                      "(1,19,15,8,20,23,24,9,14,11,5,10,22,13,2)(3,6,4)(7,16,12,17,18)"})
                .order(),
            244823040);
}

TEST(PermGroup, SymmetricGroupOfDegree72) {
  std::string cyc = "(";
  for (int i = 1; i <= 72; ++i) cyc += std::to_string(i) + (i < 72 ? "," : ")");
  auto g = make(72, {cyc, "(1,2)"});
  BigInt f = 1;
  for (int i = 2; i <= 72; ++i) f *= i;
  EXPECT_EQ(g.order(), f);
}

TEST(PermGroup, AgreesWithClosureOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Permutation> gens;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      // Random sparse permutations so that many subgroups appear.
      Permutation p(n);
      std::vector<Point> img(p.images().begin(), p.images().end());
      std::size_t swaps = 1 + rng() % 2;
      for (std::size_t s = 0; s < swaps; ++s) std::swap(img[rng() % n], img[rng() % n]);
      gens.emplace_back(img);
    }
    PermGroup g(n, gens);
    auto elts = oracle::elements(n, gens);
    ASSERT_EQ(g.order(), elts.size());
    for (auto& e : elts) EXPECT_TRUE(g.contains(e));
    std::size_t members = 0;
    for (auto& p : oracle::symmetric(n)) members += g.contains(p);
    EXPECT_EQ(members, elts.size());
    auto listed = g.elements();
    std::sort(listed.begin(), listed.end());
    std::sort(elts.begin(), elts.end());
    EXPECT_EQ(listed, elts);
  }
}

TEST(PermGroup, ElementIndexIsABijection) {
  auto g = make(6, {"(1,2,5)(3,4,6)", "(3,5)(4,6)"});
  ASSERT_EQ(g.order(), 60);
  const auto& ch = g.chain();
  for (int i = 0; i < 60; ++i) EXPECT_EQ(ch.element_index(ch.element_at(i)), i);
}

TEST(PermGroup, OrbitsAndFixedPoints) {
  auto g = make(11, {"(1,3,4)(2,5,6)(8,9,11)", "(1,2)(3,4)(7,8)(9,10)"});
  auto orb = g.orbits();
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[0].size(), 6u);
  EXPECT_EQ(orb[1].size(), 5u);
  EXPECT_FALSE(g.is_transitive());
  EXPECT_TRUE(make(5, {"(1,2)"}).fixed_points() == (std::vector<Point>{2, 3, 4}));
}

TEST(PermGroup, ChainWithBasePrefixKeepsOrder) {
  auto g = make(12, {"(1,12)(2,10,5,7)(3,8)(4,6,11,9)", "(1,3)(2,7)(8,11)(9,10)"});
  std::vector<Point> prefix{11, 10, 9};
  auto ch = g.chain_with_base(prefix);
  EXPECT_EQ(ch.order(), 7920);
  EXPECT_EQ(ch.base()[0], 11);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto p = random_perm(12, rng);
    EXPECT_EQ(ch.contains(p), g.contains(p));
  }
}

TEST(PermGroup, EqualityAndSubgroups) {
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto a5b = make(5, {"(1,2,3)", "(3,4,5)"});
  auto s5 = make(5, {"(1,2,3,4,5)", "(1,2)"});
  EXPECT_EQ(a5, a5b);
  EXPECT_FALSE(a5 == s5);
  EXPECT_TRUE(a5.is_subgroup_of(s5));
  EXPECT_FALSE(s5.is_subgroup_of(a5));
}
