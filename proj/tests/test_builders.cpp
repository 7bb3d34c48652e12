#include <gtest/gtest.h>

#include <random>

#include "permrel/blocks.hpp"
#include "permrel/builders.hpp"

using namespace permrel;

namespace {

PermGroup make(std::size_t n, std::vector<std::string> g) { return PermGroup::from_cycles(n, g); }

const std::vector<std::string> t15 = {"(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)",
                                      "(1,4,10)(2,5,8)(3,7,11)(6,9,15)(12,14,13)"};

PermGroup a6() { return make(6, {"(2,3)(4,5)", "(1,2,3,4)(5,6)"}); }

}  // namespace

TEST(NamedGroups, Orders) {
  for (std::size_t n = 1; n <= 9; ++n) {
    EXPECT_EQ(symmetric_group(n).order(), detail::factorial(n));
    EXPECT_EQ(alternating_group(n).order(), n >= 2 ? detail::factorial(n) / 2 : 1);
  }
  EXPECT_EQ(cyclic_group(7).order(), 7);
  EXPECT_EQ(dihedral_group(5).order(), 10);
  EXPECT_EQ(klein_four().order(), 4);
  EXPECT_EQ(a6().order(), 360);
}

TEST(DirectSum, Examples) {
  auto i1 = PermGroup::trivial(1);
  auto t = direct_sum(i1, i1);
  EXPECT_EQ(t.degree(), 2u);
  EXPECT_TRUE(t.is_trivial());
  auto c5i = direct_sum(cyclic_group(5), i1);
  EXPECT_EQ(c5i.degree(), 6u);
  EXPECT_EQ(c5i.order(), 5);
  EXPECT_EQ(c5i.fixed_points(), std::vector<Point>{5});
  auto l25 = make(6, {"(1,2,5)(3,4,6)", "(3,5)(4,6)"});
  auto sum = direct_sum(l25, symmetric_group(5));
  EXPECT_EQ(sum.degree(), 11u);
  EXPECT_EQ(sum.order(), 60 * 120);
}

TEST(ParallelMultiple, Examples) {
  auto g = make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
  EXPECT_EQ(parallel_multiple(g, 1), g);
  EXPECT_EQ(parallel_multiple(make(3, {"(1,2,3)"}), 3), make(9, {"(1,2,3)(4,5,6)(7,8,9)"}));
  auto a52 = parallel_multiple(alternating_group(5), 2);
  EXPECT_EQ(a52.degree(), 10u);
  EXPECT_EQ(a52.order(), 60);
  EXPECT_EQ(a52.orbits().size(), 2u);
  auto m = parallel_multiple(g, 3);
  EXPECT_EQ(m.order(), g.order());
  EXPECT_EQ(m.orbits().size(), 3 * g.orbits().size());
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(add_fixed_points(a6(), 0), a6());
  auto a4p = add_fixed_points(alternating_group(4), 1);
  EXPECT_EQ(a4p.degree(), 5u);
  EXPECT_EQ(a4p.order(), 12);
  auto c7pp = add_fixed_points(cyclic_group(7), 2);
  EXPECT_EQ(c7pp.degree(), 9u);
  EXPECT_EQ(c7pp.fixed_points().size(), 2u);
}

TEST(IsoMap, ValidatesAndEvaluates) {
  auto g = alternating_group(5);
  IsoMap id(g, g, g.generators());
  EXPECT_TRUE(id.is_isomorphism());
  for (const auto& x : g.elements()) EXPECT_EQ(id(x), x);
  std::vector<Permutation> bad{g.generators()[0], g.generators()[0]};
  EXPECT_FALSE(IsoMap(g, g, bad).is_isomorphism());

  // Conjugation by a fixed permutation is an isomorphism onto the conjugate.
  auto c = Permutation::from_cycles("(1,4)(2,5,3)", 5);
  std::vector<Permutation> imgs;
  for (const auto& x : g.generators()) imgs.push_back(x.conjugate_by(c));
  IsoMap conj(g, PermGroup(5, imgs), imgs);
  EXPECT_TRUE(conj.is_isomorphism());
  for (const auto& x : g.elements()) EXPECT_EQ(conj(x), x.conjugate_by(c));
}

TEST(SubdirectSum, FullKernelsGiveDirectSum) {
  auto g1 = alternating_group(4), g2 = cyclic_group(3);
  SubdirectSumSpec spec{g1, g1, g2, g2, {}, {}, {}};
  EXPECT_EQ(subdirect_sum(spec), direct_sum(g1, g2));
}

TEST(SubdirectSum, TrivialKernelsGiveParallelSum) {
  auto g = alternating_group(5);
  SubdirectSumSpec spec{g, PermGroup::trivial(5), g, PermGroup::trivial(5), g.generators(), g.generators(), {}};
  auto s = subdirect_sum(spec);
  EXPECT_EQ(s.order(), 60);
  EXPECT_EQ(s, parallel_multiple(g, 2));
}

TEST(SubdirectSum, TwistedA6) {
  auto g = a6();
  std::vector<Permutation> psi{Permutation::from_cycles("(2,5)(3,4)", 6), Permutation::from_cycles("(1,2,3,4)(5,6)", 6)};
  IsoMap phi(g, a6(), psi);
  ASSERT_TRUE(phi.is_isomorphism());
  auto sum = parallel_sum(phi);
  EXPECT_EQ(sum.order(), 360);
  EXPECT_EQ(sum, make(12, {"(2,3)(4,5)(8,11)(9,10)", "(1,2,3,4)(5,6)(7,8,9,10)(11,12)"}));
  SubdirectSumSpec spec{g, PermGroup::trivial(6), a6(), PermGroup::trivial(6), g.generators(), psi, {}};
  EXPECT_EQ(subdirect_sum(spec), sum);
}

TEST(SubdirectSum, RejectsBadFactorMaps) {
  auto g = alternating_group(5);
  SubdirectSumSpec spec{g, PermGroup::trivial(5), g, PermGroup::trivial(5), g.generators(),
                        {g.generators()[0], g.generators()[0]}, {}};
  EXPECT_THROW(subdirect_sum(spec), PreconditionError);
  SubdirectSumSpec nonnormal{symmetric_group(4), make(4, {"(1,2)"}), cyclic_group(2), PermGroup::trivial(2),
                             {}, {}, {}};
  EXPECT_THROW(subdirect_sum(nonnormal), PreconditionError);
}

TEST(Decompose, ReassemblesIntransitiveGroups) {
  auto a5 = alternating_group(5);
  auto sum = direct_sum(a5, a5);
  auto spec = decompose_intransitive(sum, PointSet::from_one_based(10, {1, 2, 3, 4, 5}));
  EXPECT_EQ(spec.h1, spec.g1);
  EXPECT_EQ(spec.h2, spec.g2);
  EXPECT_EQ(subdirect_sum(spec), sum);

  auto par = parallel_multiple(a5, 2);
  spec = decompose_intransitive(par, PointSet::from_one_based(10, {1, 2, 3, 4, 5}));
  EXPECT_TRUE(spec.h1.is_trivial());
  EXPECT_TRUE(spec.h2.is_trivial());
  EXPECT_EQ(subdirect_sum(spec), par);

  auto l25a5 = make(11, {"(1,3,4)(2,5,6)(8,9,11)", "(1,2)(3,4)(7,8)(9,10)"});
  spec = decompose_intransitive(l25a5, PointSet::from_one_based(11, {1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(spec.h1.is_trivial());
  EXPECT_TRUE(spec.h2.is_trivial());
  EXPECT_EQ(spec.g1.order(), 60);
  EXPECT_EQ(spec.g2.order(), 60);
  EXPECT_EQ(subdirect_sum(spec), l25a5);

  // Interleaved orbits exercise the domain relabelling.
  auto mixed = make(6, {"(1,3,5)", "(2,4)"});
  spec = decompose_intransitive(mixed, PointSet::from_one_based(6, {2, 4, 6}));
  EXPECT_EQ(subdirect_sum(spec), mixed);
  EXPECT_THROW(decompose_intransitive(mixed, PointSet::from_one_based(6, {1, 2})), PreconditionError);
}

TEST(CosetAction, Examples) {
  auto a5 = alternating_group(5);
  auto [triv, spec1] = coset_action(a5, a5);
  EXPECT_EQ(triv.degree(), 1u);
  auto a4p = pointwise_stabilizer(a5, PointSet::from_one_based(5, {5}));
  auto [nat, spec2] = coset_action(a5, a4p);
  EXPECT_EQ(nat.degree(), 5u);
  EXPECT_EQ(nat.order(), 60);
  EXPECT_TRUE(permutation_isomorphism(nat, a5).has_value());
  EXPECT_TRUE(spec2.reps().front().is_identity());

  auto k4p = make(5, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto [g15, spec3] = coset_action(a5, k4p);
  EXPECT_EQ(g15.degree(), 15u);
  EXPECT_EQ(g15.order(), 60);
  EXPECT_TRUE(g15.is_transitive());
  auto t = make(15, t15);
  auto p = permutation_isomorphism(g15, t);
  ASSERT_TRUE(p.has_value());
  for (const auto& x : g15.generators()) EXPECT_TRUE(t.contains(x.conjugate_by(*p)));
  EXPECT_THROW(coset_action(alternating_group(4), make(4, {"(1,2)"})), PreconditionError);
}

TEST(CosetAction, RepresentativesAreDistinctCosets) {
  auto g = make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
  auto h = make(7, {"(2,3,5)(4,7,6)"});
  CosetActionSpec spec(g, h);
  EXPECT_EQ(spec.index(), 7u);  // Frobenius group of order 21 over C3
  EXPECT_EQ(BigInt(spec.index()) * h.order(), g.order());
  for (std::size_t i = 0; i < spec.index(); ++i) {
    EXPECT_EQ(spec.coset_of(spec.reps()[i]), i);
    for (const auto& x : h.elements()) EXPECT_EQ(spec.coset_of(x * spec.reps()[i]), i);
  }
}

TEST(SubsetAction, PairsOfA5) {
  auto g = subset_action(alternating_group(5), 2);
  EXPECT_EQ(g.degree(), 10u);
  EXPECT_EQ(g.order(), 60);
  EXPECT_TRUE(g.is_transitive());
}

TEST(PermutationIsomorphism, DetectsNonConjugateGroups) {
  // Two regular-ish groups of order 4 on 4 points: C4 and K4 are not conjugate.
  EXPECT_FALSE(permutation_isomorphism(cyclic_group(4), klein_four()).has_value());
  auto k4b = make(4, {"(1,3)(2,4)", "(1,4)(2,3)"});
  EXPECT_TRUE(permutation_isomorphism(klein_four(), k4b).has_value());
}
