#include <gtest/gtest.h>

#include <set>

#include "heatwg/group_algebra.hpp"
#include "heatwg/young.hpp"

using namespace heatwg;

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  const auto a = Permutation::transposition(3, 1, 2);
  const auto b = Permutation::transposition(3, 2, 3);
  EXPECT_EQ(compose(a, b).one_line(), (std::vector<int>{2, 3, 1}));
  EXPECT_TRUE(compose(a, a).is_identity());
  const auto s = Permutation::from_one_line({3, 1, 4, 2});
  EXPECT_EQ(compose(s, Permutation::identity(4)), s);
  EXPECT_TRUE(compose(s, s.inverse()).is_identity());
}

TEST(Permutation, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST(Permutation, FromOneLineValidates) {
  EXPECT_THROW(Permutation::from_one_line({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_one_line({0, 1}), std::invalid_argument);
}

TEST(Permutation, CycleCountAndSignature) {
  EXPECT_EQ(Permutation::identity(4).cycle_count(), 4);
  EXPECT_EQ(compose(Permutation::transposition(4, 1, 2), Permutation::transposition(4, 3, 4)).cycle_count(), 2);
  const auto four_cycle = Permutation::cycle(4, {1, 2, 3, 4});
  EXPECT_EQ(four_cycle.cycle_count(), 1);
  EXPECT_EQ(Permutation::identity(5).signature(), 1);
  EXPECT_EQ(Permutation::transposition(5, 2, 5).signature(), -1);
  EXPECT_EQ(Permutation::cycle(3, {1, 2, 3}).signature(), 1);
  for (const auto& s : symmetric_group(5)) EXPECT_EQ(s.signature(), (5 - s.cycle_count()) % 2 ? -1 : 1);
}

TEST(Permutation, SymmetricGroupIsComplete) {
  const auto group = symmetric_group(4);
  EXPECT_EQ(group.size(), 24u);
  std::set<Permutation> unique(group.begin(), group.end());
  EXPECT_EQ(unique.size(), 24u);
  EXPECT_EQ(young_subgroup(2, 3).size(), 12u);
  for (const auto& s : young_subgroup(2, 3)) {
    EXPECT_LE(s(1), 2);
    EXPECT_LE(s(2), 2);
  }
}

TEST(GroupAlgebra, MultiplicationFollowsComposition) {
  const auto a = Permutation::cycle(3, {1, 2, 3});
  const auto b = Permutation::transposition(3, 1, 3);
  EXPECT_EQ(GroupAlgebra::basis(a) * GroupAlgebra::basis(b), GroupAlgebra::basis(compose(a, b)));
}

TEST(GroupAlgebra, NoZeroTermsStored) {
  GroupAlgebra x = GroupAlgebra::basis(Permutation::transposition(2, 1, 2));
  x -= GroupAlgebra::basis(Permutation::transposition(2, 1, 2));
  EXPECT_TRUE(x.empty());
}

TEST(JucysMurphy, SmallCases) {
  EXPECT_TRUE(jucys_murphy(1, 3).empty());
  EXPECT_EQ(jucys_murphy(2, 3), GroupAlgebra::basis(Permutation::transposition(3, 1, 2)));
  EXPECT_THROW(jucys_murphy(4, 3), std::invalid_argument);
  const auto x2 = jucys_murphy(2, 3), x3 = jucys_murphy(3, 3);
  EXPECT_EQ(x2 * x3, x3 * x2);
}

TEST(JucysMurphy, PairwiseCommuteAndSumIsCentral) {
  for (int n = 2; n <= 6; ++n) {
    GroupAlgebra sum(n);
    std::vector<GroupAlgebra> xs;
    for (int i = 1; i <= n; ++i) {
      xs.push_back(jucys_murphy(i, n));
      sum += xs.back();
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) EXPECT_TRUE(commute(xs[i], xs[j])) << n << " " << i << " " << j;
    for (int k = 1; k < n; ++k) EXPECT_TRUE(commute(sum, GroupAlgebra::basis(Permutation::transposition(n, k, k + 1))));
  }
}

TEST(Hyperoctahedral, ProjectorShapeAndIdempotency) {
  GroupAlgebra half = GroupAlgebra::identity(2) + GroupAlgebra::basis(Permutation::transposition(2, 1, 2));
  half *= Rational(1, 2);
  EXPECT_EQ(hyperoctahedral_projector(1), half);
  EXPECT_EQ(hyperoctahedral_projector(2).size(), 8u);
  for (int p = 1; p <= 3; ++p) {
    const auto proj = hyperoctahedral_projector(p);
    EXPECT_EQ(proj * proj, proj);
  }
}

TEST(Hyperoctahedral, RelationWithJucysMurphy) {
  for (int i = 1; i <= 3; ++i) {
    const int n = 2 * i;
    const auto ph = hyperoctahedral_projector(i);
    GroupAlgebra sum(n);
    for (int k = 1; k <= n; ++k) sum += jucys_murphy(k, n);
    GroupAlgebra rhs = jucys_murphy(n - 1, n);
    rhs.add_scalar(Rational(1));
    rhs *= Rational(i);
    EXPECT_EQ(sum * ph, ph * rhs * ph) << "i=" << i;
  }
}

TEST(EpsilonTwist, NegatesJucysMurphyAndIsInvolutive) {
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(epsilon_twist(jucys_murphy(i, 4)), -jucys_murphy(i, 4));
  EXPECT_EQ(epsilon_twist(GroupAlgebra::identity(3)), GroupAlgebra::identity(3));
  const auto x = jucys_murphy(3, 3) * jucys_murphy(2, 3) + GroupAlgebra::identity(3);
  EXPECT_EQ(epsilon_twist(epsilon_twist(x)), x);
}

TEST(EpsilonTwist, SwapsConjugateProjectors) {
  for (const auto& lambda : enumerate_partitions(3))
    EXPECT_EQ(epsilon_twist(isotypic_projector(lambda)), isotypic_projector(lambda.conjugate())) << lambda.str();
}

TEST(ConjugationAverage, Examples) {
  EXPECT_EQ(conjugation_average(GroupAlgebra::identity(3), symmetric_group(3), Rational(1, 6)), GroupAlgebra::identity(3));
  const auto avg = conjugation_average(GroupAlgebra::basis(Permutation::transposition(3, 1, 2)), symmetric_group(3), Rational(1, 6));
  GroupAlgebra expected(3);
  for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
    expected.add_term(Permutation::transposition(3, a, b), Rational(1, 3));
  EXPECT_EQ(avg, expected);
  for (const auto& s : symmetric_group(3)) EXPECT_TRUE(commute(avg, GroupAlgebra::basis(s)));
}

TEST(GroupAlgebra, InvertMatchesIdentity) {
  GroupAlgebra x = jucys_murphy(3, 3);
  x.add_scalar(Rational(5));
  EXPECT_EQ(x * invert(x), GroupAlgebra::identity(3));
  EXPECT_THROW(invert(hyperoctahedral_projector(1)), std::domain_error);
}
