#include <gtest/gtest.h>

#include "heatwg/young.hpp"

using namespace heatwg;

TEST(Partitions, Enumeration) {
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  const auto two_rows = enumerate_partitions(4, 2);
  ASSERT_EQ(two_rows.size(), 3u);
  EXPECT_EQ(two_rows[0], IntegerPartition({4}));
  EXPECT_EQ(two_rows[1], IntegerPartition({3, 1}));
  EXPECT_EQ(two_rows[2], IntegerPartition({2, 2}));
  const auto empty = enumerate_partitions(0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].size(), 0);
  EXPECT_EQ(enumerate_partitions(7).size(), 15u);
}

TEST(Partitions, ConjugateAndDoubled) {
  const IntegerPartition lambda{3, 1, 1};
  EXPECT_EQ(lambda.conjugate(), IntegerPartition({3, 1, 1}));
  EXPECT_EQ(IntegerPartition({4, 2}).conjugate(), IntegerPartition({2, 2, 1, 1}));
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.doubled().size(), 2 * p.size());
    }
  EXPECT_THROW(IntegerPartition({1, 2}), std::invalid_argument);
}

TEST(Tableaux, CountsMatchHookLengths) {
  EXPECT_EQ(enumerate_tableaux(IntegerPartition{2, 1}).size(), 2u);
  EXPECT_EQ(enumerate_tableaux(IntegerPartition{5}).size(), 1u);
  EXPECT_EQ(enumerate_tableaux(IntegerPartition{2, 2}).size(), 2u);
  for (int n = 1; n <= 6; ++n) {
    Rational total = 0, factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    for (const auto& p : enumerate_partitions(n)) {
      const auto count = enumerate_tableaux(p).size();
      EXPECT_EQ(Rational(static_cast<long>(count)), p.dimension()) << p.str();
      total += p.dimension() * p.dimension();
    }
    EXPECT_EQ(total, factorial) << n;
  }
}

TEST(Tableaux, ContentVectorStartsAtZero) {
  for (const auto& t : enumerate_tableaux(IntegerPartition{3, 2})) {
    const auto c = t.content_vector();
    EXPECT_EQ(c.front(), 0);
    long sum = 0;
    for (int v : c) sum += v;
    EXPECT_EQ(sum, IntegerPartition({3, 2}).content_sum());
  }
  EXPECT_THROW(StandardTableau(IntegerPartition{2}, {{2, 1}}), std::invalid_argument);
}

TEST(Characters, KnownValues) {
  for (const auto& ct : {std::vector<int>{1, 1, 1, 1}, std::vector<int>{2, 1, 1}, std::vector<int>{3, 1}, std::vector<int>{4}})
    EXPECT_EQ(character(IntegerPartition{4}, ct), 1);
  for (const auto& s : symmetric_group(4)) EXPECT_EQ(character(IntegerPartition{1, 1, 1, 1}, s.cycle_type()), s.signature());
  EXPECT_EQ(character(IntegerPartition{2, 1}, {3}), -1);
  EXPECT_EQ(character(IntegerPartition{2, 1}, {1, 1, 1}), 2);
  EXPECT_THROW(character(IntegerPartition{2, 1}, {2}), std::invalid_argument);
}

TEST(Projectors, SmallCases) {
  const auto swap = GroupAlgebra::basis(Permutation::transposition(2, 1, 2));
  GroupAlgebra sym = GroupAlgebra::identity(2) + swap, anti = GroupAlgebra::identity(2) - swap;
  sym *= Rational(1, 2);
  anti *= Rational(1, 2);
  EXPECT_EQ(isotypic_projector(IntegerPartition{2}), sym);
  EXPECT_EQ(isotypic_projector(IntegerPartition{1, 1}), anti);
}

TEST(Projectors, ResolutionOfIdentityOrthogonalCentral) {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = enumerate_partitions(n);
    GroupAlgebra sum(n);
    for (const auto& a : parts) {
      const auto pa = isotypic_projector(a);
      sum += pa;
      for (const auto& b : parts) {
        const auto prod = pa * isotypic_projector(b);
        if (a == b) {
          EXPECT_EQ(prod, pa);
        } else {
          EXPECT_TRUE(prod.empty());
        }
      }
      for (int k = 1; k < n; ++k) EXPECT_TRUE(commute(pa, GroupAlgebra::basis(Permutation::transposition(n, k, k + 1))));
      EXPECT_EQ(epsilon_twist(pa), isotypic_projector(a.conjugate()));
    }
    EXPECT_EQ(sum, GroupAlgebra::identity(n));
  }
}

TEST(Projectors, OddPartsKillHyperoctahedralProjector) {
  for (int p = 1; p <= 2; ++p) {
    const auto ph = hyperoctahedral_projector(p);
    for (const auto& mu : enumerate_partitions(2 * p)) {
      bool odd = false;
      for (int part : mu.parts()) odd = odd || part % 2 == 1;
      const auto prod = isotypic_projector(mu) * ph;
      if (odd) EXPECT_TRUE(prod.empty()) << mu.str();
      else EXPECT_FALSE(prod.empty()) << mu.str();
    }
  }
}

TEST(JucysMurphySpectrum, ZEigenvalues) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& t : enumerate_tableaux(IntegerPartition{2, 1}))
      EXPECT_EQ(jm_eigenvalue_zi(t, 1, Rational(N)), make_rational(N - 1, 2 * N));
  // Z_N(N) vanishes on a single column.
  for (int N = 2; N <= 4; ++N) {
    std::vector<int> ones(N, 1);
    IntegerPartition column(ones);
    EXPECT_EQ(z_eigenvalue(column, Rational(N)), Rational(0));
  }
}

TEST(JucysMurphySpectrum, SymplecticMinimumFormula) {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 6; ++n)
      for (int i = 1; i <= n; ++i) {
        Rational lowest;
        bool first = true;
        for (const auto& mu : enumerate_partitions(i)) {
          if (mu.largest_part() > 2 * N) continue;
          const Rational v = z_eigenvalue(mu, Rational(-2 * N));
          if (first || v < lowest) lowest = v;
          first = false;
        }
        const int d = i / (2 * N), r = i % (2 * N);
        const Rational expected = make_rational(d * (d + 1), 2) + make_rational((2 * N + 2 + 2 * d - r) * r, 4 * N);
        EXPECT_EQ(lowest, expected) << "N=" << N << " i=" << i;
      }
}

TEST(RFactors, Examples) {
  for (int N = 1; N <= 5; ++N) {
    const Rational z(N);
    EXPECT_EQ(r_factors(IntegerPartition{1}, z).r, z);
    EXPECT_EQ(r_factors(IntegerPartition{1}, z).r2, z);
    EXPECT_EQ(r_factors(IntegerPartition{2}, z).r, z * (z + 1));
    EXPECT_EQ(r_factors(IntegerPartition{2}, z).r2, z * (z + 2));
  }
  EXPECT_EQ(r_factors(IntegerPartition{1, 1}, Rational(1)).r, Rational(0));
}
