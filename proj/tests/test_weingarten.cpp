#include <gtest/gtest.h>

#include "heatwg/weingarten.hpp"

using namespace heatwg;

TEST(Pairings, CountsAndJoins) {
  EXPECT_EQ(all_pairings(1).size(), 1u);
  EXPECT_EQ(all_pairings(2).size(), 3u);
  EXPECT_EQ(all_pairings(3).size(), 15u);
  EXPECT_EQ(walled_pairings(3).size(), 6u);
  const auto base = base_pairing(2);
  EXPECT_EQ(join_block_count(base, base), 2);
  for (const auto& pi : all_pairings(2))
    if (!(pi == base)) {
      EXPECT_EQ(join_block_count(pi, base), 1);
    }
}

TEST(Pairings, CosetRepresentativeCarriesBase) {
  for (const auto& pi : all_pairings(3)) EXPECT_EQ(act_on_pairing(coset_representative(pi), base_pairing(3)), pi);
}

TEST(Gram, TwoPairingsMatrix) {
  const Rational z(5);
  const auto g = gram_matrix(all_pairings(2), z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(g(i, j), i == j ? z * z : z);
}

TEST(Omega, MatchesJucysMurphyProduct) {
  for (int n = 1; n <= 4; ++n)
    for (const Rational& z : {Rational(3), Rational(-2), make_rational(1, 3)})
      EXPECT_EQ(omega_element(n, z), omega_element_product(n, z));
  EXPECT_EQ(omega_element(1, Rational(4)), GroupAlgebra::identity(1) * Rational(4));
}

TEST(PseudoInverse, WeingartenTwoClosedForm) {
  for (int N = 2; N <= 5; ++N) {
    const Rational z(N);
    GroupAlgebra expected = GroupAlgebra::identity(2);
    expected.add_term(Permutation::transposition(2, 1, 2), Rational(-1, N));
    expected *= Rational(1, N * N - 1);
    EXPECT_EQ(pseudo_inverse_Wg(2, z), expected);
  }
}

TEST(PseudoInverse, InvertsWhereDefined) {
  for (int n = 1; n <= 4; ++n) {
    for (int N = 1; N <= 4; ++N) {
      const Rational z(N);
      const auto omega = omega_element(n, z), wg = pseudo_inverse_Wg(n, z);
      EXPECT_EQ(omega * wg * omega, omega);
      EXPECT_EQ(wg * omega * wg, wg);
      if (N >= n) {
        EXPECT_EQ(omega * wg, GroupAlgebra::identity(n));
      }
    }
  }
  for (int p = 1; p <= 2; ++p)
    for (int N = 1; N <= 3; ++N) {
      const Rational z(N);
      const auto ph = hyperoctahedral_projector(p);
      const auto g = gram_element_product(p, z) * ph, w = pseudo_inverse_W(p, z) * ph;
      EXPECT_EQ(g * w * g, g);
    }
}

TEST(Haar, ElementIsIdempotent) {
  for (const auto& g : {GroupSpec::orthogonal(2), GroupSpec::symplectic(1), GroupSpec::orthogonal(3)}) {
    const auto h = haar_moment(g, 2);
    EXPECT_EQ(h * h, h) << g.name();
  }
  const auto u = haar_moment(GroupSpec::unitary(2), 2, 2);
  EXPECT_EQ(u * u, u);
}

TEST(Haar, KnownValues) {
  const auto o2 = GroupSpec::orthogonal(2);
  EXPECT_EQ(haar_moment(o2, 2).entry(std::vector{1, 1}, std::vector{1, 1}), make_rational(1, 2));
  EXPECT_EQ(haar_entrywise(o2, {1, 1, 1, 1}, {1, 1, 1, 1}), make_rational(3, 8));
  EXPECT_EQ(haar_entrywise(GroupSpec::unitary(3), {1, 1}, {1, 1}, 1), make_rational(1, 3));
  EXPECT_EQ(haar_entrywise(GroupSpec::unitary(2), {1, 2, 1, 2}, {1, 2, 1, 2}, 2), make_rational(1, 3));
  EXPECT_EQ(haar_entrywise(GroupSpec::orthogonal(3), {1, 2, 3}, {1, 2, 3}), Rational(0));
  EXPECT_TRUE(haar_element(GroupSpec::unitary(2), 2, 1).empty());
  EXPECT_THROW(haar_entrywise(o2, {3}, {1}), std::out_of_range);
}

TEST(Haar, EntrywiseAgreesWithTensor) {
  for (const auto& g : {GroupSpec::orthogonal(2), GroupSpec::symplectic(1), GroupSpec::symplectic(2), GroupSpec::orthogonal(3)}) {
    const auto h = haar_moment(g, 4 <= g.dim_v() ? 2 : 4);
    for (int row = 0; row < h.side(); row += 3)
      for (int col = 0; col < h.side(); col += 5)
        EXPECT_EQ(h.at(row, col), haar_entrywise(g, h.multi_index(row), h.multi_index(col))) << g.name() << " " << row << "," << col;
  }
  const auto u = GroupSpec::unitary(2);
  const auto hu = haar_moment(u, 2, 2);
  for (int row = 0; row < hu.side(); ++row)
    for (int col = 0; col < hu.side(); ++col) EXPECT_EQ(hu.at(row, col), haar_entrywise(u, hu.multi_index(row), hu.multi_index(col), 2));
}

TEST(SoCorrection, ZeroAndDeterminantCases) {
  EXPECT_TRUE(so_correction_element(1, 2).empty());
  EXPECT_TRUE(so_correction_element(3, 2).empty());
  EXPECT_TRUE(so_correction_element(2, 3).empty());
  // N = n: the entry at (1..N, 1..N) is E[det O · O11 O22] = 1/N!.
  for (int N = 1; N <= 3; ++N) {
    std::vector<int> idx;
    for (int k = 1; k <= N; ++k) idx.push_back(k);
    Rational fact = 1;
    for (int k = 2; k <= N; ++k) fact *= k;
    EXPECT_EQ(so_correction(N, N).entry(idx, idx), 1 / fact) << N;
  }
}
