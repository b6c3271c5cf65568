#include <gtest/gtest.h>

#include "heatwg/brauer.hpp"
#include "heatwg/young.hpp"

using namespace heatwg;

namespace {

Brauer tau_el(int n, int a, int b, const Rational& z) { return Brauer::basis(BrauerDiagram::tau(n, a, b), z); }
Brauer s_el(int n, int a, int b, const Rational& z) { return Brauer::basis(BrauerDiagram::s(n, a, b), z); }

}  // namespace

TEST(BrauerDiagram, Generators) {
  const auto t = BrauerDiagram::tau(3, 1, 2);
  EXPECT_EQ(t.pairs(), (std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}}));
  const auto s = BrauerDiagram::s(3, 1, 3);
  EXPECT_EQ(s.pairs(), (std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 4}}));
  EXPECT_TRUE(s.is_permutation());
  EXPECT_FALSE(t.is_permutation());
  EXPECT_EQ(s.to_permutation(), Permutation::transposition(3, 1, 3));
  EXPECT_THROW(BrauerDiagram::tau(3, 2, 2), std::invalid_argument);
  EXPECT_THROW(BrauerDiagram::from_pairs(2, {{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(BrauerDiagram::identity(9), std::invalid_argument);
}

TEST(BrauerAlgebra, GeneratorRelations) {
  const Rational z(5, 3);
  const int n = 3;
  const auto tau = tau_el(n, 1, 2, z), s = s_el(n, 1, 2, z);
  EXPECT_EQ(tau * tau, z * tau);
  EXPECT_EQ(s * s, Brauer::identity(n, z));
  EXPECT_EQ(tau * s, tau);
  EXPECT_EQ(s * tau, tau);
  const auto tau23 = tau_el(n, 2, 3, z);
  EXPECT_EQ(tau * tau23 * tau, tau);
  EXPECT_EQ(tau_el(n, 1, 3, z), s_el(n, 2, 3, z) * tau * s_el(n, 2, 3, z));
}

TEST(BrauerAlgebra, PermutationsMultiplyLikeTheGroup) {
  const Rational z(7);
  for (const auto& a : symmetric_group(3))
    for (const auto& b : symmetric_group(3)) {
      const auto prod = Brauer::basis(BrauerDiagram::from_permutation(a), z) * Brauer::basis(BrauerDiagram::from_permutation(b), z);
      EXPECT_EQ(prod, Brauer::basis(BrauerDiagram::from_permutation(compose(a, b)), z));
    }
}

TEST(BrauerAlgebra, Associativity) {
  const Rational z(-4);
  const auto a = tau_el(4, 1, 3, z) + s_el(4, 2, 4, z);
  const auto b = tau_el(4, 2, 3, z) - Rational(2) * s_el(4, 1, 2, z);
  const auto c = tau_el(4, 3, 4, z) * tau_el(4, 1, 2, z);
  EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(BrauerAlgebra, MismatchedParametersRejected) {
  EXPECT_THROW(tau_el(2, 1, 2, Rational(2)) * tau_el(2, 1, 2, Rational(3)), std::invalid_argument);
  EXPECT_THROW(Brauer::identity(2, 1) + Brauer::identity(3, 1), std::invalid_argument);
}

TEST(Walled, ProjectionAndClassification) {
  const Rational z(3);
  // Strands 1 | 2: τ_{1,2} crosses the wall, s_{1,2} does not.
  EXPECT_TRUE(BrauerDiagram::tau(2, 1, 2).is_walled(1, 1));
  EXPECT_FALSE(BrauerDiagram::s(2, 1, 2).is_walled(1, 1));
  EXPECT_TRUE(BrauerDiagram::identity(2).is_walled(1, 1));
  const auto mixed = tau_el(2, 1, 2, z) + s_el(2, 1, 2, z);
  EXPECT_EQ(wall_project(mixed, 1, 1), tau_el(2, 1, 2, z));

  EXPECT_EQ(classify_MA(BrauerDiagram::tau(4, 2, 3)), (std::set<int>{2, 3}));
  EXPECT_TRUE(classify_MA(BrauerDiagram::s(4, 2, 3)).empty());
  const auto element = tau_el(4, 1, 2, z) * tau_el(4, 3, 4, z) + tau_el(4, 2, 4, z) + Brauer::identity(4, z);
  EXPECT_EQ(project_Mk(element, 2), tau_el(4, 1, 2, z) * tau_el(4, 3, 4, z));
  EXPECT_EQ(project_Mk(element, 1), tau_el(4, 2, 4, z));
  EXPECT_EQ(project_Mk(element, 0), Brauer::identity(4, z));
}

TEST(Walled, ProductsStayWalled) {
  const Rational z(2);
  const int n = 2, m = 2;
  std::vector<Brauer> gens{s_el(4, 1, 2, z), s_el(4, 3, 4, z)};
  for (int a = 1; a <= n; ++a)
    for (int b = n + 1; b <= n + m; ++b) gens.push_back(tau_el(4, a, b, z));
  for (const auto& x : gens)
    for (const auto& y : gens) EXPECT_TRUE((x * y).is_walled(n, m));
}

TEST(TauIntervals, Shapes) {
  EXPECT_EQ(tau_interval_diagram(1, 4, 4), compose_diagrams(BrauerDiagram::tau(4, 1, 2), BrauerDiagram::tau(4, 3, 4)).first);
  EXPECT_THROW(tau_interval_diagram(1, 3, 4), std::invalid_argument);
  const auto tilde = tau_tilde_interval_diagram(1, 2, 2, 3);
  EXPECT_EQ(tilde.partner(1), 4);
  EXPECT_EQ(tilde.partner(2), 5);
  EXPECT_EQ(tilde.partner(3), 8);
  EXPECT_TRUE(tilde.is_walled(2, 3));
  EXPECT_THROW(tau_tilde_interval_diagram(1, 1, 3, 2), std::invalid_argument);
}

TEST(DistinguishedElements, ZAndY) {
  const Rational z(4);
  EXPECT_EQ(z_element_group({1}, z, 3), GroupAlgebra::identity(3) * Rational(3, 8));
  GroupAlgebra z12 = GroupAlgebra::identity(2) * Rational(3, 4);
  z12.add_term(Permutation::transposition(2, 1, 2), Rational(1, 4));
  EXPECT_EQ(z_element_group({1, 2}, z, 2), z12);
  EXPECT_THROW(z_element_group({1}, Rational(0), 2), std::domain_error);

  EXPECT_EQ(y_element(1, z, 1, 1), Brauer::identity(2, z));
  EXPECT_EQ(y_index_set(1, 2, 3), (std::vector<int>{1, 3, 4}));
  for (int n = 1; n <= 2; ++n)
    for (int m = n; m <= 3; ++m)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) EXPECT_TRUE(commute(y_element_group(i, z, n, m), y_element_group(j, z, n, m)));
}

TEST(DistinguishedElements, ZFamilyCommutes) {
  const Rational z(-6);
  const int n = 4;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      EXPECT_TRUE(commute(z_element_group(initial_segment(i), z, n), z_element_group(initial_segment(j), z, n)));
}

TEST(Casimir, SmallCases) {
  const Rational z(3);
  EXPECT_EQ(casimir_delta(1, z), Brauer::identity(1, z) * Rational(-1, 3));
  Brauer two = Brauer::identity(2, z) * Rational(-2, 3);
  two += tau_el(2, 1, 2, z) * Rational(1, 3);
  two -= s_el(2, 1, 2, z) * Rational(1, 3);
  EXPECT_EQ(casimir_delta(2, z), two);
  EXPECT_TRUE(casimir_delta_walled(2, 1, z).is_walled(2, 1));
}

TEST(Casimir, CentralInBrauerAlgebra) {
  const Rational z(5);
  const int n = 3;
  const auto delta = casimir_delta(n, z);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      EXPECT_EQ(delta * tau_el(n, a, b, z), tau_el(n, a, b, z) * delta);
      EXPECT_EQ(delta * s_el(n, a, b, z), s_el(n, a, b, z) * delta);
    }
}
