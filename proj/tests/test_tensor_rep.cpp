#include <gtest/gtest.h>

#include "heatwg/tensor_rep.hpp"

using namespace heatwg;

namespace {

std::vector<Brauer> sample_elements(int n, const Rational& z) {
  std::vector<Brauer> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      out.push_back(Brauer::basis(BrauerDiagram::tau(n, a, b), z));
      out.push_back(Brauer::basis(BrauerDiagram::s(n, a, b), z));
    }
  out.push_back(casimir_delta(n, z));
  return out;
}

}  // namespace

TEST(GroupSpec, Parsing) {
  EXPECT_EQ(GroupSpec::parse("Sp", 2).dim_v(), 4);
  EXPECT_EQ(GroupSpec::parse("Sp", 2).brauer_z(), Rational(-4));
  EXPECT_EQ(GroupSpec::parse("O", 3).name(), "O(3)");
  EXPECT_EQ(GroupSpec::parse("U", 2).casimir_constant(), Rational(-1));
  EXPECT_EQ(GroupSpec::parse("O", 3).casimir_constant(), Rational(-2, 3));
  EXPECT_EQ(GroupSpec::parse("Sp", 1).casimir_constant(), Rational(-3, 2));
  EXPECT_THROW(GroupSpec::parse("SL", 2), std::invalid_argument);
  EXPECT_THROW(GroupSpec::parse("O", 0), std::invalid_argument);
}

TEST(MomentTensor, IndexingIsBigEndian) {
  MomentTensor<double> t(3, 2);
  EXPECT_EQ(t.side(), 9);
  const std::vector<int> idx{2, 3};
  EXPECT_EQ(t.flat_index(idx), 5);
  EXPECT_EQ(t.multi_index(5), idx);
  EXPECT_THROW(MomentTensor<double>(4, 7), std::length_error);
}

TEST(Representation, HomomorphismOrthogonal) {
  for (int N = 1; N <= 3; ++N) {
    const Rational z(N);
    const auto elems = sample_elements(3, z);
    for (const auto& a : elems)
      for (const auto& b : elems) EXPECT_EQ(rho_O(a * b, N), rho_O(a, N) * rho_O(b, N));
  }
}

TEST(Representation, HomomorphismSymplectic) {
  for (int N = 1; N <= 2; ++N) {
    const Rational z(-2 * N);
    const auto elems = sample_elements(3, z);
    for (const auto& a : elems)
      for (const auto& b : elems) EXPECT_EQ(rho_S(a * b, N), rho_S(a, N) * rho_S(b, N));
  }
}

TEST(Representation, ParameterChecked) {
  EXPECT_THROW(rho_O(Brauer::identity(2, Rational(3)), 2), std::invalid_argument);
  EXPECT_THROW(rho_S(Brauer::identity(2, Rational(4)), 2), std::invalid_argument);
}

TEST(Representation, TransposeActsAsFlip) {
  const auto t = rho_O(Brauer::basis(BrauerDiagram::s(2, 1, 2), Rational(3)), 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const std::vector<int> row{i, j}, col{j, i};
      EXPECT_EQ(t.entry(row, col), Rational(1));
    }
  EXPECT_EQ(t.trace(), Rational(3));
}

TEST(Casimir, ScalarOnDefiningRepresentation) {
  for (const char* tag : {"O", "Sp", "U"})
    for (int N = 1; N <= 3; ++N) {
      const auto g = GroupSpec::parse(tag, N);
      if (g.family == Family::Orthogonal && N == 1) continue;
      const auto c = casimir_matrix(g, 1);
      EXPECT_EQ(c, MomentTensor<Rational>::identity(g.dim_v(), 1) * g.casimir_constant()) << g.name();
    }
}

TEST(Casimir, ConjugateFactorOnlyForUnitary) {
  EXPECT_THROW(casimir_matrix(GroupSpec::orthogonal(2), 1, 1), std::invalid_argument);
  const auto c = casimir_matrix(GroupSpec::unitary(2), 1, 1);
  EXPECT_EQ(c.side(), 4);
}

TEST(Casimir, ExponentialAtZeroIsIdentity) {
  const auto e = casimir_exponential(GroupSpec::symplectic(1), 2, 0, 0.0);
  EXPECT_NEAR((e.to_eigen() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}
