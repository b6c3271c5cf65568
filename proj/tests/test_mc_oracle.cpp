#include <gtest/gtest.h>

#include <cmath>

#include "heatwg/heat.hpp"
#include "heatwg/mc_oracle.hpp"

using namespace heatwg;

namespace {

const std::vector<GroupSpec> kGroups{GroupSpec::orthogonal(2), GroupSpec::orthogonal(3), GroupSpec::symplectic(1),
                                     GroupSpec::symplectic(2), GroupSpec::unitary(1), GroupSpec::unitary(3)};

}  // namespace

TEST(Basis, DimensionAndOrthonormality) {
  for (const auto& g : kGroups) {
    const auto b = basis(g);
    EXPECT_EQ(b.size(), g.dim_algebra()) << g.name();
    for (int i = 0; i < b.size(); ++i) {
      EXPECT_LT(algebra_defect(g, b.elements[i]), 1e-14) << g.name();
      for (int j = 0; j < b.size(); ++j) EXPECT_NEAR(b.inner(b.elements[i], b.elements[j]), i == j ? 1.0 : 0.0, 1e-14);
    }
  }
}

TEST(Basis, CasimirSumIsScalar) {
  for (const auto& g : kGroups) {
    const auto b = basis(g);
    const int d = g.dim_v();
    const ComplexMatrix expected = ComplexMatrix::Identity(d, d) * g.casimir_constant().get_d();
    EXPECT_LT((casimir_sum(b) - expected).cwiseAbs().maxCoeff(), 1e-14) << g.name();
  }
}

TEST(Increments, StayInGroup) {
  for (const auto& g : kGroups) {
    const auto b = basis(g);
    CounterRng rng(7, 0, 0);
    const ComplexMatrix x = sample_increment(b, 0.01, rng);
    EXPECT_LT(algebra_defect(g, x), 1e-14);
    EXPECT_LT(membership_defect(g, expm_small(x)), 1e-13) << g.name();
  }
}

TEST(Increments, CoefficientMoments) {
  // The coordinates <x, x_i> of an increment are N(0, dt).
  const auto g = GroupSpec::symplectic(1);
  const auto b = basis(g);
  const double dt = 0.25;
  const int samples = 20000;
  double mean = 0.0, second = 0.0;
  for (int s = 0; s < samples; ++s) {
    CounterRng rng(11, static_cast<std::uint64_t>(s), 0);
    const ComplexMatrix x = sample_increment(b, dt, rng);
    const double c = b.inner(x, b.elements[0]);
    mean += c;
    second += c * c;
  }
  mean /= samples;
  second /= samples;
  EXPECT_NEAR(mean, 0.0, 5.0 * std::sqrt(dt / samples));
  EXPECT_NEAR(second, dt, 5.0 * dt * std::sqrt(2.0 / samples));
}

TEST(Expm, MatchesEigen) {
  ComplexMatrix a(3, 3);
  a << 0.1, 2.0, -0.3, std::complex<double>(0, 1), -1.0, 0.5, 0.0, 0.7, 0.2;
  const ComplexMatrix ours = expm_small(a);
  const ComplexMatrix ref = a.exp();
  EXPECT_LT((ours - ref).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Paths, StayOnGroupAndStartAtIdentity) {
  for (const auto& g : kGroups) {
    SimConfig cfg;
    cfg.paths = 8;
    cfg.step = 1.0 / 32;
    cfg.t_end = 1.0;
    for (const auto& m : simulate_paths(g, cfg)) EXPECT_LT(membership_defect(g, m), 1e-12) << g.name();
  }
  SimConfig zero;
  zero.paths = 3;
  zero.t_end = 0.0;
  for (const auto& m : simulate_paths(GroupSpec::unitary(2), zero))
    EXPECT_LT((m - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Paths, ReproducibleAcrossThreadCounts) {
  SimConfig cfg;
  cfg.paths = 1500;
  cfg.step = 1.0 / 16;
  cfg.seed = 99;
  cfg.threads = 1;
  const auto one = empirical_moment(GroupSpec::orthogonal(3), 2, cfg);
  cfg.threads = 3;
  const auto three = empirical_moment(GroupSpec::orthogonal(3), 2, cfg);
  EXPECT_EQ(one.mean.to_eigen(), three.mean.to_eigen());
  EXPECT_EQ(one.standard_error.to_eigen(), three.standard_error.to_eigen());
  cfg.seed = 100;
  const auto other = empirical_moment(GroupSpec::orthogonal(3), 2, cfg);
  EXPECT_NE(one.mean.to_eigen(), other.mean.to_eigen());
}

TEST(WeakOrder, BiasHalvesWithStep) {
  const auto g = GroupSpec::orthogonal(3);
  const double coarse = weak_bias(g, 1.0, 0.125, 12);
  const double fine = weak_bias(g, 1.0, 0.0625, 12);
  EXPECT_NEAR(coarse / fine, 2.0, 0.1);
  EXPECT_LT(std::fabs(fine), 5e-3);
}

TEST(Estimate, AgreesWithFormula) {
  const auto g = GroupSpec::unitary(2);
  SimConfig cfg;
  cfg.paths = 4000;
  cfg.step = 1.0 / 64;
  cfg.t_end = 0.5;
  cfg.seed = 5;
  const auto mc = empirical_moment(g, 1, 1, cfg);
  const auto exact = bm_moment_tensor(g, 1, 1, 0.5);
  EXPECT_LT(mc.max_imaginary, 0.05);
  for (int r = 0; r < exact.side(); ++r)
    for (int c = 0; c < exact.side(); ++c)
      EXPECT_NEAR(mc.mean.at(r, c), exact.at(r, c), 5.0 * mc.standard_error.at(r, c) + 0.01) << r << "," << c;
}
