#include "ghzcka/oracles.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ghzcka/dephasing.h"
#include "ghzcka/errors.h"

namespace ghz::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(DephasedGhzMatrix, BellStateAtTwoQubits) {
  const auto rho = dephased_ghz_matrix(2, 1.0);
  Eigen::MatrixXcd bell = Eigen::MatrixXcd::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  EXPECT_LE((rho.matrix() - bell).cwiseAbs().maxCoeff(), 0.0);
}

TEST(DephasedGhzMatrix, FullyDephased) {
  for (int n = 2; n <= 6; ++n) {
    const auto rho = dephased_ghz_matrix(n, 0.0);
    EXPECT_EQ(rho.trace(), std::complex<double>(1.0, 0.0));
    EXPECT_EQ(rho(0, 0).real(), 0.5);
    EXPECT_EQ(rho(rho.dim() - 1, rho.dim() - 1).real(), 0.5);
    EXPECT_EQ(rho.matrix().cwiseAbs().sum(), 1.0);
  }
}

TEST(DephasedGhzMatrix, Spectrum) {
  const auto ev = dephased_ghz_matrix(3, 0.7).eigenvalues();
  ASSERT_EQ(ev.size(), 8);
  EXPECT_NEAR(ev(7), 0.85, 1e-14);
  EXPECT_NEAR(ev(6), 0.15, 1e-14);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(ev(i), 0.0, 1e-14);
}

TEST(DephasedGhzMatrix, TraceOnePositiveHermitian) {
  for (int n = 2; n <= 8; ++n) {
    for (double lambda : {0.0, 0.3, 0.75, 1.0}) {
      const auto rho = dephased_ghz_matrix(n, lambda);
      EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
      EXPECT_TRUE(rho.is_hermitian());
      EXPECT_GE(rho.eigenvalues().minCoeff(), -1e-12);
      EXPECT_NEAR(ghz_fidelity(rho), (1.0 + lambda) / 2.0, 1e-15);
    }
  }
}

TEST(DephasedGhzMatrix, SizeLimits) {
  EXPECT_THROW(dephased_ghz_matrix(1, 1.0), ResourceError);
  EXPECT_THROW(dephased_ghz_matrix(13, 1.0), ResourceError);
  EXPECT_THROW(dephased_ghz_matrix(4, 1.5), DomainError);
}

TEST(MabkOperator, ChshTsirelson) {
  MeasurementSettings s;
  s.angles = {{0.0, kPi / 2.0}, {kPi / 4.0, -kPi / 4.0}};
  const auto m = mabk_operator(2, s);
  EXPECT_TRUE(m.is_hermitian());
  EXPECT_NEAR(m.eigenvalues().maxCoeff(), std::sqrt(2.0), 1e-12);
}

TEST(MabkOperator, MerminAtThreeQubits) {
  MeasurementSettings s;
  s.angles.assign(3, {0.0, kPi / 2.0});
  EXPECT_NEAR(mabk_operator(3, s).eigenvalues().maxCoeff(), 2.0, 1e-12);
}

TEST(MabkOperator, EqualSettingsDropDifferenceTerm) {
  MeasurementSettings s;
  s.angles = {{0.3, 1.2}, {0.7, 2.0}, {1.1, 1.1}};
  MeasurementSettings head;
  head.angles = {{0.3, 1.2}, {0.7, 2.0}};
  const auto full = mabk_operator(3, s);
  const auto reduced = mabk_operator(2, head);
  Eigen::Matrix2cd a;
  a << 0.0, std::polar(1.0, -1.1), std::polar(1.0, 1.1), 0.0;
  // M_3 = 1/2 M_2 (x) 2A
  Eigen::MatrixXcd expected(8, 8);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expected(2 * r + i, 2 * c + j) = reduced(r, c) * a(i, j);
  EXPECT_LE((full.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MabkOperator, ClassicalBoundIsOne) {
  MeasurementSettings s;
  s.angles.assign(4, {0.0, 0.0});
  // A = A' = X for every party reduces the operator to X^{(x)4}.
  const auto m = mabk_operator(4, s);
  EXPECT_NEAR(m.eigenvalues().maxCoeff(), 1.0, 1e-12);
}

TEST(MabkOperator, RejectsWrongSettingCount) {
  MeasurementSettings s;
  s.angles.assign(3, {0.0, 0.0});
  EXPECT_THROW(mabk_operator(4, s), DomainError);
}

TEST(MabkOperator, CanonicalSettingsReachGhzMaximum) {
  for (int n = 2; n <= 8; ++n) {
    const auto value = mabk_operator(n, canonical_ghz_settings(n))
                           .trace_product(dephased_ghz_matrix(n, 1.0))
                           .real();
    EXPECT_NEAR(value, std::pow(2.0, (n - 1) / 2.0), 1e-12) << "N=" << n;
  }
}

TEST(MabkValue, ReferencePoints) {
  EXPECT_NEAR(mabk_value(2, 1.0), std::sqrt(2.0), 1e-6);
  EXPECT_LE(mabk_value(4, 0.0), 1.0);
  EXPECT_NEAR(mabk_value(5, 0.8), 3.2, 1e-4);
}

TEST(MabkValue, LinearInLambda) {
  for (int n = 2; n <= 6; ++n) {
    for (double lambda : {0.75, 0.8, 0.9, 1.0}) {
      EXPECT_NEAR(mabk_value(n, lambda) / lambda, std::pow(2.0, (n - 1) / 2.0), 1e-4)
          << "N=" << n << " lambda=" << lambda;
    }
  }
}

TEST(MabkValue, OptimumSettingsReproduceValue) {
  const auto opt = mabk_maximize(3, 0.9);
  const double again =
      mabk_operator(3, opt.settings).trace_product(dephased_ghz_matrix(3, 0.9)).real();
  EXPECT_NEAR(again, opt.value, 1e-12);
}

TEST(McAvgLambda, ExactCases) {
  const auto certain = mc_avg_lambda(1.0, 3.0, 20'000, 1);
  EXPECT_EQ(certain.mean, 1.0);
  EXPECT_EQ(certain.std_error, 0.0);
  const auto free = mc_avg_lambda(0.2, 0.0, 20'000, 1);
  EXPECT_EQ(free.mean, 1.0);
  EXPECT_EQ(free.std_error, 0.0);
}

TEST(McAvgLambda, MatchesAnalyticMean) {
  const auto e = mc_avg_lambda(0.5, std::numbers::ln2, 1'000'000, 42);
  EXPECT_LE(std::abs(e.mean - 2.0 / 3.0), 3.0 * e.std_error);
  EXPECT_EQ(e.samples, 1'000'000);
}

TEST(McAvgLambda, RejectsTooFewSamples) {
  EXPECT_THROW(mc_avg_lambda(0.5, 0.1, 1000, 1), DomainError);
  EXPECT_THROW(mc_avg_lambda(0.0, 0.1, 20'000, 1), DomainError);
}

TEST(McMaxGeometric, SingleLink) {
  const auto e = mc_max_geometric(1, 0.5, 200'000, 3);
  EXPECT_LE(std::abs(e.mean - 2.0), 3.0 * e.std_error);
}

TEST(McMaxGeometric, TwoLinksExact) {
  const double exact = 2.0 / 0.01 - 1.0 / (2.0 * 0.01 - 0.01 * 0.01);
  EXPECT_NEAR(expected_max_geometric(2, 0.01), exact, 1e-9);
  EXPECT_NEAR(exact, 149.74874371859296482, 1e-12);
  const auto e = mc_max_geometric(2, 0.01, 1'000'000, 5);
  EXPECT_LE(std::abs(e.mean - exact), 3.0 * e.std_error);
}

TEST(McMaxGeometric, HarmonicApproximation) {
  for (int k = 2; k <= 5; ++k) {
    const double approx = harmonic(k) / 0.01;
    const auto e = mc_max_geometric(k, 0.01, 500'000, 100 + k);
    EXPECT_LE(std::abs(e.mean - approx) / approx, 0.02) << "k=" << k;
    EXPECT_LE(std::abs(e.mean - expected_max_geometric(k, 0.01)), 3.0 * e.std_error);
  }
}

TEST(McAllSucceedRounds, Values) {
  const auto one = mc_all_succeed_rounds(1, 1.0, 10'000, 1);
  EXPECT_EQ(one.mean, 1.0);
  EXPECT_EQ(one.std_error, 0.0);
  const auto three = mc_all_succeed_rounds(3, 0.5, 200'000, 2);
  EXPECT_LE(std::abs(three.mean - 8.0), 3.0 * three.std_error);
  const auto two = mc_all_succeed_rounds(2, 0.1, 200'000, 3);
  EXPECT_LE(std::abs(two.mean - 100.0), 3.0 * two.std_error);
}

TEST(MonteCarlo, DeterministicPerSeed) {
  const auto a = mc_max_geometric(3, 0.05, 50'000, 77);
  const auto b = mc_max_geometric(3, 0.05, 50'000, 77);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  const auto c = mc_max_geometric(3, 0.05, 50'000, 78);
  EXPECT_NE(a.mean, c.mean);
}

TEST(MonteCarlo, SerialMatchesParallelBitForBit) {
  for (std::int64_t n : {10'000LL, 123'457LL}) {
    const auto s1 = mc_avg_lambda(0.1, 0.01, n, 9, Execution::Serial);
    const auto p1 = mc_avg_lambda(0.1, 0.01, n, 9, Execution::Parallel);
    EXPECT_EQ(s1.mean, p1.mean);
    EXPECT_EQ(s1.std_error, p1.std_error);
    const auto s2 = mc_all_succeed_rounds(2, 0.3, n, 9, Execution::Serial);
    const auto p2 = mc_all_succeed_rounds(2, 0.3, n, 9, Execution::Parallel);
    EXPECT_EQ(s2.mean, p2.mean);
    EXPECT_EQ(s2.std_error, p2.std_error);
  }
}

TEST(MonteCarlo, StandardErrorScalesAsInverseSqrt) {
  // Four times the samples halves the standard error.
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const auto small = mc_max_geometric(2, 0.05, 100'000, seed);
    const auto large = mc_max_geometric(2, 0.05, 400'000, seed + 100);
    EXPECT_NEAR(large.std_error / small.std_error, 0.5, 0.03);
    const auto s2 = mc_avg_lambda(0.1, 0.05, 100'000, seed);
    const auto l2 = mc_avg_lambda(0.1, 0.05, 200'000, seed + 100);
    EXPECT_NEAR(l2.std_error / s2.std_error, 1.0 / std::sqrt(2.0), 0.03);
  }
}

TEST(SubsetSum, SmallCasesByHand) {
  // N = 2: (1-p)^2 + (p/2)^2 + 2 * 1/2 * (1-p) p/2
  const double p = 0.3;
  EXPECT_NEAR(fidelity_depol_subset_sum(p, 2),
              0.49 + 0.0225 + 0.7 * 0.3 / 2.0, 1e-15);
}

}  // namespace
}  // namespace ghz::oracle
