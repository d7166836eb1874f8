#include "ghzcka/protocols.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ghzcka/cka.h"
#include "ghzcka/errors.h"
#include "test_support.h"

namespace ghz {
namespace {

double pw(DephasingFactorId id, const PhysicalConfig& cfg, int e) {
  return std::pow(dephasing_factor(id, cfg), e);
}

TEST(LambdaTot, SingleRoundProtocolsAreNoiseless) {
  testing::ConfigGenerator gen(1);
  for (int i = 0; i < 100; ++i) {
    const auto cfg = gen.next();
    EXPECT_EQ(lambda_tot(ProtocolId::Linear1, cfg), 1.0);
    EXPECT_EQ(lambda_tot(ProtocolId::Circular1, cfg), 1.0);
    EXPECT_EQ(fidelity(ProtocolId::Linear1, cfg), 1.0);
    EXPECT_EQ(fidelity(ProtocolId::Circular1, cfg), 1.0);
  }
}

TEST(LambdaTot, ZeroNoiseGivesPerfectFidelity) {
  PhysicalConfig cfg = testing::zero_noise(example_profile());
  for (int n : {4, 8}) {
    cfg.n_nodes = n;
    for (auto p : kAllProtocols) {
      EXPECT_EQ(lambda_tot(p, cfg), 1.0) << to_string(p);
      EXPECT_EQ(fidelity(p, cfg), 1.0) << to_string(p);
    }
  }
}

TEST(LambdaTot, ProductsOfFactors) {
  using Id = DephasingFactorId;
  PhysicalConfig cfg = example_profile();
  cfg.d_km = 3.0;
  cfg.n_nodes = 8;
  const int n = cfg.n_nodes;
  const double l2 = pw(Id::L1, cfg, n) * pw(Id::L2, cfg, 1);
  const double l3 = pw(Id::L1, cfg, 2 * n) * pw(Id::L2, cfg, 2) * pw(Id::L4p, cfg, 1) *
                    pw(Id::L4, cfg, 1);
  const double l4 = pw(Id::L1, cfg, 2 * n - 2) * pw(Id::L2, cfg, 1) * pw(Id::L5, cfg, 1) *
                    pw(Id::L6, cfg, 1) * pw(Id::L7, cfg, 1) * pw(Id::L7p, cfg, 1);
  const double l5 =
      pw(Id::L8, cfg, 1) * pw(Id::L8p, cfg, 1) * pw(Id::L9, cfg, 1) * pw(Id::L10, cfg, 1);
  const double l6 = pw(Id::L1, cfg, n - 2) * pw(Id::L5, cfg, 1) * pw(Id::L6, cfg, 1) *
                    pw(Id::L7, cfg, 1) * pw(Id::L7p, cfg, 1);
  const double c2 = pw(Id::L11, cfg, 2) * pw(Id::L12, cfg, 1);

  EXPECT_NEAR(lambda_tot(ProtocolId::Linear2, cfg), l2, 1e-14 * l2);
  EXPECT_NEAR(lambda_tot(ProtocolId::Linear3, cfg), l3, 1e-14 * l3);
  EXPECT_NEAR(lambda_tot(ProtocolId::Linear4, cfg), l4, 1e-14 * l4);
  EXPECT_NEAR(lambda_tot(ProtocolId::Linear5, cfg), l5, 1e-14 * l5);
  EXPECT_NEAR(lambda_tot(ProtocolId::Linear6, cfg), l6, 1e-14 * l6);
  EXPECT_NEAR(lambda_tot(ProtocolId::Circular2, cfg), c2, 1e-14 * c2);

  const auto ledger = compute_ledger(cfg);
  for (auto p : kAllProtocols) {
    EXPECT_EQ(lambda_tot(p, ledger, n), lambda_tot(p, cfg)) << to_string(p);
  }
}

TEST(Fidelity, FromLambda) {
  EXPECT_EQ((GhzDiagonalState{4, 1.0}.fidelity()), 1.0);
  EXPECT_EQ((GhzDiagonalState{4, 0.0}.fidelity()), 0.5);
}

TEST(GenerationTime, Linear4CollapsesToHarmonicSum) {
  PhysicalConfig cfg = example_profile();
  cfg.t_cnot_s = 0.0;
  cfg.d_km = 10.0;
  const double t_epl = epl_time(cfg);
  EXPECT_NEAR(generation_time(ProtocolId::Linear4, cfg) / t_epl, 2.5, 1e-14);
}

TEST(GenerationTime, Circular1LosslessUnitDelay) {
  PhysicalConfig cfg = example_profile();
  cfg.eta_detector = cfg.p_freq_conv = cfg.p_outcoupling = 1.0;
  cfg.alpha = 0.0;
  cfg.d_km = cfg.c_km_per_s;  // d/c = 1 s
  cfg.t_prep_s = 0.0;
  EXPECT_DOUBLE_EQ(generation_time(ProtocolId::Circular1, cfg), 8.0);
}

TEST(GenerationTime, Linear1ReferenceDistance) {
  PhysicalConfig cfg = example_profile();
  cfg.d_km = 20.0;
  // (1e-4 + 4 * 6e-6) / (0.009^2 / 2)^3
  EXPECT_NEAR(generation_time(ProtocolId::Linear1, cfg), 1866623011.7736493797, 1e-3);
}

TEST(GenerationTime, HelperTimes) {
  PhysicalConfig cfg = example_profile();
  cfg.d_km = 20.0;
  const double eta = 0.009;
  EXPECT_NEAR(barrett_kok_time(cfg), (20.0 / 4e5 + 12e-6 + 1e-6) / (eta * eta / 2.0), 1e-9);
  const double p1 = (4.0 - eta) * eta / 4.0;
  EXPECT_NEAR(epl_time(cfg),
              (2.0 * (1e-4 + 6e-6) / p1 + 1.5e-3) * (4.0 - eta) * (4.0 - eta) / 2.0, 1e-12);
}

TEST(GenerationTime, ClosedFormsAtEightNodes) {
  PhysicalConfig cfg = example_profile();
  cfg.d_km = 7.0;
  cfg.n_nodes = 8;
  const double eta = transmittivity(cfg);
  const double dc = cfg.d_km / cfg.c_km_per_s;
  const double p1 = (4.0 - eta) * eta / 4.0;
  const double p8 = eta * eta / 2.0;
  const double p3 = (4.0 - eta) * std::pow(eta, 3) * (eta * eta - 4.0 * eta + 8.0) / 64.0;
  const double t_bk = (dc / 2.0 + 2.0 * cfg.t_prep_s + cfg.t_x_s) / p8;
  const double t_epl =
      (2.0 * (dc + cfg.t_prep_s) / p1 + cfg.t_swap_s + cfg.t_cnot_s) * std::pow(4.0 - eta, 2) / 2.0;
  const double h4 = 25.0 / 12.0, h3 = 11.0 / 6.0;
  const double gates = cfg.t_swap_s + cfg.t_cnot_s;

  auto near = [](double got, double want) { EXPECT_NEAR(got, want, 1e-13 * want); };
  near(generation_time(ProtocolId::Linear1, cfg), (dc + 4.0 * cfg.t_prep_s) / std::pow(p8, 7));
  near(generation_time(ProtocolId::Linear2, cfg),
       (h4 * t_epl + 2.0 * dc + 2.0 * cfg.t_prep_s + cfg.t_x_s) / std::pow(p8, 3));
  near(generation_time(ProtocolId::Linear3, cfg),
       std::pow(4.0 - eta, 2) * std::pow(eta * eta - 4.0 * eta + 8.0, 2) / 64.0 *
           ((h4 * t_epl + dc) / (2.0 * p3) + gates));
  near(generation_time(ProtocolId::Linear4, cfg), (h4 + h3) * t_epl + cfg.t_cnot_s);
  near(generation_time(ProtocolId::Linear5, cfg),
       (h4 + h3) * t_bk + cfg.t_cnot_s + 2.0 * cfg.t_x_s);
  near(generation_time(ProtocolId::Linear6, cfg),
       h4 * t_bk + h3 * t_epl + cfg.t_cnot_s + cfg.t_x_s);
  near(generation_time(ProtocolId::Circular1, cfg),
       128.0 / std::pow(eta, 8) * dc + 2.0 * cfg.t_prep_s);
  near(generation_time(ProtocolId::Circular2, cfg),
       0.5 * std::pow(4.0 - eta, 8) * (2.0 * h4 * (dc + cfg.t_prep_s) / p1 + gates));
}

TEST(Evaluate, FillsConsistentResult) {
  testing::ConfigGenerator gen(21);
  for (int i = 0; i < 200; ++i) {
    auto cfg = gen.next();
    for (auto p : kAllProtocols) {
      if (p == ProtocolId::Linear3 && cfg.n_nodes % 4 != 0) continue;
      const auto r = evaluate(p, cfg);
      EXPECT_EQ(r.protocol, p);
      EXPECT_EQ(r.fidelity, (1.0 + r.lambda_tot) / 2.0);
      EXPECT_EQ(r.ghz_rate_hz, 1.0 / r.gen_time_s);
      EXPECT_EQ(r.cka_asym, cka_asymptotic_rate(r.lambda_tot));
      EXPECT_NEAR(r.cka_rate_hz, r.cka_asym * r.ghz_rate_hz, 1e-12 * r.cka_rate_hz);
      EXPECT_GE(r.fidelity, 0.5);
      EXPECT_LE(r.fidelity, 1.0);
      EXPECT_GE(r.cka_rate_hz, 0.0);
    }
  }
}

TEST(Evaluate, Linear3NeedsMultipleOfFourNodes) {
  PhysicalConfig cfg = example_profile();
  cfg.n_nodes = 6;
  EXPECT_THROW(evaluate(ProtocolId::Linear3, cfg), DomainError);
  EXPECT_NO_THROW(evaluate(ProtocolId::Linear2, cfg));
  cfg.n_nodes = 8;
  EXPECT_NO_THROW(evaluate(ProtocolId::Linear3, cfg));
}

TEST(Evaluate, ZeroNoiseHasFullKeyFraction) {
  PhysicalConfig cfg = testing::zero_noise(example_profile());
  cfg.d_km = 15.0;
  for (auto p : kAllProtocols) {
    const auto r = evaluate(p, cfg);
    EXPECT_EQ(r.fidelity, 1.0);
    EXPECT_EQ(r.cka_asym, 1.0);
  }
}

TEST(Evaluate, MonotoneInDistance) {
  PhysicalConfig cfg = example_profile();
  for (int n : {4, 6, 8, 10}) {
    cfg.n_nodes = n;
    for (auto p : kAllProtocols) {
      if (p == ProtocolId::Linear3 && n % 4 != 0) continue;
      double prev_f = 2.0, prev_t = 0.0;
      for (int d = 0; d <= 100; ++d) {
        cfg.d_km = d;
        const auto r = evaluate(p, cfg);
        EXPECT_LE(r.fidelity, prev_f) << to_string(p) << " N=" << n << " d=" << d;
        EXPECT_GE(r.gen_time_s, prev_t) << to_string(p) << " N=" << n << " d=" << d;
        prev_f = r.fidelity;
        prev_t = r.gen_time_s;
      }
    }
  }
}

TEST(ProtocolId, Names) {
  for (auto p : kAllProtocols) EXPECT_EQ(protocol_from_string(to_string(p)), p);
  EXPECT_FALSE(protocol_from_string("Linear7").has_value());
  EXPECT_TRUE(is_linear(ProtocolId::Linear6));
  EXPECT_FALSE(is_linear(ProtocolId::Circular2));
}

}  // namespace
}  // namespace ghz
