#include "ghzcka/protocols.h"

#include <cmath>
#include <string>

#include "ghzcka/cka.h"
#include "ghzcka/errors.h"

namespace ghz {
namespace {

using Id = DephasingFactorId;

constexpr LambdaTerm kLinear2[] = {{Id::L1, 1, 0}, {Id::L2, 0, 1}};
constexpr LambdaTerm kLinear3[] = {
    {Id::L1, 2, 0}, {Id::L2, 0, 2}, {Id::L4p, 0, 1}, {Id::L4, 0, 1}};
constexpr LambdaTerm kLinear4[] = {{Id::L1, 2, -2}, {Id::L2, 0, 1}, {Id::L5, 0, 1},
                                   {Id::L6, 0, 1},  {Id::L7, 0, 1}, {Id::L7p, 0, 1}};
constexpr LambdaTerm kLinear5[] = {
    {Id::L8, 0, 1}, {Id::L8p, 0, 1}, {Id::L9, 0, 1}, {Id::L10, 0, 1}};
constexpr LambdaTerm kLinear6[] = {
    {Id::L1, 1, -2}, {Id::L5, 0, 1}, {Id::L6, 0, 1}, {Id::L7, 0, 1}, {Id::L7p, 0, 1}};
constexpr LambdaTerm kCircular2[] = {{Id::L11, 0, 2}, {Id::L12, 0, 1}};

int half(const PhysicalConfig& cfg) { return cfg.n_nodes / 2; }

}  // namespace

std::string_view to_string(ProtocolId id) {
  switch (id) {
    case ProtocolId::Linear1: return "Linear1";
    case ProtocolId::Linear2: return "Linear2";
    case ProtocolId::Linear3: return "Linear3";
    case ProtocolId::Linear4: return "Linear4";
    case ProtocolId::Linear5: return "Linear5";
    case ProtocolId::Linear6: return "Linear6";
    case ProtocolId::Circular1: return "Circular1";
    case ProtocolId::Circular2: return "Circular2";
  }
  return "?";
}

std::optional<ProtocolId> protocol_from_string(std::string_view name) {
  for (auto id : kAllProtocols) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_linear(ProtocolId id) {
  return id != ProtocolId::Circular1 && id != ProtocolId::Circular2;
}

std::span<const LambdaTerm> lambda_terms(ProtocolId protocol) {
  switch (protocol) {
    case ProtocolId::Linear1:
    case ProtocolId::Circular1:
      return {};
    case ProtocolId::Linear2: return kLinear2;
    case ProtocolId::Linear3: return kLinear3;
    case ProtocolId::Linear4: return kLinear4;
    case ProtocolId::Linear5: return kLinear5;
    case ProtocolId::Linear6: return kLinear6;
    case ProtocolId::Circular2: return kCircular2;
  }
  return {};
}

void check_node_count(ProtocolId protocol, int n_nodes) {
  if (n_nodes < 4 || n_nodes % 2 != 0) {
    throw DomainError("N must be even and >= 4, got " + std::to_string(n_nodes));
  }
  // The generation time of Linear3 uses the multipartite success probability.
  if (protocol == ProtocolId::Linear3 && n_nodes % 4 != 0) {
    throw DomainError("Linear3 needs N divisible by 4, got N=" + std::to_string(n_nodes));
  }
}

double lambda_tot(ProtocolId protocol, const DephasingLedger& ledger, int n_nodes) {
  double total = 1.0;
  for (const auto& term : lambda_terms(protocol)) {
    total *= std::pow(ledger.at(term.factor), term.exponent(n_nodes));
  }
  return total;
}

double lambda_tot(ProtocolId protocol, const PhysicalConfig& cfg) {
  check_node_count(protocol, cfg.n_nodes);
  double total = 1.0;
  for (const auto& term : lambda_terms(protocol)) {
    total *= std::pow(dephasing_factor(term.factor, cfg), term.exponent(cfg.n_nodes));
  }
  return total;
}

double fidelity(ProtocolId protocol, const PhysicalConfig& cfg) {
  return GhzDiagonalState{cfg.n_nodes, lambda_tot(protocol, cfg)}.fidelity();
}

// The BK success probability is that of table row 8, eta^2 / 2.
double barrett_kok_time(const PhysicalConfig& cfg) {
  const double eta = transmittivity(cfg);
  const double p_bk = success_probability(ProcessKind::BkPair, eta, cfg.n_nodes);
  return (cfg.d_km / (2.0 * cfg.c_km_per_s) + 2.0 * cfg.t_prep_s + cfg.t_x_s) / p_bk;
}

double epl_time(const PhysicalConfig& cfg) {
  const double eta = transmittivity(cfg);
  const double p1 = success_probability(ProcessKind::SingleClick, eta, cfg.n_nodes);
  const double link = cfg.d_km / cfg.c_km_per_s + cfg.t_prep_s;
  return (2.0 * link / p1 + cfg.t_swap_s + cfg.t_cnot_s) * (4.0 - eta) * (4.0 - eta) / 2.0;
}

double generation_time(ProtocolId protocol, const PhysicalConfig& cfg) {
  check_node_count(protocol, cfg.n_nodes);
  const double eta = transmittivity(cfg);
  if (!(eta > 0.0)) throw DomainError("transmittivity is zero; generation time is infinite");

  const int n = cfg.n_nodes;
  const double d_over_c = cfg.d_km / cfg.c_km_per_s;
  const double p1 = success_probability(ProcessKind::SingleClick, eta, n);
  const double p_bk = success_probability(ProcessKind::BkPair, eta, n);
  const double gates = cfg.t_swap_s + cfg.t_cnot_s;
  const double h_half = harmonic(half(cfg));
  const double h_half_minus = harmonic(half(cfg) - 1);

  switch (protocol) {
    case ProtocolId::Linear1:
      return (d_over_c + 4.0 * cfg.t_prep_s) / std::pow(p_bk, n - 1);
    case ProtocolId::Linear2:
      return (h_half * epl_time(cfg) + 2.0 * d_over_c + 2.0 * cfg.t_prep_s + cfg.t_x_s) /
             std::pow(p_bk, half(cfg) - 1);
    case ProtocolId::Linear3: {
      const double p3 = success_probability(ProcessKind::Multipartite, eta, n);
      const double distill = (4.0 - eta) * (4.0 - eta) *
                             std::pow(eta * eta - 4.0 * eta + 8.0, half(cfg) - 2) /
                             std::ldexp(1.0, n - 2);
      return distill * ((h_half * epl_time(cfg) + d_over_c) / (2.0 * p3) + gates);
    }
    case ProtocolId::Linear4:
      return (h_half + h_half_minus) * epl_time(cfg) + cfg.t_cnot_s;
    case ProtocolId::Linear5:
      return (h_half + h_half_minus) * barrett_kok_time(cfg) + cfg.t_cnot_s + 2.0 * cfg.t_x_s;
    case ProtocolId::Linear6:
      return h_half * barrett_kok_time(cfg) + h_half_minus * epl_time(cfg) + cfg.t_cnot_s +
             cfg.t_x_s;
    case ProtocolId::Circular1:
      return std::ldexp(1.0, n - 1) / std::pow(eta, n) * d_over_c + 2.0 * cfg.t_prep_s;
    case ProtocolId::Circular2:
      return 0.5 * std::pow(4.0 - eta, n) *
             (2.0 * h_half * (d_over_c + cfg.t_prep_s) / p1 + gates);
  }
  throw DomainError("unknown protocol");
}

ProtocolResult evaluate(ProtocolId protocol, const PhysicalConfig& cfg) {
  ProtocolResult r;
  r.protocol = protocol;
  r.eta = transmittivity(cfg);
  r.lambda_tot = lambda_tot(protocol, cfg);
  r.fidelity = GhzDiagonalState{cfg.n_nodes, r.lambda_tot}.fidelity();
  r.gen_time_s = generation_time(protocol, cfg);
  r.ghz_rate_hz = 1.0 / r.gen_time_s;
  r.cka_asym = cka_asymptotic_rate(r.lambda_tot);
  r.cka_rate_hz = cka_total_rate(r.lambda_tot, r.ghz_rate_hz);
  return r;
}

}  // namespace ghz
