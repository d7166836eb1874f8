#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ghzcka/dephasing.h"
#include "ghzcka/physmodel.h"

namespace ghz {

enum class ProtocolId {
  Linear1, Linear2, Linear3, Linear4, Linear5, Linear6, Circular1, Circular2
};

inline constexpr std::array<ProtocolId, 8> kAllProtocols = {
    ProtocolId::Linear1, ProtocolId::Linear2,   ProtocolId::Linear3,
    ProtocolId::Linear4, ProtocolId::Linear5,   ProtocolId::Linear6,
    ProtocolId::Circular1, ProtocolId::Circular2,
};

std::string_view to_string(ProtocolId id);
std::optional<ProtocolId> protocol_from_string(std::string_view name);
bool is_linear(ProtocolId id);

/// GHZ state dephased in the computational basis: weight 1/2 on |0..0> and
/// |1..1>, coherence lambda_tot / 2 between them.
struct GhzDiagonalState {
  int n_nodes = 0;
  double lambda_tot = 1.0;

  double fidelity() const { return (1.0 + lambda_tot) / 2.0; }
};

/// One factor of a protocol's lambda_tot: factor^(n_coeff * N + constant).
struct LambdaTerm {
  DephasingFactorId factor;
  int n_coeff = 0;
  int constant = 1;

  int exponent(int n_nodes) const { return n_coeff * n_nodes + constant; }
};

/// Factors accumulated by `protocol`; empty for the single-round protocols.
std::span<const LambdaTerm> lambda_terms(ProtocolId protocol);

double lambda_tot(ProtocolId protocol, const PhysicalConfig& cfg);
double lambda_tot(ProtocolId protocol, const DephasingLedger& ledger, int n_nodes);
double fidelity(ProtocolId protocol, const PhysicalConfig& cfg);

/// Expected time for one successful Barrett-Kok pair.
double barrett_kok_time(const PhysicalConfig& cfg);
/// Expected time for one distilled EPL pair.
double epl_time(const PhysicalConfig& cfg);

/// Expected time to produce one GHZ state with `protocol`.
double generation_time(ProtocolId protocol, const PhysicalConfig& cfg);

struct ProtocolResult {
  ProtocolId protocol = ProtocolId::Linear1;
  double eta = 0.0;
  double lambda_tot = 0.0;
  double fidelity = 0.0;
  double gen_time_s = 0.0;
  double ghz_rate_hz = 0.0;
  double cka_asym = 0.0;
  double cka_rate_hz = 0.0;
};

/// Fidelity, generation time and both rates for one point. Throws
/// DomainError when the protocol is undefined for cfg.n_nodes.
ProtocolResult evaluate(ProtocolId protocol, const PhysicalConfig& cfg);

/// Throws DomainError unless `protocol` is defined for `n_nodes`.
void check_node_count(ProtocolId protocol, int n_nodes);

}  // namespace ghz
