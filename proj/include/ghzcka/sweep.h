#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ghzcka/cka.h"
#include "ghzcka/physmodel.h"
#include "ghzcka/protocols.h"

namespace ghz {

struct SweepSpec {
  double d_min_km = 0.0;
  double d_max_km = 100.0;
  double d_step_km = 5.0;
  std::vector<int> n_nodes = {4};
  std::vector<ProtocolId> protocols{kAllProtocols.begin(), kAllProtocols.end()};

  /// Throws ConfigError if the grid is empty or malformed.
  void validate() const;
  /// d_min + i * d_step for every i keeping the value <= d_max.
  std::vector<double> distances() const;
};

struct SweepRow {
  ProtocolId protocol = ProtocolId::Linear1;
  int n_nodes = 0;
  double d_km = 0.0;
  double eta = 0.0;
  std::optional<ProtocolResult> result;  // empty when the protocol is undefined
  std::string error;
  std::optional<bool> above_threshold;
};

/// Rows are ordered by (protocol, N, d) following the order in `spec`.
std::vector<SweepRow> sweep_serial(const PhysicalConfig& base, const SweepSpec& spec,
                                   const CkaThresholdConfig* thresholds = nullptr);
/// Same rows as sweep_serial; grid points are evaluated with OpenMP.
std::vector<SweepRow> sweep_parallel(const PhysicalConfig& base, const SweepSpec& spec,
                                     const CkaThresholdConfig* thresholds = nullptr);

inline constexpr const char* kSweepCsvHeader =
    "protocol,n_nodes,d_km,eta,lambda_tot,fidelity,gen_time_s,ghz_rate_hz,"
    "cka_asym,cka_rate_hz,above_threshold";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double value);

}  // namespace ghz
