#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ghzcka/sweep.h"

namespace ghz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

struct SweepOptions {
  std::string config_path;
  std::optional<std::string> thresholds_path;
  SweepSpec spec;
  std::optional<std::string> out_path;  // stdout when empty
  bool serial = false;
};

struct ReportOptions {
  std::string config_path;
  std::optional<std::string> thresholds_path;
  int n_nodes = 4;
  double d_km = 0.0;
  std::vector<ProtocolId> protocols{kAllProtocols.begin(), kAllProtocols.end()};
  bool dump_lambdas = false;
};

struct ValidateOptions {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 20170921;
};

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);
int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);

/// `--dump-lambdas`: id,value for every dephasing factor at `cfg`.
void dump_lambdas(std::ostream& out, const PhysicalConfig& cfg);

/// Comma-separated protocol names; ConfigError on unknown names.
std::vector<ProtocolId> parse_protocol_list(const std::string& text);
/// Comma-separated node counts.
std::vector<int> parse_node_list(const std::string& text);

}  // namespace ghz::cli
