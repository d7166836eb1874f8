#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string_view>

namespace ghz {

/// h(q) = -q log2 q - (1-q) log2 (1-q), with h(0) = h(1) = 0.
double binary_entropy(double q);

/// GHZ fidelity after independent depolarizing noise of strength p on each
/// of the N qubits.
double fidelity_depol(double p, int n_nodes);

/// Asymptotic conference-key fraction of the dephased GHZ state. Zero
/// (exactly) when the state no longer violates the MABK inequality, i.e.
/// lambda_tot <= 1/sqrt(2). The QBER of the state is zero.
double cka_asymptotic_rate(double lambda_tot);

/// Key fraction times GHZ rate.
double cka_total_rate(double lambda_tot, double ghz_rate_hz);

/// Maximal per-qubit depolarizing noise that still admits a positive key,
/// per node count. Values come from an external source; none are built in.
struct CkaThresholdConfig {
  std::map<int, double> p_max;

  std::optional<double> find(int n_nodes) const;
};

/// Lines of the form `N = p_max`.
CkaThresholdConfig load_thresholds(const std::filesystem::path& path);
CkaThresholdConfig parse_thresholds(std::string_view text);

/// fidelity_depol(p_max(N), N). ConfigError when N is missing.
double threshold_fidelity(int n_nodes, const CkaThresholdConfig& thresholds);

}  // namespace ghz
