#pragma once

#include <filesystem>
#include <string_view>

namespace ghz {

/// Hardware and link parameters of an NV-center network.
///
/// Lengths are in km, times in seconds. The gate and preparation durations
/// have no reference values; they must be supplied by the caller (or the
/// config file) and `validate` rejects negative values.
struct PhysicalConfig {
  double eta_detector = 1.0;
  double p_freq_conv = 0.3;
  double p_outcoupling = 0.3;
  double attenuation_length_km = 20.0;
  // Coefficient of the fiber loss exponent, 10^(-alpha d / L0). Not fixed by
  // the underlying model; 1.0 is a placeholder that users may recalibrate.
  double alpha = 1.0;
  double a0 = 1.0 / 2000.0;  // dephasing per electronic-spin attempt
  double a1 = 1.0 / 3.0;     // dephasing per second of storage
  double d_km = 0.0;
  double c_km_per_s = 2.0e5;
  int n_nodes = 4;
  double t_prep_s = 0.0;
  double t_cnot_s = 0.0;
  double t_x_s = 0.0;
  double t_swap_s = 0.0;  // electron <-> nuclear swap, S_g
};

/// Throws ConfigError when any field is outside its domain.
void validate(const PhysicalConfig& cfg);

/// Example gate-time profile used by the bundled config and the test suites.
/// Illustrative numbers of the right order for NV hardware, not measured data.
PhysicalConfig example_profile();

/// Loads a flat `key = value` file. Every PhysicalConfig field is a key;
/// the four gate-time keys are mandatory. Values may be written as a
/// decimal or as a ratio `x/y`.
PhysicalConfig load_config(const std::filesystem::path& path);
PhysicalConfig parse_config(std::string_view text);

/// Processes of the decoherence table whose success probability is needed.
/// The enumerator values are the table row indices.
enum class ProcessKind : int {
  SingleClick = 1,
  EplPair = 2,
  Multipartite = 3,
  BkPair = 8,
};

/// eta_D * p_fc * p_out * 10^(-alpha d / L0)
double transmittivity(const PhysicalConfig& cfg);

/// Per-attempt success probability of `kind` for single-channel
/// transmittivity `eta`. Multipartite requires N divisible by 4.
double success_probability(ProcessKind kind, double eta, int n_nodes);

/// Duration of one attempt of `kind`. EplPair uses the two-round step
/// 2(d/c + t_prep) + P1 (S_g + t_CNOT); every other kind uses d/c + t_prep.
double step_time(ProcessKind kind, const PhysicalConfig& cfg);

std::string_view to_string(ProcessKind kind);

}  // namespace ghz
