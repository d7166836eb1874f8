#include "ghzcka/cka.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ghzcka/errors.h"
#include "ghzcka/kvfile.h"

namespace ghz {

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("binary_entropy: q must be in [0, 1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double fidelity_depol(double p, int n_nodes) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("fidelity_depol: p must be in [0, 1]");
  if (n_nodes < 2) throw DomainError("fidelity_depol: N must be >= 2");
  return 0.5 * std::pow(1.0 - p / 2.0, n_nodes) + 0.5 * std::pow(1.0 - p, n_nodes) +
         0.5 * std::pow(p / 2.0, n_nodes);
}

double cka_asymptotic_rate(double lambda_tot) {
  if (!(lambda_tot >= 0.0 && lambda_tot <= 1.0)) {
    throw DomainError("cka_asymptotic_rate: lambda_tot must be in [0, 1]");
  }
  // No MABK violation, no key. Compared on lambda itself so that rounding in
  // 2 lambda^2 - 1 cannot leave a spurious positive residue at the boundary.
  if (lambda_tot <= std::numbers::sqrt2 / 2.0) return 0.0;
  const double radicand = std::max(0.0, 2.0 * lambda_tot * lambda_tot - 1.0);
  const double rate = 1.0 - binary_entropy(0.5 + 0.5 * std::sqrt(radicand));
  return std::max(0.0, rate);
}

double cka_total_rate(double lambda_tot, double ghz_rate_hz) {
  if (!(ghz_rate_hz >= 0.0)) throw DomainError("cka_total_rate: rate must be >= 0");
  const double fraction = cka_asymptotic_rate(lambda_tot);
  return fraction == 0.0 ? 0.0 : fraction * ghz_rate_hz;
}

std::optional<double> CkaThresholdConfig::find(int n_nodes) const {
  const auto it = p_max.find(n_nodes);
  if (it == p_max.end()) return std::nullopt;
  return it->second;
}

CkaThresholdConfig parse_thresholds(std::string_view text) {
  CkaThresholdConfig out;
  for (const auto& entry : parse_key_values(text)) {
    const auto where = "line " + std::to_string(entry.line) + ": ";
    int n = 0;
    double p = 0.0;
    try {
      n = parse_int(entry.key);
      p = parse_number(entry.value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
    if (n < 2) throw ConfigError(where + "N must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(where + "p_max must be in [0, 1]");
    out.p_max[n] = p;
  }
  return out;
}

CkaThresholdConfig load_thresholds(const std::filesystem::path& path) {
  try {
    return parse_thresholds(read_text_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

double threshold_fidelity(int n_nodes, const CkaThresholdConfig& thresholds) {
  const auto p = thresholds.find(n_nodes);
  if (!p) throw ConfigError("no threshold p_max for N=" + std::to_string(n_nodes));
  return fidelity_depol(*p, n_nodes);
}

}  // namespace ghz
