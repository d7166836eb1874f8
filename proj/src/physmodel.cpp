#include "ghzcka/physmodel.h"

#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "ghzcka/errors.h"
#include "ghzcka/kvfile.h"

namespace ghz {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool in_unit_interval(double x) { return x > 0.0 && x <= 1.0; }

}  // namespace

void validate(const PhysicalConfig& cfg) {
  require(in_unit_interval(cfg.eta_detector), "eta_detector must be in (0, 1]");
  require(in_unit_interval(cfg.p_freq_conv), "p_freq_conv must be in (0, 1]");
  require(in_unit_interval(cfg.p_outcoupling), "p_outcoupling must be in (0, 1]");
  require(cfg.attenuation_length_km > 0.0, "attenuation_length_km must be > 0");
  require(std::isfinite(cfg.alpha) && cfg.alpha >= 0.0, "alpha must be >= 0");
  require(cfg.a0 >= 0.0 && std::isfinite(cfg.a0), "a0 must be >= 0");
  require(cfg.a1 >= 0.0 && std::isfinite(cfg.a1), "a1 must be >= 0");
  require(cfg.d_km >= 0.0 && std::isfinite(cfg.d_km), "d_km must be >= 0");
  require(cfg.c_km_per_s > 0.0, "c_km_per_s must be > 0");
  require(cfg.n_nodes >= 4 && cfg.n_nodes % 2 == 0, "n_nodes must be even and >= 4");
  require(cfg.t_prep_s >= 0.0, "t_prep_s must be >= 0");
  require(cfg.t_cnot_s >= 0.0, "t_cnot_s must be >= 0");
  require(cfg.t_x_s >= 0.0, "t_x_s must be >= 0");
  require(cfg.t_swap_s >= 0.0, "t_swap_s must be >= 0");
}

PhysicalConfig example_profile() {
  PhysicalConfig cfg;
  cfg.t_prep_s = 6e-6;
  cfg.t_cnot_s = 500e-6;
  cfg.t_x_s = 1e-6;
  cfg.t_swap_s = 1e-3;
  return cfg;
}

PhysicalConfig parse_config(std::string_view text) {
  PhysicalConfig cfg;
  using Setter = std::function<void(PhysicalConfig&, std::string_view)>;
  auto real = [](double PhysicalConfig::*field) -> Setter {
    return [field](PhysicalConfig& c, std::string_view v) { c.*field = parse_number(v); };
  };
  const std::map<std::string, Setter, std::less<>> setters = {
      {"eta_detector", real(&PhysicalConfig::eta_detector)},
      {"p_freq_conv", real(&PhysicalConfig::p_freq_conv)},
      {"p_outcoupling", real(&PhysicalConfig::p_outcoupling)},
      {"attenuation_length_km", real(&PhysicalConfig::attenuation_length_km)},
      {"alpha", real(&PhysicalConfig::alpha)},
      {"a0", real(&PhysicalConfig::a0)},
      {"a1", real(&PhysicalConfig::a1)},
      {"d_km", real(&PhysicalConfig::d_km)},
      {"c_km_per_s", real(&PhysicalConfig::c_km_per_s)},
      {"n_nodes", [](PhysicalConfig& c, std::string_view v) { c.n_nodes = parse_int(v); }},
      {"t_prep_s", real(&PhysicalConfig::t_prep_s)},
      {"t_cnot_s", real(&PhysicalConfig::t_cnot_s)},
      {"t_x_s", real(&PhysicalConfig::t_x_s)},
      {"t_swap_s", real(&PhysicalConfig::t_swap_s)},
  };

  std::map<std::string, bool, std::less<>> required = {
      {"t_prep_s", false}, {"t_cnot_s", false}, {"t_x_s", false}, {"t_swap_s", false}};

  for (const auto& entry : parse_key_values(text)) {
    const auto it = setters.find(entry.key);
    if (it == setters.end()) {
      throw ConfigError("line " + std::to_string(entry.line) + ": unknown key '" +
                        entry.key + "'");
    }
    try {
      it->second(cfg, entry.value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(entry.line) + ": " + e.what());
    }
    if (auto r = required.find(entry.key); r != required.end()) r->second = true;
  }
  for (const auto& [key, present] : required) {
    if (!present) throw ConfigError("missing required key '" + key + "'");
  }
  validate(cfg);
  return cfg;
}

PhysicalConfig load_config(const std::filesystem::path& path) {
  try {
    return parse_config(read_text_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

double transmittivity(const PhysicalConfig& cfg) {
  return cfg.eta_detector * cfg.p_freq_conv * cfg.p_outcoupling *
         std::pow(10.0, -cfg.alpha * cfg.d_km / cfg.attenuation_length_km);
}

double success_probability(ProcessKind kind, double eta, int n_nodes) {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("transmittivity must be in (0, 1]");
  switch (kind) {
    case ProcessKind::SingleClick:
      return (4.0 - eta) * eta / 4.0;
    case ProcessKind::EplPair:
      return eta / (2.0 * (4.0 - eta));
    case ProcessKind::BkPair:
      return eta * eta / 2.0;
    case ProcessKind::Multipartite: {
      if (n_nodes < 4 || n_nodes % 4 != 0) {
        throw DomainError("multipartite success probability needs N divisible by 4, got N=" +
                          std::to_string(n_nodes));
      }
      const int half = n_nodes / 2;
      const int quarter = n_nodes / 4;
      return (4.0 - eta) * std::pow(eta, half - 1) *
             std::pow(eta * eta - 4.0 * eta + 8.0, quarter - 1) / std::ldexp(1.0, n_nodes - 2);
    }
  }
  throw DomainError("unknown process kind");
}

double step_time(ProcessKind kind, const PhysicalConfig& cfg) {
  const double single_round = cfg.d_km / cfg.c_km_per_s + cfg.t_prep_s;
  if (kind != ProcessKind::EplPair) return single_round;
  const double p1 = success_probability(ProcessKind::SingleClick, transmittivity(cfg),
                                        cfg.n_nodes);
  return 2.0 * single_round + p1 * (cfg.t_swap_s + cfg.t_cnot_s);
}

std::string_view to_string(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::SingleClick: return "SingleClick";
    case ProcessKind::EplPair: return "EplPair";
    case ProcessKind::Multipartite: return "Multipartite";
    case ProcessKind::BkPair: return "BkPair";
  }
  return "?";
}

}  // namespace ghz
