#include "ghzcka/commands.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ghzcka/cka.h"
#include "ghzcka/dephasing.h"
#include "ghzcka/errors.h"
#include "ghzcka/kvfile.h"
#include "ghzcka/oracles.h"
#include "ghzcka/validate.h"

namespace ghz::cli {
namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::optional<CkaThresholdConfig> load_optional_thresholds(
    const std::optional<std::string>& path) {
  if (!path) return std::nullopt;
  return load_thresholds(*path);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

}  // namespace

std::vector<ProtocolId> parse_protocol_list(const std::string& text) {
  std::vector<ProtocolId> out;
  for (const auto& name : split_commas(text)) {
    const auto id = protocol_from_string(name);
    if (!id) throw ConfigError("unknown protocol '" + name + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  if (out.empty()) throw ConfigError("protocol list is empty");
  return out;
}

std::vector<int> parse_node_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_commas(text)) out.push_back(parse_int(item));
  if (out.empty()) throw ConfigError("node list is empty");
  return out;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    options.spec.validate();
    const PhysicalConfig cfg = load_config(options.config_path);
    const auto thresholds = load_optional_thresholds(options.thresholds_path);
    const CkaThresholdConfig* t = thresholds ? &*thresholds : nullptr;
    rows = options.serial ? sweep_serial(cfg, options.spec, t)
                          : sweep_parallel(cfg, options.spec, t);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (options.out_path) {
    std::ofstream file(*options.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *options.out_path << "'\n";
      return kExitUsage;
    }
    write_sweep_csv(file, rows);
  } else {
    write_sweep_csv(out, rows);
  }
  return kExitOk;
}

void dump_lambdas(std::ostream& out, const PhysicalConfig& cfg) {
  const DephasingLedger ledger = compute_ledger(cfg);
  out << "id,value\n";
  for (auto id : kAllDephasingFactors) {
    out << to_string(id) << ',';
    if (ledger.contains(id)) {
      out << format_number(ledger.at(id));
    } else {
      out << "error";
    }
    out << '\n';
  }
}

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
  PhysicalConfig cfg;
  std::optional<CkaThresholdConfig> thresholds;
  try {
    cfg = load_config(options.config_path);
    cfg.n_nodes = options.n_nodes;
    cfg.d_km = options.d_km;
    validate(cfg);
    thresholds = load_optional_thresholds(options.thresholds_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (options.dump_lambdas) {
    dump_lambdas(out, cfg);
    return kExitOk;
  }

  struct Line {
    ProtocolId protocol;
    std::optional<ProtocolResult> result;
    std::string error;
  };
  std::vector<Line> lines;
  for (auto p : options.protocols) {
    Line line{p, std::nullopt, {}};
    try {
      line.result = evaluate(p, cfg);
    } catch (const DomainError& e) {
      line.error = e.what();
    }
    lines.push_back(std::move(line));
  }
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.result.has_value() != b.result.has_value()) return a.result.has_value();
    if (!a.result) return false;
    return a.result->cka_rate_hz > b.result->cka_rate_hz;
  });

  std::optional<double> f_min;
  if (thresholds) {
    if (const auto p = thresholds->find(cfg.n_nodes)) f_min = fidelity_depol(*p, cfg.n_nodes);
  }

  out << "N=" << cfg.n_nodes << "  d_km=" << format_number(cfg.d_km)
      << "  eta=" << format_number(transmittivity(cfg));
  if (f_min) out << "  F_min=" << format_number(*f_min);
  out << '\n';

  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-10s %-13s %-13s %-13s %-13s %-13s %-13s %s\n",
                "protocol", "fidelity", "lambda_tot", "gen_time_s", "ghz_rate_hz", "cka_asym",
                "cka_rate_hz", "note");
  out << buf;
  for (const auto& line : lines) {
    const std::string name(to_string(line.protocol));
    if (!line.result) {
      std::snprintf(buf, sizeof(buf), "%-10s %s\n", name.c_str(),
                    ("n/a: " + line.error).c_str());
      out << buf;
      continue;
    }
    const auto& r = *line.result;
    std::string note;
    if (r.lambda_tot <= std::numbers::sqrt2 / 2.0) note = "no key";
    if (f_min && r.fidelity < *f_min) note += note.empty() ? "below F_min" : ", below F_min";
    std::snprintf(buf, sizeof(buf), "%-10s %-13s %-13s %-13s %-13s %-13s %-13s %s\n",
                  name.c_str(), sci(r.fidelity).c_str(), sci(r.lambda_tot).c_str(),
                  sci(r.gen_time_s).c_str(), sci(r.ghz_rate_hz).c_str(), sci(r.cka_asym).c_str(),
                  sci(r.cka_rate_hz).c_str(), note.c_str());
    out << buf;
  }
  return kExitOk;
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  if (options.samples < oracle::kMinSamples) {
    err << "error: samples below minimum (" << oracle::kMinSamples << ")\n";
    return kExitUsage;
  }
  const auto checks = run_validation({options.samples, options.seed});
  print_validation(out, checks);
  const bool ok = std::all_of(checks.begin(), checks.end(),
                              [](const ValidationCheck& c) { return c.passed; });
  return ok ? kExitOk : kExitValidationFailed;
}

}  // namespace ghz::cli
