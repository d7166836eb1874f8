#include "ghzcka/sweep.h"

#include <charconv>
#include <cmath>

#include "ghzcka/errors.h"

namespace ghz {
namespace {

struct GridPoint {
  ProtocolId protocol;
  int n_nodes;
  double d_km;
};

std::vector<GridPoint> grid(const SweepSpec& spec) {
  const auto distances = spec.distances();
  std::vector<GridPoint> points;
  points.reserve(spec.protocols.size() * spec.n_nodes.size() * distances.size());
  for (auto p : spec.protocols) {
    for (int n : spec.n_nodes) {
      for (double d : distances) points.push_back({p, n, d});
    }
  }
  return points;
}

SweepRow evaluate_point(const PhysicalConfig& base, const GridPoint& point,
                        const CkaThresholdConfig* thresholds) {
  PhysicalConfig cfg = base;
  cfg.n_nodes = point.n_nodes;
  cfg.d_km = point.d_km;

  SweepRow row;
  row.protocol = point.protocol;
  row.n_nodes = point.n_nodes;
  row.d_km = point.d_km;
  row.eta = transmittivity(cfg);
  try {
    row.result = evaluate(point.protocol, cfg);
  } catch (const DomainError& e) {
    row.error = e.what();
    return row;
  }
  if (thresholds != nullptr) {
    if (const auto p = thresholds->find(point.n_nodes)) {
      row.above_threshold = row.result->fidelity >= fidelity_depol(*p, point.n_nodes);
    }
  }
  return row;
}

}  // namespace

void SweepSpec::validate() const {
  if (!(d_step_km > 0.0) || !std::isfinite(d_step_km)) {
    throw ConfigError("d_step must be > 0");
  }
  if (!(d_min_km >= 0.0) || !(d_max_km >= d_min_km) || !std::isfinite(d_max_km)) {
    throw ConfigError("need 0 <= d_min <= d_max");
  }
  if (n_nodes.empty()) throw ConfigError("node list is empty");
  for (int n : n_nodes) {
    if (n < 4 || n % 2 != 0) {
      throw ConfigError("node counts must be even and >= 4, got " + std::to_string(n));
    }
  }
  if (protocols.empty()) throw ConfigError("protocol list is empty");
}

std::vector<double> SweepSpec::distances() const {
  validate();
  // Index-based so that the grid does not accumulate rounding error.
  const auto steps =
      static_cast<std::int64_t>(std::floor((d_max_km - d_min_km) / d_step_km + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps + 1));
  for (std::int64_t i = 0; i <= steps; ++i) {
    out.push_back(d_min_km + static_cast<double>(i) * d_step_km);
  }
  return out;
}

std::vector<SweepRow> sweep_serial(const PhysicalConfig& base, const SweepSpec& spec,
                                   const CkaThresholdConfig* thresholds) {
  const auto points = grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const auto& point : points) rows.push_back(evaluate_point(base, point, thresholds));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const PhysicalConfig& base, const SweepSpec& spec,
                                     const CkaThresholdConfig* thresholds) {
  const auto points = grid(spec);
  std::vector<SweepRow> rows(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    rows[i] = evaluate_point(base, points[i], thresholds);
  }
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.protocol) << ',' << row.n_nodes << ',' << format_number(row.d_km)
        << ',' << format_number(row.eta) << ',';
    if (!row.result) {
      // Protocol undefined for this N: keep the row, mark every computed column.
      out << "error,error,error,error,error,error,\n";
      continue;
    }
    const auto& r = *row.result;
    out << format_number(r.lambda_tot) << ',' << format_number(r.fidelity) << ','
        << format_number(r.gen_time_s) << ',' << format_number(r.ghz_rate_hz) << ','
        << format_number(r.cka_asym) << ',' << format_number(r.cka_rate_hz) << ',';
    if (row.above_threshold) out << (*row.above_threshold ? '1' : '0');
    out << '\n';
  }
}

}  // namespace ghz
