#include "ghzcka/dephasing.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ghzcka/errors.h"

namespace ghz {
namespace {

// H_0 = 0 is needed by the reversed layouts (H_upper - H_{l-1} at l = 1).
double harmonic_from_zero(int m) {
  double h = 0.0;
  for (int n = 1; n <= m; ++n) h += 1.0 / n;
  return h;
}

using Id = DephasingFactorId;
using Layout = HarmonicLayout;
using Kind = ProcessKind;

// Row of the decoherence table -> closed form. Rows 1, 3, 4, 7, 8 and 12 store
// the decohering spin in the NV whose electron is driven, hence a0.
const std::map<Id, FactorFormula>& formula_table() {
  static const std::map<Id, FactorFormula> table = {
      {Id::L1, {Kind::SingleClick, true, Layout::None, 0, false}},
      {Id::L2, {Kind::EplPair, false, Layout::Forward, -1, true}},
      {Id::L3, {Kind::Multipartite, true, Layout::PowerOfTwo, 0, false}},
      {Id::L4, {Kind::EplPair, true, Layout::Reversed, 0, true}},
      {Id::L4p, {Kind::EplPair, false, Layout::Forward, -1, true}},
      {Id::L5, {Kind::EplPair, false, Layout::Forward, -2, true}},
      {Id::L6, {Kind::EplPair, false, Layout::Fixed, -1, true}},
      {Id::L7, {Kind::EplPair, true, Layout::Reversed, -1, true}},
      {Id::L7p, {Kind::EplPair, false, Layout::Forward, -2, true}},
      {Id::L8, {Kind::BkPair, true, Layout::Reversed, -1, true}},
      {Id::L8p, {Kind::BkPair, false, Layout::Forward, -2, true}},
      {Id::L9, {Kind::BkPair, false, Layout::Forward, -1, true}},
      {Id::L10, {Kind::BkPair, false, Layout::Fixed, -1, true}},
      {Id::L11, {Kind::SingleClick, false, Layout::Forward, -1, true}},
      {Id::L12, {Kind::SingleClick, true, Layout::Reversed, 0, true}},
  };
  return table;
}

// Harmonic weights of the product terms, in l = 1..upper order.
std::vector<double> term_weights(const FactorFormula& f, int n_nodes) {
  const int upper = n_nodes / 2 + f.upper_offset;
  switch (f.layout) {
    case Layout::None:
      return {1.0};
    case Layout::PowerOfTwo:
      return {std::ldexp(1.0, n_nodes - 2)};
    case Layout::Fixed:
      if (upper < 1) throw DomainError("harmonic index below 1");
      return {harmonic_from_zero(upper)};
    case Layout::Forward: {
      std::vector<double> w;
      for (int l = 1; l <= upper; ++l) w.push_back(harmonic_from_zero(l));
      return w;
    }
    case Layout::Reversed: {
      std::vector<double> w;
      const double top = harmonic_from_zero(upper);
      for (int l = 1; l <= upper; ++l) w.push_back(top - harmonic_from_zero(l - 1));
      return w;
    }
  }
  return {};
}

// A term is the averaged dephasing of a process whose expected number of
// attempts is scaled by `weight`, i.e. effective probability P / weight.
// Effective probabilities above 1 mean less than one attempt on average and
// are capped at 1 (no dephasing).
double averaged_term(double p, double weight, double a) {
  return avg_lambda(std::min(p / weight, 1.0), a);
}

}  // namespace

double avg_lambda(double p_success, double a) {
  if (!(p_success > 0.0 && p_success <= 1.0)) {
    throw DomainError("avg_lambda: success probability must be in (0, 1]");
  }
  if (!(a >= 0.0)) throw DomainError("avg_lambda: a must be >= 0");
  // P e^a / (e^a - 1 + P) == P / (P + (1 - P)(1 - e^{-a})). The denominator is
  // exactly P at a = 0 and stays finite for large a.
  const double denom = p_success - (1.0 - p_success) * std::expm1(-a);
  return p_success / denom;
}

double harmonic(int m) {
  if (m < 1) throw DomainError("harmonic: m must be >= 1");
  return harmonic_from_zero(m);
}

const FactorFormula& formula(DephasingFactorId id) { return formula_table().at(id); }

double dephasing_factor_ordered(DephasingFactorId id, const PhysicalConfig& cfg,
                                bool reverse) {
  const FactorFormula& f = formula(id);
  const double eta = transmittivity(cfg);
  const double p = success_probability(f.process, eta, cfg.n_nodes);
  const double a = (f.same_nv ? cfg.a0 : 0.0) + cfg.a1 * step_time(f.process, cfg);

  auto weights = term_weights(f, cfg.n_nodes);
  if (reverse) std::reverse(weights.begin(), weights.end());
  double value = 1.0;
  for (double w : weights) {
    const double term = averaged_term(p, w, a);
    value *= f.squared ? term * term : term;
  }
  return value;
}

double dephasing_factor(DephasingFactorId id, const PhysicalConfig& cfg) {
  return dephasing_factor_ordered(id, cfg, false);
}

std::string_view to_string(DephasingFactorId id) {
  switch (id) {
    case Id::L1: return "L1";
    case Id::L2: return "L2";
    case Id::L3: return "L3";
    case Id::L4: return "L4";
    case Id::L4p: return "L4p";
    case Id::L5: return "L5";
    case Id::L6: return "L6";
    case Id::L7: return "L7";
    case Id::L7p: return "L7p";
    case Id::L8: return "L8";
    case Id::L8p: return "L8p";
    case Id::L9: return "L9";
    case Id::L10: return "L10";
    case Id::L11: return "L11";
    case Id::L12: return "L12";
  }
  return "?";
}

std::optional<DephasingFactorId> dephasing_factor_from_string(std::string_view name) {
  for (auto id : kAllDephasingFactors) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

double DephasingLedger::at(DephasingFactorId id) const {
  const auto it = values.find(id);
  if (it == values.end()) {
    throw DomainError("dephasing factor " + std::string(to_string(id)) +
                      " is not defined for this configuration");
  }
  return it->second;
}

DephasingLedger compute_ledger(const PhysicalConfig& cfg) {
  DephasingLedger ledger;
  for (auto id : kAllDephasingFactors) {
    try {
      ledger.values.emplace(id, dephasing_factor(id, cfg));
    } catch (const DomainError&) {
      // Undefined for this N (only L3 when 4 does not divide N).
    }
  }
  return ledger;
}

}  // namespace ghz
