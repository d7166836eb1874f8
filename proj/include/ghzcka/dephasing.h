#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "ghzcka/physmodel.h"

namespace ghz {

/// Attempt-averaged dephasing P e^a / (e^a - 1 + P): the mean of e^{-a n}
/// with n the number of failed attempts before the first success.
double avg_lambda(double p_success, double a);

/// H_m = sum_{n=1..m} 1/n, m >= 1.
double harmonic(int m);

/// The twelve averaged dephasing factors plus the three primed variants.
enum class DephasingFactorId {
  L1, L2, L3, L4, L4p, L5, L6, L7, L7p, L8, L8p, L9, L10, L11, L12
};

inline constexpr std::array<DephasingFactorId, 15> kAllDephasingFactors = {
    DephasingFactorId::L1,  DephasingFactorId::L2,  DephasingFactorId::L3,
    DephasingFactorId::L4,  DephasingFactorId::L4p, DephasingFactorId::L5,
    DephasingFactorId::L6,  DephasingFactorId::L7,  DephasingFactorId::L7p,
    DephasingFactorId::L8,  DephasingFactorId::L8p, DephasingFactorId::L9,
    DephasingFactorId::L10, DephasingFactorId::L11, DephasingFactorId::L12,
};

std::string_view to_string(DephasingFactorId id);
std::optional<DephasingFactorId> dephasing_factor_from_string(std::string_view name);

/// How the harmonic weights of a factor are laid out over l = 1..upper,
/// with upper = N/2 + upper_offset.
enum class HarmonicLayout {
  None,      // single averaged term, weight 1
  Forward,   // weight H_l
  Reversed,  // weight H_upper - H_{l-1}
  Fixed,     // single term with weight H_upper
  PowerOfTwo // single term with weight 2^{N-2}
};

struct FactorFormula {
  ProcessKind process;     // selects P_succ and t_step
  bool same_nv = false;    // adds a0 to the exponent
  HarmonicLayout layout = HarmonicLayout::None;
  int upper_offset = 0;
  bool squared = false;
};

/// Descriptor for `id`; the whole factor family is evaluated from these.
const FactorFormula& formula(DephasingFactorId id);

/// Closed-form value of factor `id` at `cfg`.
double dephasing_factor(DephasingFactorId id, const PhysicalConfig& cfg);

/// Same as dephasing_factor, but multiplies the product terms in the
/// given order (l descending when `reverse` is set). Used to check that
/// the result does not depend on the evaluation order.
double dephasing_factor_ordered(DephasingFactorId id, const PhysicalConfig& cfg,
                                bool reverse);

/// All factors that are defined at `cfg` (L3 is absent unless 4 | N).
struct DephasingLedger {
  std::map<DephasingFactorId, double> values;

  double at(DephasingFactorId id) const;
  bool contains(DephasingFactorId id) const { return values.count(id) != 0; }
};

DephasingLedger compute_ledger(const PhysicalConfig& cfg);

}  // namespace ghz
