#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ghz {

struct ValidationCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationOptions {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 20170921;
};

/// Runs every oracle comparison: averaged dephasing vs Monte Carlo, the MABK
/// value of the dephased GHZ state, the depolarized-fidelity closed form vs
/// subset enumeration, and the harmonic waiting-time terms vs Monte Carlo.
std::vector<ValidationCheck> run_validation(const ValidationOptions& options);

void print_validation(std::ostream& out, const std::vector<ValidationCheck>& checks);

}  // namespace ghz
