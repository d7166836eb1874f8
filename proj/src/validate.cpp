#include "ghzcka/validate.h"

#include <cmath>
#include <cstdio>

#include "ghzcka/cka.h"
#include "ghzcka/dephasing.h"
#include "ghzcka/oracles.h"

namespace ghz {
namespace {

std::string fmt(const char* format, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

std::string fmt_int(const char* format, int a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

// Within k standard errors; an exact estimator (zero spread) must match to
// rounding.
ValidationCheck statistical(std::string name, double estimate, double std_error,
                            double expected, double k_sigma) {
  ValidationCheck c;
  c.name = std::move(name);
  c.deviation = std::abs(estimate - expected);
  c.tolerance = std::max(k_sigma * std_error, 1e-12 * std::abs(expected));
  c.passed = c.deviation <= c.tolerance;
  return c;
}

}  // namespace

std::vector<ValidationCheck> run_validation(const ValidationOptions& options) {
  std::vector<ValidationCheck> checks;
  std::uint64_t stream = 0;
  auto next_seed = [&] { return options.seed + 1'000'003ULL * ++stream; };

  for (double p : {0.01, 0.1, 0.5, 0.9}) {
    for (double a : {1e-4, 1e-2, 1.0}) {
      const auto mc = oracle::mc_avg_lambda(p, a, options.samples, next_seed());
      checks.push_back(statistical(fmt("avg_lambda vs MC (P=%g, a=%g)", p, a), mc.mean,
                                   mc.std_error, avg_lambda(p, a), 3.0));
    }
  }

  for (int n = 2; n <= 6; ++n) {
    for (double lambda : {0.75, 0.9, 1.0}) {
      const double expected = std::pow(2.0, (n - 1) / 2.0) * lambda;
      ValidationCheck c;
      c.name = fmt_int("MABK value = 2^((N-1)/2) lambda (N=%d, lambda=%g)", n, lambda);
      c.deviation = std::abs(oracle::mabk_value(n, lambda) - expected);
      c.tolerance = 1e-4;
      c.passed = c.deviation <= c.tolerance;
      checks.push_back(c);
    }
  }

  for (int n : {2, 4, 6, 8, 10}) {
    ValidationCheck c;
    c.name = "depolarized fidelity closed form vs subset sum (N=" + std::to_string(n) + ")";
    for (int i = 0; i <= 20; ++i) {
      const double p = 0.05 * i;
      const double brute = oracle::fidelity_depol_subset_sum(p, n);
      const double rel = std::abs(fidelity_depol(p, n) - brute) / std::abs(brute);
      c.deviation = std::max(c.deviation, rel);
    }
    c.tolerance = 1e-12;
    c.passed = c.deviation <= c.tolerance;
    checks.push_back(c);
  }

  for (int k = 2; k <= 5; ++k) {
    const double p = 0.01;
    const auto mc = oracle::mc_max_geometric(k, p, options.samples, next_seed());
    const double approx = harmonic(k) / p;
    ValidationCheck c;
    c.name = fmt_int("E[max of %d geometric] vs H_k/P (P=%g, relative)", k, p);
    c.deviation = std::abs(mc.mean - approx) / approx;
    c.tolerance = 0.02;
    c.passed = c.deviation <= c.tolerance;
    checks.push_back(c);
  }

  for (int k = 1; k <= 3; ++k) {
    for (double p : {0.1, 0.5}) {
      const auto mc = oracle::mc_all_succeed_rounds(k, p, options.samples, next_seed());
      checks.push_back(statistical(fmt_int("rounds until %d links succeed together vs P^-k (P=%g)", k, p),
                                   mc.mean, mc.std_error, std::pow(p, -k), 3.0));
    }
  }
  return checks;
}

void print_validation(std::ostream& out, const std::vector<ValidationCheck>& checks) {
  int failed = 0;
  for (const auto& c : checks) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "deviation=%.6e tolerance=%.6e", c.deviation, c.tolerance);
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << buf << '\n';
    if (!c.passed) ++failed;
  }
  out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
}

}  // namespace ghz
