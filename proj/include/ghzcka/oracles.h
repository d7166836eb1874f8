#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ghz::oracle {

// Independent verification instruments: a small dense density-matrix
// toolkit and attempt-level Monte-Carlo estimators. None of this is used by
// the analytic engine.

inline constexpr int kMaxDenseQubits = 12;

/// 2^N x 2^N complex operator.
class DenseOperator {
 public:
  explicit DenseOperator(int n_qubits);
  DenseOperator(int n_qubits, Eigen::MatrixXcd matrix);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::MatrixXcd& matrix() { return matrix_; }
  std::complex<double> operator()(Eigen::Index r, Eigen::Index c) const {
    return matrix_(r, c);
  }

  bool is_hermitian(double tol = 1e-12) const;
  std::complex<double> trace() const { return matrix_.trace(); }
  /// Ascending eigenvalues; requires a Hermitian operator.
  Eigen::VectorXd eigenvalues() const;
  /// Tr(this * other).
  std::complex<double> trace_product(const DenseOperator& other) const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Equatorial observables cos(phi) X + sin(phi) Y, two settings per party.
struct MeasurementSettings {
  std::vector<std::pair<double, double>> angles;  // (phi_j, phi'_j)
};

/// The dephased GHZ density matrix for N qubits, 2 <= N <= kMaxDenseQubits.
DenseOperator dephased_ghz_matrix(int n_qubits, double lambda_tot);

/// |GHZ_N><GHZ_N| after a depolarizing channel of strength p on every qubit,
/// built qubit by qubit on the dense matrix.
DenseOperator depolarized_ghz_matrix(int n_qubits, double p);

/// <GHZ_N| rho |GHZ_N>.
double ghz_fidelity(const DenseOperator& rho);

/// GHZ fidelity under per-qubit depolarizing noise, summed term by term over
/// every subset S of depolarized qubits (2^N subsets).
double fidelity_depol_subset_sum(double p, int n_qubits);

/// Mermin-family operator built recursively:
///   M_1 = A_1,   M_n = 1/2 M_{n-1} (A_n + A'_n) + 1/2 M'_{n-1} (A_n - A'_n)
/// with M' obtained by swapping primed and unprimed settings. Classical
/// bound 1, GHZ quantum maximum 2^{(N-1)/2}.
DenseOperator mabk_operator(int n_qubits, const MeasurementSettings& settings);

/// Settings known to reach the GHZ maximum; used as a sanity anchor.
MeasurementSettings canonical_ghz_settings(int n_qubits);

struct MabkOptimum {
  double value = 0.0;
  MeasurementSettings settings;
};

/// Maximizes Tr(M rho) over equatorial settings for the dephased GHZ state:
/// a 16-point scan per angle inside coordinate ascent, refined by golden
/// section search, from several deterministic starting points.
MabkOptimum mabk_maximize(int n_qubits, double lambda_tot);
double mabk_value(int n_qubits, double lambda_tot);

// ---------------------------------------------------------------------------
// Monte Carlo

enum class Execution { Serial, Parallel };

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

inline constexpr std::int64_t kMinSamples = 10'000;

/// Mean of e^{-a n}, n ~ failures before the first success (support 0, 1, ...).
Estimate mc_avg_lambda(double p_success, double a, std::int64_t samples,
                       std::uint64_t seed, Execution exec = Execution::Parallel);

/// Mean of max over k independent attempt counts including the success
/// (support 1, 2, ...).
Estimate mc_max_geometric(int k, double p_success, std::int64_t samples,
                          std::uint64_t seed, Execution exec = Execution::Parallel);

/// Mean number of rounds until a round in which all k links succeed at once.
Estimate mc_all_succeed_rounds(int k, double p_success, std::int64_t samples,
                               std::uint64_t seed,
                               Execution exec = Execution::Parallel);

/// Exact E[max of k Geometric(P)] (support 1, ...) by summing the tail
/// probabilities; reference for the harmonic approximation H_k / P.
double expected_max_geometric(int k, double p_success);

}  // namespace ghz::oracle
