#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "ghzcka/errors.h"
#include "ghzcka/oracles.h"

namespace ghz::oracle {
namespace {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw ResourceError("dense operators support 1.." + std::to_string(kMaxDenseQubits) +
                        " qubits, got " + std::to_string(n_qubits));
  }
}

Eigen::Index dim_of(int n_qubits) { return Eigen::Index{1} << n_qubits; }

Matrix2 equatorial(double phi) {
  Matrix2 a;
  a << Complex(0.0, 0.0), std::polar(1.0, -phi), std::polar(1.0, phi), Complex(0.0, 0.0);
  return a;
}

// lhs (x) rhs with rhs 2x2; the new qubit is the least significant one.
Eigen::MatrixXcd kron2(const Eigen::MatrixXcd& lhs, const Matrix2& rhs) {
  const Eigen::Index n = lhs.rows();
  Eigen::MatrixXcd out(2 * n, 2 * n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const Complex v = lhs(r, c);
      out(2 * r, 2 * c) = v * rhs(0, 0);
      out(2 * r, 2 * c + 1) = v * rhs(0, 1);
      out(2 * r + 1, 2 * c) = v * rhs(1, 0);
      out(2 * r + 1, 2 * c + 1) = v * rhs(1, 1);
    }
  }
  return out;
}

double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  return x < 0.0 ? x + two_pi : x;
}

}  // namespace

DenseOperator::DenseOperator(int n_qubits)
    : n_qubits_(n_qubits),
      matrix_((check_qubits(n_qubits), Eigen::MatrixXcd::Zero(dim_of(n_qubits), dim_of(n_qubits)))) {}

DenseOperator::DenseOperator(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  check_qubits(n_qubits);
  if (matrix_.rows() != dim_of(n_qubits) || matrix_.cols() != dim_of(n_qubits)) {
    throw DomainError("matrix dimension does not match 2^N");
  }
}

bool DenseOperator::is_hermitian(double tol) const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd DenseOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Complex DenseOperator::trace_product(const DenseOperator& other) const {
  if (other.dim() != dim()) throw DomainError("trace_product: dimension mismatch");
  // Tr(AB) = sum_ij A_ij B_ji
  return (matrix_.array() * other.matrix_.transpose().array()).sum();
}

DenseOperator dephased_ghz_matrix(int n_qubits, double lambda_tot) {
  if (n_qubits < 2 || n_qubits > kMaxDenseQubits) {
    throw ResourceError("dephased_ghz_matrix: N must be in 2.." +
                        std::to_string(kMaxDenseQubits));
  }
  if (!(lambda_tot >= 0.0 && lambda_tot <= 1.0)) {
    throw DomainError("dephased_ghz_matrix: lambda_tot must be in [0, 1]");
  }
  DenseOperator rho(n_qubits);
  const Eigen::Index last = rho.dim() - 1;
  rho.matrix()(0, 0) = 0.5;
  rho.matrix()(last, last) = 0.5;
  rho.matrix()(0, last) = 0.5 * lambda_tot;
  rho.matrix()(last, 0) = 0.5 * lambda_tot;
  return rho;
}

DenseOperator depolarized_ghz_matrix(int n_qubits, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing strength must be in [0, 1]");
  DenseOperator rho = dephased_ghz_matrix(n_qubits, 1.0);
  const Eigen::Index dim = rho.dim();
  for (int q = 0; q < n_qubits; ++q) {
    const Eigen::Index bit = Eigen::Index{1} << q;
    const Eigen::MatrixXcd& in = rho.matrix();
    Eigen::MatrixXcd out = (1.0 - p) * in;
    // p * Tr_q(rho) (x) I/2 on qubit q
    for (Eigen::Index c = 0; c < dim; ++c) {
      for (Eigen::Index r = 0; r < dim; ++r) {
        if ((r & bit) != (c & bit)) continue;
        const Complex reduced = in(r & ~bit, c & ~bit) + in(r | bit, c | bit);
        out(r, c) += 0.5 * p * reduced;
      }
    }
    rho.matrix() = std::move(out);
  }
  return rho;
}

double ghz_fidelity(const DenseOperator& rho) {
  const Eigen::Index last = rho.dim() - 1;
  const Complex sum = rho(0, 0) + rho(0, last) + rho(last, 0) + rho(last, last);
  return 0.5 * sum.real();
}

double fidelity_depol_subset_sum(double p, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw DomainError("subset sum supports 1..30 qubits");
  double total = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << n_qubits;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    const int w = std::popcount(s);
    const double weight = std::pow(1.0 - p, n_qubits - w) * std::pow(p, w);
    // Overlap of |GHZ> with Tr_S(|GHZ><GHZ|) (x) I/2^w.
    double overlap = 0.0;
    if (w == 0) {
      overlap = 1.0;
    } else if (w == n_qubits) {
      overlap = std::ldexp(1.0, -n_qubits);  // maximally mixed state
    } else {
      // Remaining qubits hold (|0..0><0..0| + |1..1><1..1|)/2; coherences
      // between |0..0> and |1..1> vanish with the traced-out qubits.
      overlap = 0.5 * (0.5 * std::ldexp(1.0, -w) + 0.5 * std::ldexp(1.0, -w));
    }
    total += weight * overlap;
  }
  return total;
}

DenseOperator mabk_operator(int n_qubits, const MeasurementSettings& settings) {
  if (n_qubits < 2) throw DomainError("mabk_operator: N must be >= 2");
  check_qubits(n_qubits);
  if (static_cast<int>(settings.angles.size()) != n_qubits) {
    throw DomainError("mabk_operator: expected " + std::to_string(n_qubits) +
                      " setting pairs, got " + std::to_string(settings.angles.size()));
  }
  Eigen::MatrixXcd m = equatorial(settings.angles[0].first);
  Eigen::MatrixXcd m_prime = equatorial(settings.angles[0].second);
  for (int j = 1; j < n_qubits; ++j) {
    const Matrix2 a = equatorial(settings.angles[j].first);
    const Matrix2 a_prime = equatorial(settings.angles[j].second);
    Eigen::MatrixXcd next = 0.5 * kron2(m, a + a_prime) + 0.5 * kron2(m_prime, a - a_prime);
    Eigen::MatrixXcd next_prime =
        0.5 * kron2(m_prime, a_prime + a) + 0.5 * kron2(m, a_prime - a);
    m = std::move(next);
    m_prime = std::move(next_prime);
  }
  return DenseOperator(n_qubits, std::move(m));
}

MeasurementSettings canonical_ghz_settings(int n_qubits) {
  MeasurementSettings s;
  s.angles.assign(n_qubits, {0.0, std::numbers::pi / 2.0});
  // X/Y settings give a corner element 2^{(N-1)/2} e^{-i(N-1)pi/4}; rotating
  // the last party removes the phase.
  const double shift = -(n_qubits - 1) * std::numbers::pi / 4.0;
  s.angles.back() = {wrap_angle(shift), wrap_angle(shift + std::numbers::pi / 2.0)};
  return s;
}

MabkOptimum mabk_maximize(int n_qubits, double lambda_tot) {
  if (n_qubits < 2 || n_qubits > 8) throw ResourceError("mabk_value: N must be in 2..8");
  const DenseOperator rho = dephased_ghz_matrix(n_qubits, lambda_tot);
  const int n_angles = 2 * n_qubits;

  auto objective = [&](const std::vector<double>& x) {
    MeasurementSettings s;
    s.angles.reserve(n_qubits);
    for (int j = 0; j < n_qubits; ++j) s.angles.emplace_back(x[2 * j], x[2 * j + 1]);
    return mabk_operator(n_qubits, s).trace_product(rho).real();
  };

  constexpr int kGridPoints = 16;
  constexpr int kStarts = 4;
  constexpr int kMaxSweeps = 200;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;

  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n_qubits));
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);

  MabkOptimum best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int start = 0; start < kStarts; ++start) {
    std::vector<double> x(n_angles);
    for (auto& v : x) v = uniform(rng);
    double fx = objective(x);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      const double before = fx;
      for (int i = 0; i < n_angles; ++i) {
        // Coarse scan of this angle with the others held fixed.
        double best_angle = x[i];
        double best_f = fx;
        const double origin = x[i];
        for (int g = 0; g < kGridPoints; ++g) {
          x[i] = wrap_angle(origin + kTwoPi * g / kGridPoints);
          const double f = objective(x);
          if (f > best_f) {
            best_f = f;
            best_angle = x[i];
          }
        }
        // Golden-section refinement within one grid cell either side.
        double lo = best_angle - kTwoPi / kGridPoints;
        double hi = best_angle + kTwoPi / kGridPoints;
        double c = hi - golden * (hi - lo);
        double d = lo + golden * (hi - lo);
        x[i] = c;
        double fc = objective(x);
        x[i] = d;
        double fd = objective(x);
        while (hi - lo > 1e-10) {
          if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - golden * (hi - lo);
            x[i] = c;
            fc = objective(x);
          } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + golden * (hi - lo);
            x[i] = d;
            fd = objective(x);
          }
        }
        const double refined = 0.5 * (lo + hi);
        x[i] = refined;
        const double f_refined = objective(x);
        if (f_refined >= best_f) {
          x[i] = wrap_angle(refined);
          fx = f_refined;
        } else {
          x[i] = best_angle;
          fx = best_f;
        }
      }
      if (fx - before <= 1e-13) break;
    }

    if (fx > best.value) {
      best.value = fx;
      best.settings.angles.clear();
      for (int j = 0; j < n_qubits; ++j) best.settings.angles.emplace_back(x[2 * j], x[2 * j + 1]);
    }
  }
  return best;
}

double mabk_value(int n_qubits, double lambda_tot) {
  return mabk_maximize(n_qubits, lambda_tot).value;
}

}  // namespace ghz::oracle
