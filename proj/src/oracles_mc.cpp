#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ghzcka/errors.h"
#include "ghzcka/oracles.h"

namespace ghz::oracle {
namespace {

// Samples are split into a fixed number of chunks, each with its own
// generator seeded from (seed, chunk). Chunk statistics are merged in chunk
// order, so the result does not depend on the thread count or on whether
// the serial path is used.
constexpr int kChunks = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, int chunk) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(chunk));
}

// Running mean and sum of squared deviations.
struct Moments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

// Failures before the first success.
class FailureCounter {
 public:
  explicit FailureCounter(double p) : p_(p), dist_(p < 1.0 ? p : 0.5) {}

  template <class Rng>
  std::int64_t operator()(Rng& rng) {
    return p_ >= 1.0 ? 0 : dist_(rng);
  }

 private:
  double p_;
  std::geometric_distribution<std::int64_t> dist_;
};

template <class Sampler>
Estimate run_chunks(std::int64_t samples, std::uint64_t seed, Execution exec,
                    const Sampler& sample) {
  std::vector<Moments> chunks(kChunks);
  auto run_one = [&](int c) {
    const std::int64_t count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
    std::mt19937_64 rng(chunk_seed(seed, c));
    Moments m;
    for (std::int64_t i = 0; i < count; ++i) m.add(sample(rng));
    chunks[c] = m;
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < kChunks; ++c) run_one(c);
  } else {
    for (int c = 0; c < kChunks; ++c) run_one(c);
  }

  Moments total;
  for (const auto& m : chunks) total.merge(m);
  Estimate e;
  e.mean = total.mean;
  e.samples = total.n;
  e.std_error = total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) /
                                        static_cast<double>(total.n))
                            : 0.0;
  return e;
}

void check_common(double p, std::int64_t samples) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("success probability must be in (0, 1]");
  if (samples < kMinSamples) {
    throw DomainError("samples below minimum (" + std::to_string(kMinSamples) + ")");
  }
}

}  // namespace

Estimate mc_avg_lambda(double p_success, double a, std::int64_t samples, std::uint64_t seed,
                       Execution exec) {
  check_common(p_success, samples);
  if (!(a >= 0.0)) throw DomainError("a must be >= 0");
  return run_chunks(samples, seed, exec, [&](std::mt19937_64& rng) {
    FailureCounter failures(p_success);
    return std::exp(-a * static_cast<double>(failures(rng)));
  });
}

Estimate mc_max_geometric(int k, double p_success, std::int64_t samples, std::uint64_t seed,
                          Execution exec) {
  check_common(p_success, samples);
  if (k < 1) throw DomainError("k must be >= 1");
  return run_chunks(samples, seed, exec, [&](std::mt19937_64& rng) {
    FailureCounter failures(p_success);
    std::int64_t longest = 0;
    for (int j = 0; j < k; ++j) longest = std::max(longest, failures(rng) + 1);
    return static_cast<double>(longest);
  });
}

Estimate mc_all_succeed_rounds(int k, double p_success, std::int64_t samples,
                               std::uint64_t seed, Execution exec) {
  check_common(p_success, samples);
  if (k < 1) throw DomainError("k must be >= 1");
  return run_chunks(samples, seed, exec, [&](std::mt19937_64& rng) {
    // Jump straight to the rounds in which link 0 succeeds; only those can
    // have every link succeed. The other links are then tried in that round.
    FailureCounter failures(p_success);
    std::bernoulli_distribution link(p_success);
    std::int64_t round = 0;
    for (;;) {
      round += failures(rng) + 1;
      bool all = true;
      for (int j = 1; j < k && all; ++j) all = link(rng);
      if (all) return static_cast<double>(round);
    }
  });
}

double expected_max_geometric(int k, double p_success) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (!(p_success > 0.0 && p_success <= 1.0)) {
    throw DomainError("success probability must be in (0, 1]");
  }
  // E[max] = sum_{j>=0} P(max > j) = sum_{j>=0} 1 - (1 - q^j)^k
  const double q = 1.0 - p_success;
  double total = 0.0;
  double qj = 1.0;
  for (std::int64_t j = 0; j < 100'000'000; ++j) {
    const double tail = -std::expm1(k * std::log1p(-qj));
    total += tail;
    if (tail < 1e-17) break;
    qj *= q;
  }
  return total;
}

}  // namespace ghz::oracle
