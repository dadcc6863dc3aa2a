#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wcentropy/ordered_sample.hpp"
#include "wcentropy/weight_function.hpp"

namespace wcentropy {

// std::mt19937_64 output is fully specified by the standard, so a seed gives
// the same stream on every conforming platform.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent stream seed for (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng) noexcept;

/// n iid Exponential(rate) draws by inversion, x = -log(1 - U) / rate, sorted.
OrderedSample sample_exponential(double rate, std::size_t n, Rng& rng);

struct ConvergenceRow {
  std::size_t n = 0;
  // WCRE against the Gamma-moment closed form.
  double mean_abs_err = 0.0;
  double max_abs_err = 0.0;
  double stddev = 0.0;  // of the estimates across replications
  double truth = 0.0;
  // WCE against quadrature of the population WCE.
  double wce_mean_abs_err = 0.0;
  double wce_max_abs_err = 0.0;
  double wce_stddev = 0.0;
  double wce_truth = 0.0;
};

struct ConvergenceConfig {
  double rate = 0.5;
  std::vector<std::size_t> sizes;
  std::size_t replications = 20;
  std::uint64_t seed = 0;
  double p = 2.0;  // moment order for the integrability gate
  double a = 1.0;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ConvergenceReport {
  std::string wf;
  double rate = 0.0;
  std::vector<std::size_t> sample_sizes;
  std::size_t replications = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  std::vector<ConvergenceRow> rows;
};

/// Monte Carlo probe of the almost-sure convergence of the empirical WCRE.
/// For each size and replication, draws a sample from its own derived stream
/// (seed, size index, replication), so the report is bit-identical for a
/// given config regardless of thread count.
///
/// Throws IntegrabilityError if check_integrability(wf, p, a) is Invalid,
/// ParameterError on rate <= 0, empty or decreasing sizes, sizes < 2 or
/// zero replications, and DivergenceError if a truth value diverges.
ConvergenceReport run_convergence(const WeightFunction& wf, const ConvergenceConfig& config);

}  // namespace wcentropy
