#include "wcentropy/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "wcentropy/closed_form.hpp"
#include "wcentropy/empirical.hpp"
#include "wcentropy/error.hpp"
#include "wcentropy/population.hpp"

namespace wcentropy {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

double uniform01(Rng& rng) noexcept { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

OrderedSample sample_exponential(double rate, std::size_t n, Rng& rng) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ParameterError("exponential rate must be > 0 and finite");
  if (n < 2) throw ParameterError("sample size must be >= 2");
  std::vector<double> xs(n);
  for (auto& x : xs) x = -std::log1p(-uniform01(rng)) / rate;
  return OrderedSample::from_unsorted(std::move(xs));
}

namespace {

struct Stats {
  double mean_abs = 0.0;
  double max_abs = 0.0;
  double stddev = 0.0;
};

Stats summarize(const std::vector<double>& estimates, double truth) {
  Stats s;
  double mean = 0.0;
  for (double e : estimates) {
    const double err = std::fabs(e - truth);
    s.mean_abs += err;
    s.max_abs = std::max(s.max_abs, err);
    mean += e;
  }
  const double reps = static_cast<double>(estimates.size());
  s.mean_abs /= reps;
  mean /= reps;
  if (estimates.size() > 1) {
    double ss = 0.0;
    for (double e : estimates) ss += (e - mean) * (e - mean);
    s.stddev = std::sqrt(ss / (reps - 1.0));
  }
  return s;
}

}  // namespace

ConvergenceReport run_convergence(const WeightFunction& wf, const ConvergenceConfig& config) {
  if (!(config.rate > 0.0) || !std::isfinite(config.rate)) {
    throw ParameterError("exponential rate must be > 0 and finite");
  }
  if (config.sizes.empty()) throw ParameterError("at least one sample size is required");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw ParameterError("sample sizes must be nondecreasing");
  }
  if (config.sizes.front() < 2) throw ParameterError("sample sizes must be >= 2");
  if (config.replications < 1) throw ParameterError("replications must be >= 1");

  const auto verdict = check_integrability(wf, config.p, config.a);
  if (!verdict.valid()) {
    throw IntegrabilityError("weight function " + wf.spec() + " violates the integrability condition: " +
                             verdict.reason);
  }

  const double truth = wcre_exponential_gamma(config.rate, wf);
  const double wce_truth = wce_quadrature(ExponentialPopulation(config.rate), wf);

  const std::size_t sizes = config.sizes.size();
  const std::size_t reps = config.replications;
  std::vector<std::vector<double>> wcre(sizes, std::vector<double>(reps));
  std::vector<std::vector<double>> wce(sizes, std::vector<double>(reps));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < sizes * reps; task = next++) {
      const std::size_t si = task / reps;
      const std::size_t r = task % reps;
      try {
        Rng rng(derive_seed(config.seed, (static_cast<std::uint64_t>(si) << 32) | r));
        const auto sample = sample_exponential(config.rate, config.sizes[si], rng);
        const auto est = estimate_orderstats(sample, wf);
        wcre[si][r] = est.wcre;
        wce[si][r] = est.wce;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, sizes * reps));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ConvergenceReport report;
  report.wf = wf.spec();
  report.rate = config.rate;
  report.sample_sizes = config.sizes;
  report.replications = reps;
  report.seed = config.seed;
  report.p = config.p;
  for (std::size_t si = 0; si < sizes; ++si) {
    const auto a = summarize(wcre[si], truth);
    const auto b = summarize(wce[si], wce_truth);
    report.rows.push_back({config.sizes[si], a.mean_abs, a.max_abs, a.stddev, truth, b.mean_abs, b.max_abs,
                           b.stddev, wce_truth});
  }
  return report;
}

}  // namespace wcentropy
