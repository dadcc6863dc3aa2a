#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "wcentropy/convergence.hpp"
#include "wcentropy/error.hpp"

namespace wcentropy {
namespace {

TEST(SamplingTest, DeterministicForFixedSeed) {
  Rng a(12345), b(12345);
  const auto x = sample_exponential(0.5, 50, a);
  const auto y = sample_exponential(0.5, 50, b);
  ASSERT_EQ(x.size(), 50u);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(x[i], y[i]);
}

TEST(SamplingTest, StreamIsPinned) {
  // mt19937_64 and the 53-bit conversion are fully specified; freeze one value.
  Rng rng(5489u);
  EXPECT_EQ(rng(), 14514284786278117030ULL);
  Rng again(5489u);
  EXPECT_EQ(uniform01(again), static_cast<double>(14514284786278117030ULL >> 11) * 0x1.0p-53);
}

TEST(SamplingTest, SampleMeanWithinCltBound) {
  Rng rng(derive_seed(7, 0));
  const std::size_t n = 1'000'000;
  const auto s = sample_exponential(2.0, n, rng);
  const double mean = std::accumulate(s.values().begin(), s.values().end(), 0.0) / n;
  EXPECT_LE(std::fabs(mean - 0.5), 3.0 * 0.5 / std::sqrt(static_cast<double>(n)));
}

TEST(SamplingTest, MinimalSample) {
  Rng rng(1);
  const auto s = sample_exponential(1.0, 2, rng);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_GE(s[0], 0.0);
  EXPECT_LE(s[0], s[1]);
  EXPECT_THROW(sample_exponential(0.0, 5, rng), ParameterError);
  EXPECT_THROW(sample_exponential(1.0, 1, rng), ParameterError);
}

TEST(SamplingTest, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(9, 4), derive_seed(9, 4));
}

TEST(ConvergenceTest, UnitWeightErrorDecays) {
  ConvergenceConfig cfg;
  cfg.rate = 0.5;
  cfg.sizes = {100, 1000, 10000, 100000};
  cfg.replications = 20;
  cfg.seed = 20150101;
  const auto report = run_convergence(WeightFunction::constant(1.0), cfg);
  ASSERT_EQ(report.rows.size(), 4u);
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    EXPECT_LT(report.rows[k].mean_abs_err, report.rows[k - 1].mean_abs_err);
  }
  EXPECT_EQ(report.rows.back().truth, 2.0);
  EXPECT_LE(report.rows.back().mean_abs_err, 0.02);
  for (const auto& row : report.rows) {
    EXPECT_GE(row.mean_abs_err, 0.0);
    EXPECT_GE(row.max_abs_err, row.mean_abs_err);
    EXPECT_GE(row.stddev, 0.0);
  }
}

TEST(ConvergenceTest, MinimalConfiguration) {
  ConvergenceConfig cfg;
  cfg.rate = 1.0;
  cfg.sizes = {2};
  cfg.replications = 1;
  const auto report = run_convergence(WeightFunction::constant(1.0), cfg);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].mean_abs_err, report.rows[0].max_abs_err);
  EXPECT_EQ(report.rows[0].stddev, 0.0);
  EXPECT_EQ(report.rows[0].truth, 1.0);
}

TEST(ConvergenceTest, RefusesNonIntegrableWeight) {
  ConvergenceConfig cfg;
  cfg.rate = 1.0;
  cfg.sizes = {10};
  EXPECT_THROW(run_convergence(WeightFunction::exponential_tilt(1.0), cfg), IntegrabilityError);
  EXPECT_THROW(run_convergence(WeightFunction::identity(), cfg), IntegrabilityError);  // p = 2 <= 2
  cfg.p = 3.0;
  EXPECT_NO_THROW(run_convergence(WeightFunction::identity(), cfg));
}

TEST(ConvergenceTest, RefusesExactlyTheInvalidCombinations) {
  const std::vector<WeightFunction> wfs = {
      WeightFunction::constant(1.0),          WeightFunction::identity(),
      WeightFunction::polynomial({1, 1, 1}),  WeightFunction::gaussian(0.5),
      WeightFunction::exponential_tilt(-1.0), WeightFunction::exponential_tilt(0.0),
      WeightFunction::exponential_tilt(0.1),  WeightFunction::exponential_tilt(0.5)};
  for (const auto& wf : wfs) {
    for (double p : {1.5, 2.0, 2.5, 3.5}) {
      ConvergenceConfig cfg;
      cfg.rate = 1.0;
      cfg.sizes = {5};
      cfg.replications = 2;
      cfg.p = p;
      const bool valid = check_integrability(wf, p).valid();
      if (valid) {
        EXPECT_NO_THROW(run_convergence(wf, cfg)) << wf.spec() << " p=" << p;
      } else {
        EXPECT_THROW(run_convergence(wf, cfg), IntegrabilityError) << wf.spec() << " p=" << p;
      }
    }
  }
}

TEST(ConvergenceTest, BadConfigurations) {
  const auto wf = WeightFunction::constant(1.0);
  ConvergenceConfig cfg;
  cfg.sizes = {};
  EXPECT_THROW(run_convergence(wf, cfg), ParameterError);
  cfg.sizes = {100, 10};
  EXPECT_THROW(run_convergence(wf, cfg), ParameterError);
  cfg.sizes = {1};
  EXPECT_THROW(run_convergence(wf, cfg), ParameterError);
  cfg.sizes = {10};
  cfg.replications = 0;
  EXPECT_THROW(run_convergence(wf, cfg), ParameterError);
  cfg.replications = 1;
  cfg.rate = -1.0;
  EXPECT_THROW(run_convergence(wf, cfg), ParameterError);
}

TEST(ConvergenceTest, BitIdenticalAcrossRunsAndThreadCounts) {
  ConvergenceConfig cfg;
  cfg.rate = 2.0;
  cfg.sizes = {10, 100, 1000};
  cfg.replications = 7;
  cfg.seed = 99;
  const auto wf = WeightFunction::gaussian(1.0);
  cfg.threads = 1;
  const auto a = run_convergence(wf, cfg);
  cfg.threads = 4;
  const auto b = run_convergence(wf, cfg);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    EXPECT_EQ(a.rows[k].mean_abs_err, b.rows[k].mean_abs_err);
    EXPECT_EQ(a.rows[k].max_abs_err, b.rows[k].max_abs_err);
    EXPECT_EQ(a.rows[k].stddev, b.rows[k].stddev);
    EXPECT_EQ(a.rows[k].wce_mean_abs_err, b.rows[k].wce_mean_abs_err);
  }
  cfg.seed = 100;
  EXPECT_NE(run_convergence(wf, cfg).rows[0].mean_abs_err, a.rows[0].mean_abs_err);
}

}  // namespace
}  // namespace wcentropy
