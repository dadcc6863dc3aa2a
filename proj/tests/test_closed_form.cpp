#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wcentropy/closed_form.hpp"
#include "wcentropy/error.hpp"
#include "wcentropy/quadrature.hpp"

namespace wcentropy {
namespace {

// Composite trapezoid with `points` nodes; the brute-force oracle.
template <typename F>
double trapezoid(F&& f, double a, double b, std::size_t points) {
  const double h = (b - a) / static_cast<double>(points - 1);
  double sum = 0.5 * (f(a) + f(b));
  for (std::size_t k = 1; k + 1 < points; ++k) sum += f(a + h * static_cast<double>(k));
  return sum * h;
}

double neg_u_log_u(double u) { return u <= 0.0 ? 0.0 : -u * std::log(u); }

std::vector<WeightFunction> valid_catalog() {
  return {WeightFunction::constant(1.0),          WeightFunction::constant(0.3),
          WeightFunction::identity(),             WeightFunction::polynomial({1.0, 2.0, 0.5}),
          WeightFunction::polynomial({0, 0, 0, 0, 0, 1}), WeightFunction::gaussian(0.5),
          WeightFunction::gaussian(1.0),          WeightFunction::gaussian(2.0),
          WeightFunction::exponential_tilt(-1.0), WeightFunction::exponential_tilt(-0.2),
          WeightFunction::exponential_tilt(-0.0001), WeightFunction::exponential_tilt(0.0)};
}

TEST(ClosedFormTest, Factorial) {
  EXPECT_EQ(factorial(0), 1.0);
  EXPECT_EQ(factorial(1), 1.0);
  EXPECT_EQ(factorial(5), 120.0);
  EXPECT_EQ(factorial(20), 2432902008176640000.0);
  EXPECT_DOUBLE_EQ(factorial(22), 2432902008176640000.0 * 21.0 * 22.0);
  EXPECT_NEAR(factorial(30), std::tgamma(31.0), 1e-13 * std::tgamma(31.0));
}

TEST(ClosedFormTest, WcreQuadratureExamples) {
  EXPECT_NEAR(wcre_quadrature(ExponentialPopulation(1.0), WeightFunction::constant(1.0)), 1.0, 1e-12);
  for (double rate : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(wcre_quadrature(ExponentialPopulation(rate), WeightFunction::identity()), 2.0 / (rate * rate),
                1e-10 / (rate * rate));
  }
}

TEST(ClosedFormTest, WcreQuadratureMatchesTrapezoidOracle) {
  const ExponentialPopulation pop(0.5);
  const auto wf = WeightFunction::gaussian(1.0);
  const double oracle = trapezoid([&](double x) { return wf.evaluate(x) * neg_u_log_u(std::exp(-0.5 * x)); }, 0.0,
                                  40.0, 10'000'000);
  EXPECT_NEAR(oracle, 0.2809088858865769, 1e-10);  // high-precision reference, frozen
  EXPECT_NEAR(wcre_quadrature(pop, wf), oracle, 1e-8);
}

TEST(ClosedFormTest, WceQuadratureExamples) {
  const double unit = wce_quadrature(ExponentialPopulation(1.0), WeightFunction::constant(1.0));
  EXPECT_NEAR(unit, std::numbers::pi * std::numbers::pi / 6.0 - 1.0, 1e-12);
  EXPECT_NEAR(unit, 0.6449341, 1e-7);
  EXPECT_EQ(wce_quadrature(ExponentialPopulation(1.0), WeightFunction::constant(0.0)), 0.0);
  EXPECT_EQ(wce_quadrature(ExponentialPopulation(3.0), WeightFunction::polynomial({0.0, 0.0})), 0.0);
}

TEST(ClosedFormTest, WceQuadratureMatchesTrapezoidOracle) {
  const auto wf = WeightFunction::identity();
  const double oracle = trapezoid([&](double x) { return x * neg_u_log_u(-std::expm1(-2.0 * x)); }, 0.0, 40.0,
                                  10'000'000);
  EXPECT_NEAR(oracle, 0.21174774250195518, 1e-9);  // high-precision reference, frozen
  EXPECT_NEAR(wce_quadrature(ExponentialPopulation(2.0), wf), oracle, 1e-8);
}

TEST(ClosedFormTest, GammaClosedFormExamples) {
  EXPECT_DOUBLE_EQ(wcre_exponential_gamma(1.0, WeightFunction::polynomial({1.0})), 1.0);
  EXPECT_DOUBLE_EQ(wcre_exponential_gamma(2.0, WeightFunction::identity()), 0.5);
  EXPECT_DOUBLE_EQ(wcre_exponential_gamma(2.0, WeightFunction::polynomial({0.0, 1.0})), 0.5);
  EXPECT_DOUBLE_EQ(wcre_exponential_gamma(1.0, WeightFunction::exponential_tilt(-1.0)), 0.25);
  EXPECT_NEAR(wcre_exponential_gamma_quadrature(1.0, WeightFunction::exponential_tilt(-1.0)), 0.25, 1e-12);
  // Gamma(i+2)/rate^(i+1) term by term.
  EXPECT_DOUBLE_EQ(wcre_exponential_gamma(0.5, WeightFunction::polynomial({1.0, 0.5, 0.25})),
                   1.0 / 0.5 + 0.5 * 2.0 / 0.25 + 0.25 * 6.0 / 0.125);
}

TEST(ClosedFormTest, GammaErrors) {
  EXPECT_THROW(wcre_exponential_gamma(0.0, WeightFunction::identity()), ParameterError);
  EXPECT_THROW(wcre_exponential_gamma(-1.0, WeightFunction::identity()), ParameterError);
  EXPECT_THROW(wcre_exponential_gamma(1.0, WeightFunction::exponential_tilt(1.0)), DivergenceError);
  EXPECT_THROW(wcre_exponential_gamma(1.0, WeightFunction::exponential_tilt(2.0)), DivergenceError);
  EXPECT_THROW(wcre_quadrature(ExponentialPopulation(1.0), WeightFunction::exponential_tilt(2.0)), DivergenceError);
  EXPECT_THROW(wcre_exponential_gamma_quadrature(1.0, WeightFunction::exponential_tilt(1.5)), DivergenceError);
  EXPECT_THROW(ExponentialPopulation(0.0), ParameterError);
}

TEST(ClosedFormTest, GaussianClosedFormLargeArgument) {
  // rate sigma / sqrt 2 beyond the direct erfc range uses the asymptotic series.
  for (double rate : {30.0, 60.0, 200.0}) {
    const auto wf = WeightFunction::gaussian(1.0);
    EXPECT_NEAR(wcre_exponential_gamma(rate, wf), wcre_exponential_gamma_quadrature(rate, wf),
                1e-9 * wcre_exponential_gamma(rate, wf));
  }
}

// Gamma-moment closed forms against the population quadrature.
TEST(ClosedFormProperty, GammaMomentConsistency) {
  for (double rate : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    const ExponentialPopulation pop(rate);
    for (const auto& wf : valid_catalog()) {
      const double closed = wcre_exponential_gamma(rate, wf);
      EXPECT_NEAR(closed, wcre_quadrature(pop, wf), 1e-8 * std::max(1.0, closed)) << wf.spec() << " rate=" << rate;
      EXPECT_NEAR(closed, wcre_exponential_gamma_quadrature(rate, wf), 1e-8 * std::max(1.0, closed)) << wf.spec();
    }
  }
}

TEST(ClosedFormProperty, PolynomialExactness) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(1 + rng() % 6);
    for (auto& c : a) c = coef(rng);
    const double rate = std::vector<double>{0.5, 1.0, 2.0}[rng() % 3];
    const auto wf = WeightFunction::polynomial(a);
    const double closed = wcre_exponential_gamma(rate, wf);
    EXPECT_NEAR(closed, wcre_quadrature(ExponentialPopulation(rate), wf), 1e-8 * std::max(1.0, closed));
  }
}

TEST(ClosedFormProperty, DoublingTruncationIsStable) {
  for (double rate : {0.25, 1.0, 5.0}) {
    const ExponentialPopulation pop(rate);
    const double cut = pop.tail_point(1e-16);
    for (const auto& wf : {WeightFunction::constant(1.0), WeightFunction::gaussian(1.0),
                           WeightFunction::exponential_tilt(-0.5)}) {
      auto f = [&](double x) { return wf.evaluate(x) * neg_u_log_u(pop.sf(x)); };
      const double at_cut = integrate(f, 0.0, cut).value;
      const double at_double = integrate(f, 0.0, 2.0 * cut).value;
      EXPECT_LT(std::fabs(at_double - at_cut), 1e-10) << wf.spec() << " rate=" << rate;
    }
  }
}

TEST(IdentityTest, KlIdentityExamples) {
  const std::vector<std::pair<double, WeightFunction>> cases = {
      {1.0, WeightFunction::constant(1.0)},
      {1.0, WeightFunction::gaussian(1.0)},
      {2.0, WeightFunction::exponential_tilt(-0.5)},
  };
  for (const auto& [rate, wf] : cases) {
    const auto r = check_kl_identity(ExponentialPopulation(rate), wf);
    EXPECT_TRUE(r.pass) << wf.spec();
    EXPECT_LE(r.abs_discrepancy, 1e-8);
    EXPECT_EQ(r.identity, "kl");
  }
}

TEST(IdentityTest, KlSecondFormHoldsUnderSurvivalReading) {
  const auto r = check_kl_identity(ExponentialPopulation(1.0), WeightFunction::gaussian(1.0));
  ASSERT_EQ(r.notes.size(), 2u);
  ASSERT_TRUE(r.notes[1].second.has_value());
  EXPECT_LE(*r.notes[1].second, 1e-8);  // E(phi sf) + D(phi sf || sf)
  ASSERT_TRUE(r.notes[0].second.has_value());
  EXPECT_GT(*r.notes[0].second, 1e-3);  // E(phi cdf) + D(phi sf || sf) does not reproduce it
}

TEST(IdentityTest, EquilibriumIdentityExamples) {
  const auto unit = check_equilibrium_identity(ExponentialPopulation(1.0), WeightFunction::constant(1.0));
  EXPECT_NEAR(unit.lhs, 1.0, 1e-12);  // h(Exp(1)) = 1, WCRE = 1, log E[X] = 0
  EXPECT_NEAR(unit.rhs, 1.0, 1e-12);
  EXPECT_TRUE(unit.pass);
  EXPECT_TRUE(check_equilibrium_identity(ExponentialPopulation(2.0), WeightFunction::constant(1.0)).pass);
  EXPECT_TRUE(check_equilibrium_identity(ExponentialPopulation(1.0), WeightFunction::gaussian(2.0)).pass);
}

TEST(IdentityTest, DefaultGridPasses) {
  const auto grid = default_identity_grid();
  EXPECT_EQ(grid.size(), 15u);
  for (const auto& point : grid) {
    const ExponentialPopulation pop(point.rate);
    EXPECT_TRUE(check_kl_identity(pop, point.wf).pass) << point.wf.spec() << " " << point.rate;
    EXPECT_TRUE(check_equilibrium_identity(pop, point.wf).pass) << point.wf.spec() << " " << point.rate;
  }
}

TEST(IdentityTest, DivergentIdentityThrows) {
  EXPECT_THROW(check_kl_identity(ExponentialPopulation(1.0), WeightFunction::exponential_tilt(2.0)), DivergenceError);
  EXPECT_THROW(check_equilibrium_identity(ExponentialPopulation(1.0), WeightFunction::exponential_tilt(2.0)),
               DivergenceError);
}

TEST(PopulationTest, ExponentialBasics) {
  const ExponentialPopulation pop(2.0);
  EXPECT_EQ(pop.mean(), 0.5);
  EXPECT_EQ(pop.cdf(0.0), 0.0);
  EXPECT_EQ(pop.sf(0.0), 1.0);
  EXPECT_NEAR(pop.cdf(1.0) + pop.sf(1.0), 1.0, 1e-16);
  EXPECT_NEAR(pop.log_cdf(1e-12), std::log(2e-12), 1e-9);
  EXPECT_NEAR(pop.log_cdf(30.0), -std::exp(-60.0), 1e-40);
  EXPECT_EQ(pop.log_sf(3.0), -6.0);
  EXPECT_LT(pop.sf(pop.tail_point(1e-16)), 1.0001e-16);
  EXPECT_EQ(pop.describe(), "exponential:2");
}

}  // namespace
}  // namespace wcentropy
