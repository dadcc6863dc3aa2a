#include "wcentropy/closed_form.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"
#include "wcentropy/quadrature.hpp"

namespace wcentropy {

namespace {

constexpr double kTailEps = 1e-16;

// Safe for phi(x) = inf when the survival factor has underflowed to 0.
double weighted(const WeightFunction& wf, double x, double factor) {
  return factor == 0.0 ? 0.0 : wf.evaluate(x) * factor;
}

// -u log u given u and log u, with 0 log 0 := 0.
double neg_u_log_u(double u, double log_u) { return u == 0.0 ? 0.0 : -u * log_u; }

double truncation(const Population& pop) { return pop.tail_point(kTailEps); }

void require_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ParameterError("exponential rate must be > 0 and finite");
}

// exp(y^2) erfc(y), y >= 0.
double erfcx(double y) {
  if (y < 25.0) return std::exp(y * y) * std::erfc(y);
  // Asymptotic: 1/(y sqrt(pi)) sum_k (-1)^k (2k-1)!! / (2y^2)^k
  const double w = 1.0 / (2.0 * y * y);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 10; ++k) {
    term *= -(2.0 * k - 1.0) * w;
    sum += term;
  }
  return sum / (y * std::sqrt(std::numbers::pi));
}

// 1 - sqrt(pi) y erfcx(y), evaluated without cancellation for large y.
double one_minus_mills(double y) {
  if (y < 20.0) return 1.0 - std::sqrt(std::numbers::pi) * y * erfcx(y);
  // sum_{k>=1} (-1)^{k+1} (2k-1)!! / (2y^2)^k
  const double w = 1.0 / (2.0 * y * y);
  double term = -1.0;
  double sum = 0.0;
  for (int k = 1; k < 12; ++k) {
    term *= -(2.0 * k - 1.0) * w;
    sum += term;
  }
  return sum;
}

}  // namespace

double factorial(unsigned k) {
  if (k <= 20) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return static_cast<double>(f);
  }
  double f = factorial(20);
  for (unsigned i = 21; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

double wcre_quadrature(const Population& pop, const WeightFunction& wf) {
  auto integrand = [&](double x) { return weighted(wf, x, neg_u_log_u(pop.sf(x), pop.log_sf(x))); };
  return integrate_to_infinity(integrand, truncation(pop)).value;
}

double wce_quadrature(const Population& pop, const WeightFunction& wf) {
  auto integrand = [&](double x) { return weighted(wf, x, neg_u_log_u(pop.cdf(x), pop.log_cdf(x))); };
  return integrate_to_infinity(integrand, truncation(pop)).value;
}

double wcre_exponential_gamma(double rate, const WeightFunction& wf) {
  require_rate(rate);
  const auto params = wf.params();
  switch (wf.family()) {
    case WeightFamily::Constant: return params[0] / rate;
    case WeightFamily::Identity: return factorial(2) / (rate * rate);
    case WeightFamily::Polynomial: {
      double sum = 0.0;
      double power = rate;  // rate^(i+1)
      for (std::size_t i = 0; i < params.size(); ++i, power *= rate) {
        if (params[i] != 0.0) sum += params[i] * factorial(static_cast<unsigned>(i + 1)) / power;
      }
      return sum;
    }
    case WeightFamily::ExponentialTilt: {
      const double t = params[0];
      if (t >= rate) {
        throw DivergenceError("E[exp(t Z)] is infinite for t = " + format_shortest(t) + " >= rate " +
                              format_shortest(rate));
      }
      const double r = rate / (rate - t);
      return r * r / rate;
    }
    case WeightFamily::Gaussian: {
      const double s = params[0];
      return rate * s * s * one_minus_mills(rate * s / std::numbers::sqrt2);
    }
  }
  return 0.0;
}

double wcre_exponential_gamma_quadrature(double rate, const WeightFunction& wf) {
  require_rate(rate);
  // Gamma(2, 1/rate) density rate^2 z e^{-rate z}, times 1/rate.
  auto integrand = [&](double z) { return weighted(wf, z, rate * z * std::exp(-rate * z)); };
  return integrate_to_infinity(integrand, ExponentialPopulation(rate).tail_point(kTailEps)).value;
}

IdentityReport check_kl_identity(const Population& pop, const WeightFunction& wf, double tolerance) {
  IdentityReport report;
  report.identity = "kl";
  report.population = pop.describe();
  report.wf = wf.spec();
  report.tolerance = tolerance;
  const double cut = truncation(pop);

  report.lhs = wcre_quadrature(pop, wf);

  // g log(g / h) with g = phi sf, h = phi; zero where g vanishes.
  auto kl_phi = [&](double x) {
    const double sf = pop.sf(x);
    if (sf == 0.0) return 0.0;
    const double phi = wf.evaluate(x);
    const double g = phi * sf;
    return g == 0.0 ? 0.0 : g * std::log(g / phi);
  };
  report.rhs = -integrate_to_infinity(kl_phi, cut).value;
  report.abs_discrepancy = std::fabs(report.lhs - report.rhs);
  report.pass = report.abs_discrepancy <= tolerance;

  // Second form, E(g) + D(phi sf || sf). Informational only.
  auto kl_sf = [&](double x) {
    const double sf = pop.sf(x);
    if (sf == 0.0) return 0.0;
    const double g = wf.evaluate(x) * sf;
    return g == 0.0 ? 0.0 : g * std::log(g / sf);
  };
  auto self_entropy = [&](auto&& g_of) {
    return [&, g_of](double x) {
      const double g = g_of(x);
      return g == 0.0 ? 0.0 : -g * std::log(g);
    };
  };
  auto try_integral = [&](const Integrand& f) -> std::optional<double> {
    try {
      return integrate_to_infinity(f, cut).value;
    } catch (const DivergenceError&) {
      return std::nullopt;
    }
  };
  const auto d_sf = try_integral(kl_sf);
  const auto e_phi_cdf = try_integral(self_entropy([&](double x) { return wf.evaluate(x) * pop.cdf(x); }));
  const auto e_phi_sf = try_integral(self_entropy([&](double x) { return weighted(wf, x, pop.sf(x)); }));
  auto residual = [&](const std::optional<double>& e) -> std::optional<double> {
    if (!e || !d_sf) return std::nullopt;
    return std::fabs(report.lhs - (*e + *d_sf));
  };
  report.notes.emplace_back("second_form_residual_phi_cdf", residual(e_phi_cdf));
  report.notes.emplace_back("second_form_residual_phi_sf", residual(e_phi_sf));
  return report;
}

IdentityReport check_equilibrium_identity(const Population& pop, const WeightFunction& wf, double tolerance) {
  IdentityReport report;
  report.identity = "equilibrium";
  report.population = pop.describe();
  report.wf = wf.spec();
  report.tolerance = tolerance;
  const double cut = truncation(pop);
  const double mean = pop.mean();
  const double log_mean = std::log(mean);

  auto weighted_entropy = [&](double x) {
    const double sf = pop.sf(x);
    if (sf == 0.0) return 0.0;
    const double fe = sf / mean;
    return -wf.evaluate(x) * fe * (pop.log_sf(x) - log_mean);
  };
  const double h_equilibrium = integrate_to_infinity(weighted_entropy, cut).value;
  const double weighted_sf = integrate_to_infinity([&](double x) { return weighted(wf, x, pop.sf(x)); }, cut).value;

  report.lhs = mean * h_equilibrium;
  report.rhs = wcre_quadrature(pop, wf) + log_mean * weighted_sf;
  report.abs_discrepancy = std::fabs(report.lhs - report.rhs);
  report.pass = report.abs_discrepancy <= tolerance;
  report.notes.emplace_back("h_equilibrium", h_equilibrium);
  report.notes.emplace_back("int_phi_sf", weighted_sf);
  return report;
}

std::vector<IdentityGridPoint> default_identity_grid() {
  std::vector<IdentityGridPoint> grid;
  for (const auto& wf : {WeightFunction::constant(1.0), WeightFunction::gaussian(1.0),
                         WeightFunction::exponential_tilt(-0.5)}) {
    for (double rate : {0.25, 0.5, 1.0, 2.0, 5.0}) grid.push_back({rate, wf});
  }
  return grid;
}

}  // namespace wcentropy
