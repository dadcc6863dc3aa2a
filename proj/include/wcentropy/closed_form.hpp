#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcentropy/population.hpp"
#include "wcentropy/weight_function.hpp"

namespace wcentropy {

// Population-level ground truths. Every quadrature below throws
// DivergenceError when the integral does not settle.

/// -int_0^inf phi(x) sf(x) log sf(x) dx, with u log u := 0 at u = 0.
double wcre_quadrature(const Population& pop, const WeightFunction& wf);

/// -int_0^inf phi(x) cdf(x) log cdf(x) dx.
double wce_quadrature(const Population& pop, const WeightFunction& wf);

/// For an Exponential(rate) population the WCRE equals (1/rate) E[phi(Z)]
/// with Z ~ Gamma(shape 2, scale 1/rate). Closed forms:
///   Constant/Identity/Polynomial  sum_i a_i (i+1)! / rate^(i+1)
///   ExponentialTilt               (1/rate) (rate / (rate - t))^2, t < rate
///   Gaussian                      rate s^2 (1 - sqrt(pi) y erfcx(y)),
///                                 y = rate s / sqrt(2)
/// ParameterError if rate <= 0; DivergenceError if E[phi(Z)] is infinite.
double wcre_exponential_gamma(double rate, const WeightFunction& wf);

/// The same Gamma expectation, (1/rate) int phi(z) rate^2 z e^{-rate z} dz,
/// by quadrature. Works for any weight.
double wcre_exponential_gamma_quadrature(double rate, const WeightFunction& wf);

/// Gamma(k + 1) = k! as an exact integer product for k <= 20, a floating
/// product beyond.
double factorial(unsigned k);

struct IdentityReport {
  std::string identity;
  std::string population;
  std::string wf;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_discrepancy = 0.0;
  double tolerance = 1e-8;
  bool pass = false;
  // Residuals reported for information only; nullopt when divergent.
  std::vector<std::pair<std::string, std::optional<double>>> notes;
};

/// WCRE(F) = -D(phi sf || phi), with D(g || h) = int g log(g / h). Also notes
/// the residual of the second form E(g) + D(phi sf || sf), E(g) = -int g log g,
/// under both readings g = phi cdf and g = phi sf.
IdentityReport check_kl_identity(const Population& pop, const WeightFunction& wf, double tolerance = 1e-8);

/// E[X] h_phi(X_e) = WCRE(F) + log E[X] int phi sf, where X_e has density
/// sf(x) / E[X] and h_phi(Y) = -int phi f_Y log f_Y.
IdentityReport check_equilibrium_identity(const Population& pop, const WeightFunction& wf,
                                          double tolerance = 1e-8);

struct IdentityGridPoint {
  double rate;
  WeightFunction wf;
};

/// constant:1, gaussian:1, exptilt:-0.5 crossed with rates {0.25, 0.5, 1, 2, 5}.
std::vector<IdentityGridPoint> default_identity_grid();

}  // namespace wcentropy
