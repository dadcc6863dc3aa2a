#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wcentropy {

enum class WeightFamily { Constant, Identity, Polynomial, Gaussian, ExponentialTilt };

std::string_view to_string(WeightFamily family) noexcept;

/// A nonnegative weight function phi on [0, inf) together with its exact
/// antiderivative psi(x) = int_0^x phi(t) dt.
///
/// Instances are immutable and validated on construction, so evaluation never
/// re-checks parameters. Families:
///   Constant         phi(x) = c,                       c >= 0
///   Identity         phi(x) = x
///   Polynomial       phi(x) = sum_i a_i x^i,           a_i >= 0
///   Gaussian         phi(x) = exp(-x^2 / (2 sigma^2)), sigma > 0
///   ExponentialTilt  phi(x) = exp(t x),                t real (t = 0 is phi = 1)
class WeightFunction {
 public:
  static WeightFunction constant(double c);
  static WeightFunction identity();
  static WeightFunction polynomial(std::vector<double> coefficients);
  static WeightFunction gaussian(double sigma);
  static WeightFunction exponential_tilt(double t);

  /// Parses `family:param[,param...]`, e.g. `gaussian:0.5`, `exptilt:-0.2`,
  /// `poly:1,2,0.5`, `constant:1`, `identity`. Throws ParameterError.
  static WeightFunction parse(std::string_view spec);

  WeightFamily family() const noexcept { return family_; }

  /// Family parameters in declaration order: {c}, {}, {a_0..a_n}, {sigma}, {t}.
  std::span<const double> params() const noexcept { return params_; }

  /// Degree of the polynomial growth of phi: 0 for Constant, 1 for Identity,
  /// the highest nonzero coefficient index for Polynomial. -1 if phi == 0.
  /// Meaningless (returns 0) for Gaussian and ExponentialTilt.
  int polynomial_degree() const noexcept;

  /// True if phi vanishes identically.
  bool is_zero() const noexcept;

  double evaluate(double x) const;
  double antiderivative(double x) const;

  double operator()(double x) const { return evaluate(x); }

  /// psi over a whole sample. Inputs must already be known nonnegative
  /// (e.g. the values of an OrderedSample); the family switch is hoisted
  /// out of the loop.
  void antiderivative(std::span<const double> xs, std::span<double> out) const;

  /// Canonical spec string, parseable by parse().
  std::string spec() const;

  /// Legend label: "sigma=0.5", "t=-0.2", "c=1", "identity", "poly:1,2".
  std::string label() const;

 private:
  WeightFunction(WeightFamily family, std::vector<double> params);

  WeightFamily family_;
  std::vector<double> params_;
};

enum class Validity { Valid, Invalid };

struct ValidityVerdict {
  Validity validity;
  std::string reason;

  bool valid() const noexcept { return validity == Validity::Valid; }
};

/// Decides analytically whether phi satisfies
///   int_0^a phi < inf  and  int_a^inf phi(x) x^{-p} dx < inf,
/// the hypothesis under which the empirical WCRE of an L^p variable converges
/// almost surely. Requires p > 1 and 0 < a < inf (ParameterError otherwise).
ValidityVerdict check_integrability(const WeightFunction& wf, double p, double a = 1.0);

}  // namespace wcentropy
