#include "wcentropy/weight_function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"

namespace wcentropy {

namespace {

double parse_number(std::string_view text, std::string_view spec) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && *first == ' ') ++first;
  while (last != first && *(last - 1) == ' ') --last;
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParameterError("weight function '" + std::string(spec) + "': cannot parse parameter '" +
                         std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view spec) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start), spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ParameterError(std::string(what) + " must be finite");
}

void require_nonnegative_x(double x) {
  if (!(x >= 0.0)) throw DomainError("weight function argument must be >= 0, got " + format_double(x));
}

}  // namespace

std::string_view to_string(WeightFamily family) noexcept {
  switch (family) {
    case WeightFamily::Constant: return "constant";
    case WeightFamily::Identity: return "identity";
    case WeightFamily::Polynomial: return "poly";
    case WeightFamily::Gaussian: return "gaussian";
    case WeightFamily::ExponentialTilt: return "exptilt";
  }
  return "unknown";
}

WeightFunction::WeightFunction(WeightFamily family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {}

WeightFunction WeightFunction::constant(double c) {
  require_finite(c, "constant weight");
  if (c < 0.0) throw ParameterError("constant weight must be >= 0");
  return WeightFunction(WeightFamily::Constant, {c});
}

WeightFunction WeightFunction::identity() { return WeightFunction(WeightFamily::Identity, {}); }

WeightFunction WeightFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) throw ParameterError("polynomial weight needs at least one coefficient");
  for (double a : coefficients) {
    require_finite(a, "polynomial coefficient");
    if (a < 0.0) throw ParameterError("polynomial coefficients must be >= 0");
  }
  return WeightFunction(WeightFamily::Polynomial, std::move(coefficients));
}

WeightFunction WeightFunction::gaussian(double sigma) {
  require_finite(sigma, "gaussian sigma");
  if (!(sigma > 0.0)) throw ParameterError("gaussian sigma must be > 0");
  return WeightFunction(WeightFamily::Gaussian, {sigma});
}

WeightFunction WeightFunction::exponential_tilt(double t) {
  require_finite(t, "exponential tilt");
  return WeightFunction(WeightFamily::ExponentialTilt, {t});
}

WeightFunction WeightFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  auto single = [&]() {
    auto values = parse_list(args, spec);
    if (values.size() != 1) {
      throw ParameterError("weight function '" + std::string(spec) + "' takes exactly one parameter");
    }
    return values.front();
  };

  if (name == "identity") {
    if (!args.empty()) throw ParameterError("weight function 'identity' takes no parameters");
    return identity();
  }
  if (colon == std::string_view::npos || args.empty()) {
    throw ParameterError("weight function '" + std::string(spec) + "' is missing parameters");
  }
  if (name == "constant") return constant(single());
  if (name == "gaussian") return gaussian(single());
  if (name == "exptilt") return exponential_tilt(single());
  if (name == "poly") return polynomial(parse_list(args, spec));
  throw ParameterError("unknown weight function family '" + std::string(name) +
                       "' (expected constant, identity, poly, gaussian, exptilt)");
}

int WeightFunction::polynomial_degree() const noexcept {
  switch (family_) {
    case WeightFamily::Constant: return params_[0] == 0.0 ? -1 : 0;
    case WeightFamily::Identity: return 1;
    case WeightFamily::Polynomial:
      for (int i = static_cast<int>(params_.size()) - 1; i >= 0; --i) {
        if (params_[i] != 0.0) return i;
      }
      return -1;
    default: return 0;
  }
}

bool WeightFunction::is_zero() const noexcept {
  return (family_ == WeightFamily::Constant || family_ == WeightFamily::Polynomial) &&
         polynomial_degree() < 0;
}

double WeightFunction::evaluate(double x) const {
  require_nonnegative_x(x);
  switch (family_) {
    case WeightFamily::Constant: return params_[0];
    case WeightFamily::Identity: return x;
    case WeightFamily::Polynomial: {
      double acc = 0.0;
      for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = std::fma(acc, x, *it);
      return acc;
    }
    case WeightFamily::Gaussian: {
      const double s = params_[0];
      return std::exp(-(x * x) / (2.0 * s * s));
    }
    case WeightFamily::ExponentialTilt: return std::exp(params_[0] * x);
  }
  return 0.0;
}

double WeightFunction::antiderivative(double x) const {
  require_nonnegative_x(x);
  double out = 0.0;
  antiderivative(std::span<const double>(&x, 1), std::span<double>(&out, 1));
  return out;
}

void WeightFunction::antiderivative(std::span<const double> xs, std::span<double> out) const {
  if (out.size() < xs.size()) throw ParameterError("antiderivative: output span too small");
  const std::size_t n = xs.size();
  switch (family_) {
    case WeightFamily::Constant: {
      const double c = params_[0];
      for (std::size_t k = 0; k < n; ++k) out[k] = c * xs[k];
      return;
    }
    case WeightFamily::Identity:
      for (std::size_t k = 0; k < n; ++k) out[k] = 0.5 * xs[k] * xs[k];
      return;
    case WeightFamily::Polynomial: {
      // psi(x) = x * sum_i a_i/(i+1) x^i
      std::vector<double> b(params_.size());
      for (std::size_t i = 0; i < params_.size(); ++i) b[i] = params_[i] / static_cast<double>(i + 1);
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (auto it = b.rbegin(); it != b.rend(); ++it) acc = std::fma(acc, xs[k], *it);
        out[k] = acc * xs[k];
      }
      return;
    }
    case WeightFamily::Gaussian: {
      const double s = params_[0];
      const double scale = s * std::sqrt(std::numbers::pi / 2.0);
      const double inv = 1.0 / (s * std::numbers::sqrt2);
      for (std::size_t k = 0; k < n; ++k) out[k] = scale * std::erf(xs[k] * inv);
      return;
    }
    case WeightFamily::ExponentialTilt: {
      const double t = params_[0];
      if (t == 0.0) {
        for (std::size_t k = 0; k < n; ++k) out[k] = xs[k];
      } else {
        for (std::size_t k = 0; k < n; ++k) out[k] = std::expm1(t * xs[k]) / t;
      }
      return;
    }
  }
}

std::string WeightFunction::spec() const {
  std::string s(to_string(family_));
  if (family_ == WeightFamily::Identity) return s;
  s += ':';
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) s += ',';
    s += format_shortest(params_[i]);
  }
  return s;
}

std::string WeightFunction::label() const {
  switch (family_) {
    case WeightFamily::Constant: return "c=" + format_shortest(params_[0]);
    case WeightFamily::Identity: return "identity";
    case WeightFamily::Polynomial: return spec();
    case WeightFamily::Gaussian: return "sigma=" + format_shortest(params_[0]);
    case WeightFamily::ExponentialTilt: return "t=" + format_shortest(params_[0]);
  }
  return spec();
}

ValidityVerdict check_integrability(const WeightFunction& wf, double p, double a) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("integrability exponent p must be > 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("integrability split point a must be in (0, inf)");

  // Every catalog member is continuous on [0, a], so only the tail can fail.
  switch (wf.family()) {
    case WeightFamily::Gaussian:
      return {Validity::Valid, "gaussian weight decays faster than any power"};
    case WeightFamily::ExponentialTilt: {
      const double t = wf.params()[0];
      if (t <= 0.0) return {Validity::Valid, "exp(t x) with t <= 0 is bounded"};
      return {Validity::Invalid, "exp(t x) with t = " + format_shortest(t) +
                                     " > 0 makes int_a^inf phi(x) x^-p dx diverge; t must be non-positive"};
    }
    default: break;
  }
  const int d = wf.polynomial_degree();
  if (d < 0) return {Validity::Valid, "zero weight"};
  if (p > d + 1.0) {
    return {Validity::Valid, "tail integrand grows like x^" + std::to_string(d) + "-p and p = " +
                                 format_shortest(p) + " > " + std::to_string(d + 1)};
  }
  return {Validity::Invalid, "tail integral of x^" + std::to_string(d) + "-p diverges for p = " +
                                 format_shortest(p) + " <= " + std::to_string(d + 1)};
}

}  // namespace wcentropy
