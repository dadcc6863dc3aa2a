#include "wcentropy/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"

namespace wcentropy {

namespace {

constexpr unsigned kMaxDepth = 20;
using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tol) {
  if (a == b) return {};
  double error = 0.0;
  const double value = Rule::integrate(f, a, b, kMaxDepth, rel_tol, &error);
  return {value, error};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double truncation, double abs_tol) {
  if (!(truncation > 0.0) || !std::isfinite(truncation)) {
    throw ParameterError("integrate_to_infinity: truncation point must be positive and finite");
  }
  const auto near = integrate(f, 0.0, truncation);
  const auto mid = integrate(f, truncation, 2.0 * truncation);
  const auto far = integrate(f, 2.0 * truncation, 4.0 * truncation);
  const double truncated = near.value + mid.value + far.value;

  if (!std::isfinite(truncated) || std::fabs(far.value) > std::max(abs_tol, 1e-9 * std::fabs(truncated))) {
    throw DivergenceError("integral does not settle: the tail over [" + format_shortest(2.0 * truncation) +
                          ", " + format_shortest(4.0 * truncation) + "] contributes " +
                          format_double(far.value));
  }

  double error = 0.0;
  const double mapped = Rule::integrate(f, 0.0, std::numeric_limits<double>::infinity(), kMaxDepth, 1e-13, &error);
  if (!std::isfinite(mapped) || !std::isfinite(error)) {
    return {truncated, near.error_estimate + mid.error_estimate + far.error_estimate};
  }
  return {mapped, error};
}

}  // namespace wcentropy
