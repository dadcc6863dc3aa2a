#include "wcentropy/population.hpp"

#include <cmath>
#include <numbers>

#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"

namespace wcentropy {

double Population::log_cdf(double x) const { return std::log(cdf(x)); }
double Population::log_sf(double x) const { return std::log(sf(x)); }

ExponentialPopulation::ExponentialPopulation(double rate) : rate_(rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ParameterError("exponential rate must be > 0 and finite");
}

double ExponentialPopulation::pdf(double x) const { return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x); }

double ExponentialPopulation::cdf(double x) const { return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x); }

double ExponentialPopulation::sf(double x) const { return x <= 0.0 ? 1.0 : std::exp(-rate_ * x); }

double ExponentialPopulation::log_cdf(double x) const {
  if (x <= 0.0) return -HUGE_VAL;
  const double r = rate_ * x;
  return r < std::numbers::ln2 ? std::log(-std::expm1(-r)) : std::log1p(-std::exp(-r));
}

double ExponentialPopulation::log_sf(double x) const { return x <= 0.0 ? 0.0 : -rate_ * x; }

double ExponentialPopulation::tail_point(double eps) const { return -std::log(eps) / rate_; }

std::string ExponentialPopulation::describe() const { return "exponential:" + format_shortest(rate_); }

}  // namespace wcentropy
