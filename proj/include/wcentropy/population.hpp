#pragma once

#include <string>

namespace wcentropy {

/// A nonnegative continuous lifetime distribution on [0, inf).
class Population {
 public:
  virtual ~Population() = default;

  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double sf(double x) const = 0;
  virtual double mean() const = 0;

  // Overridable for accuracy where cdf or sf is close to 1.
  virtual double log_cdf(double x) const;
  virtual double log_sf(double x) const;

  /// A point beyond which sf(x) < eps.
  virtual double tail_point(double eps) const = 0;

  virtual std::string describe() const = 0;
};

class ExponentialPopulation final : public Population {
 public:
  /// Rate lambda > 0 (mean 1/lambda); ParameterError otherwise.
  explicit ExponentialPopulation(double rate);

  double rate() const noexcept { return rate_; }

  double pdf(double x) const override;
  double cdf(double x) const override;
  double sf(double x) const override;
  double mean() const override { return 1.0 / rate_; }
  double log_cdf(double x) const override;
  double log_sf(double x) const override;
  double tail_point(double eps) const override;
  std::string describe() const override;

 private:
  double rate_;
};

}  // namespace wcentropy
