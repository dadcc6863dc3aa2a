#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wcentropy {

/// A validated sample of nonnegative observations in nondecreasing order,
/// x_(1) <= ... <= x_(n), with n >= 2.
class OrderedSample {
 public:
  /// Sorts a copy of the input. Throws ParameterError on fewer than two
  /// values, a negative value, or a non-finite value.
  static OrderedSample from_unsorted(std::vector<double> values);
  static OrderedSample from_unsorted(std::span<const double> values);

  /// Validates without sorting; throws ParameterError if not nondecreasing.
  static OrderedSample from_sorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

 private:
  explicit OrderedSample(std::vector<double> values) : values_(std::move(values)) {}

  std::vector<double> values_;
};

}  // namespace wcentropy
