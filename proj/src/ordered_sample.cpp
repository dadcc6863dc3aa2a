#include "wcentropy/ordered_sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"

namespace wcentropy {

namespace {

void validate(std::span<const double> values) {
  if (values.size() < 2) {
    throw ParameterError("a sample needs at least 2 observations, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw ParameterError("observation " + std::to_string(i + 1) + " is not finite");
    }
    if (v < 0.0) {
      throw ParameterError("observation " + std::to_string(i + 1) + " is negative (" + format_double(v) + ")");
    }
  }
}

}  // namespace

OrderedSample OrderedSample::from_unsorted(std::vector<double> values) {
  validate(values);
  std::sort(values.begin(), values.end());
  return OrderedSample(std::move(values));
}

OrderedSample OrderedSample::from_unsorted(std::span<const double> values) {
  return from_unsorted(std::vector<double>(values.begin(), values.end()));
}

OrderedSample OrderedSample::from_sorted(std::vector<double> values) {
  validate(values);
  if (!std::is_sorted(values.begin(), values.end())) throw ParameterError("sample is not sorted");
  return OrderedSample(std::move(values));
}

}  // namespace wcentropy
