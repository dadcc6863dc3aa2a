#include "wcentropy/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcentropy/error.hpp"

namespace wcentropy {

std::string_view to_string(Measure m) noexcept { return m == Measure::WCRE ? "WCRE" : "WCE"; }

std::string_view to_string(Method m) noexcept {
  return m == Method::OrderStats ? "OrderStats" : "PiecewiseIntegral";
}

EstimatePair orderstats_from_psi(std::span<const double> psi) {
  return orderstats_from_psi(psi, kernels::best_isa());
}

EstimatePair orderstats_from_psi(std::span<const double> psi, kernels::Isa isa) {
  if (psi.size() < 2) throw ParameterError("estimators need n >= 2");
  const auto sums = kernels::order_stat_sums(psi, isa);
  const double n = static_cast<double>(psi.size());
  const double log_n = std::log(n);
  return {
      .wcre = (sums.above_min * log_n - sums.wcre_log) / n,
      .wce = (sums.below_max * log_n - sums.wce_log) / n,
  };
}

EstimatePair piecewise_from_psi(std::span<const double> psi) {
  if (psi.size() < 2) throw ParameterError("estimators need n >= 2");
  const std::size_t n = psi.size();
  const double nd = static_cast<double>(n);
  double wcre = 0.0;
  double wce = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double width = psi[i] - psi[i - 1];
    const double cdf = static_cast<double>(i) / nd;
    const double sf = static_cast<double>(n - i) / nd;
    wce -= cdf * std::log(cdf) * width;
    wcre -= sf * std::log(sf) * width;
  }
  return {wcre, wce};
}

namespace {

std::vector<double> psi_of(const OrderedSample& s, const WeightFunction& wf) {
  std::vector<double> psi(s.size());
  wf.antiderivative(s.values(), psi);
  return psi;
}

EntropyEstimate make(Measure kind, double value, const OrderedSample& s, const WeightFunction& wf,
                     Method method) {
  return {kind, value, s.size(), wf.spec(), method};
}

}  // namespace

EstimatePair estimate_orderstats(const OrderedSample& s, const WeightFunction& wf) {
  return orderstats_from_psi(psi_of(s, wf));
}

EstimatePair estimate_piecewise(const OrderedSample& s, const WeightFunction& wf) {
  return piecewise_from_psi(psi_of(s, wf));
}

EntropyEstimate wce_orderstats(const OrderedSample& s, const WeightFunction& wf) {
  return make(Measure::WCE, estimate_orderstats(s, wf).wce, s, wf, Method::OrderStats);
}

EntropyEstimate wcre_orderstats(const OrderedSample& s, const WeightFunction& wf) {
  return make(Measure::WCRE, estimate_orderstats(s, wf).wcre, s, wf, Method::OrderStats);
}

EntropyEstimate wce_piecewise(const OrderedSample& s, const WeightFunction& wf) {
  return make(Measure::WCE, estimate_piecewise(s, wf).wce, s, wf, Method::PiecewiseIntegral);
}

EntropyEstimate wcre_piecewise(const OrderedSample& s, const WeightFunction& wf) {
  return make(Measure::WCRE, estimate_piecewise(s, wf).wcre, s, wf, Method::PiecewiseIntegral);
}

std::vector<CurvePoint> prefix_curves(std::span<const double> raw, const WeightFunction& wf,
                                      std::size_t n_min) {
  if (n_min < 2) throw ParameterError("prefix curves need n_min >= 2");
  if (n_min > raw.size()) {
    throw ParameterError("n_min = " + std::to_string(n_min) + " exceeds the sample size " +
                         std::to_string(raw.size()));
  }
  // Validates every value once up front.
  (void)OrderedSample::from_unsorted(raw);

  // Insertion keeps the prefix sorted: O(N^2) overall instead of re-sorting.
  std::vector<double> sorted;
  sorted.reserve(raw.size());
  std::vector<double> psi(raw.size());
  std::vector<CurvePoint> out;
  out.reserve(raw.size() - n_min + 1);
  for (std::size_t n = 1; n <= raw.size(); ++n) {
    const double x = raw[n - 1];
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), x), x);
    if (n < n_min) continue;
    const std::span<double> prefix_psi(psi.data(), n);
    wf.antiderivative(sorted, prefix_psi);
    const auto est = orderstats_from_psi(prefix_psi);
    out.push_back({n, est.wcre, est.wce});
  }
  return out;
}

std::string_view to_string(PrefixOrder order) noexcept {
  switch (order) {
    case PrefixOrder::RowMajor: return "row-major";
    case PrefixOrder::ColumnMajor: return "column-major";
    case PrefixOrder::Sorted: return "sorted";
  }
  return "unknown";
}

PrefixOrder parse_prefix_order(std::string_view text) {
  if (text == "row-major") return PrefixOrder::RowMajor;
  if (text == "column-major") return PrefixOrder::ColumnMajor;
  if (text == "sorted") return PrefixOrder::Sorted;
  throw ParameterError("unknown prefix order '" + std::string(text) +
                       "' (expected row-major, column-major or sorted)");
}

std::vector<double> apply_prefix_order(std::span<const double> values,
                                       std::span<const std::size_t> row_lengths, PrefixOrder order) {
  std::vector<double> out(values.begin(), values.end());
  switch (order) {
    case PrefixOrder::RowMajor: return out;
    case PrefixOrder::Sorted:
      std::sort(out.begin(), out.end());
      return out;
    case PrefixOrder::ColumnMajor: break;
  }

  std::size_t total = 0;
  for (std::size_t len : row_lengths) total += len;
  if (row_lengths.empty() || total != values.size()) {
    throw ParameterError("column-major order needs the row layout of the sample");
  }
  const std::size_t cols = row_lengths.front();
  if (!std::all_of(row_lengths.begin(), row_lengths.end(), [&](std::size_t len) { return len == cols; })) {
    throw ParameterError("column-major order needs every row to have the same number of values");
  }
  const std::size_t rows = row_lengths.size();
  out.clear();
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) out.push_back(values[r * cols + c]);
  }
  return out;
}

}  // namespace wcentropy
