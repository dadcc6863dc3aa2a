#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcentropy/kernels/order_stat_sums.hpp"
#include "wcentropy/ordered_sample.hpp"
#include "wcentropy/weight_function.hpp"

namespace wcentropy {

enum class Measure { WCRE, WCE };
enum class Method { OrderStats, PiecewiseIntegral };

std::string_view to_string(Measure m) noexcept;
std::string_view to_string(Method m) noexcept;

struct EntropyEstimate {
  Measure kind;
  double value;
  std::size_t n;
  std::string wf;  // canonical weight-function spec
  Method method;
};

struct EstimatePair {
  double wcre = 0.0;
  double wce = 0.0;
};

// Estimators expressed on psi(x_(1)) <= ... <= psi(x_(n)). Any antiderivative
// of a nonnegative weight works here, catalog member or not.

/// Telescoped order-statistics form:
///   WCE  = (psi_n - mean psi) log n - (1/n) sum_i  i    g_i log i
///   WCRE = (mean psi - psi_1) log n - (1/n) sum_i (n-i) g_i log(n-i)
EstimatePair orderstats_from_psi(std::span<const double> psi);
EstimatePair orderstats_from_psi(std::span<const double> psi, kernels::Isa isa);

/// Direct integral of the piecewise-constant empirical CDF/SF: on
/// [x_(i), x_(i+1)) the empirical CDF is i/n, so each interval contributes
/// -(u log u) (psi_{i+1} - psi_i) with u = i/n (WCE) or (n-i)/n (WCRE).
EstimatePair piecewise_from_psi(std::span<const double> psi);

EntropyEstimate wce_orderstats(const OrderedSample& s, const WeightFunction& wf);
EntropyEstimate wcre_orderstats(const OrderedSample& s, const WeightFunction& wf);
EntropyEstimate wce_piecewise(const OrderedSample& s, const WeightFunction& wf);
EntropyEstimate wcre_piecewise(const OrderedSample& s, const WeightFunction& wf);

/// Both measures through the fast path, sharing one psi evaluation.
EstimatePair estimate_orderstats(const OrderedSample& s, const WeightFunction& wf);
EstimatePair estimate_piecewise(const OrderedSample& s, const WeightFunction& wf);

struct CurvePoint {
  std::size_t n;
  double wcre;
  double wce;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// For n = n_min .. raw.size(): takes the first n raw values in listed order,
/// sorts them and emits both estimates. Throws ParameterError if
/// n_min < 2 or n_min > raw.size(), or on a negative/non-finite value.
std::vector<CurvePoint> prefix_curves(std::span<const double> raw, const WeightFunction& wf,
                                      std::size_t n_min = 2);

// How a listed sample is turned into the sequence whose prefixes are taken.
enum class PrefixOrder {
  RowMajor,     // file order
  ColumnMajor,  // down the columns of a rectangular grid
  Sorted,       // ascending: the n-th prefix holds the n smallest order statistics
};

std::string_view to_string(PrefixOrder order) noexcept;
PrefixOrder parse_prefix_order(std::string_view text);

/// Reorders `values` (laid out as rows of the given lengths) per `order`.
/// ColumnMajor needs every row to have the same length.
std::vector<double> apply_prefix_order(std::span<const double> values,
                                       std::span<const std::size_t> row_lengths, PrefixOrder order);

}  // namespace wcentropy
