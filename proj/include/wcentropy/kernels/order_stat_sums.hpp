#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace wcentropy::kernels {

// Instruction-set variants of the order-statistics reduction. Scalar is the
// reference; the others must agree with it to rounding (see tests).
enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant. Honours WCENTROPY_ISA=scalar|avx2 in the
/// environment (read once) to pin a variant for debugging.
Isa best_isa() noexcept;

std::vector<Isa> available_isas();

/// Reductions over sorted antiderivative values psi_1 <= ... <= psi_n, with
/// gaps g_i = psi_{i+1} - psi_i:
///   below_max = sum_k (psi_n - psi_k)          = n (psi_n - mean psi)
///   above_min = sum_k (psi_k - psi_1)          = n (mean psi - psi_1)
///   wce_log   = sum_{i=1}^{n-1} i g_i log i
///   wcre_log  = sum_{i=1}^{n-1} (n-i) g_i log(n-i)
/// All four are accumulated with compensated (two-sum) arithmetic.
struct OrderStatSums {
  double below_max = 0.0;
  double above_min = 0.0;
  double wce_log = 0.0;
  double wcre_log = 0.0;
};

OrderStatSums order_stat_sums(std::span<const double> psi, Isa isa);

inline OrderStatSums order_stat_sums(std::span<const double> psi) {
  return order_stat_sums(psi, best_isa());
}

namespace scalar {
OrderStatSums order_stat_sums(std::span<const double> psi) noexcept;
}  // namespace scalar

#if defined(WCENTROPY_HAVE_AVX2)
namespace avx2 {
OrderStatSums order_stat_sums(std::span<const double> psi) noexcept;
// Four-lane natural log, exposed for equivalence tests. Requires x > 0, finite.
void log4(const double* x, double* out) noexcept;
}  // namespace avx2
#endif

}  // namespace wcentropy::kernels
