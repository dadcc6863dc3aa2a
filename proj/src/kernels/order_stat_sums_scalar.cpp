#include <cmath>

#include "wcentropy/kernels/order_stat_sums.hpp"

namespace wcentropy::kernels::scalar {

namespace {

// Neumaier-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) noexcept {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const noexcept { return sum + comp; }
};

}  // namespace

OrderStatSums order_stat_sums(std::span<const double> psi) noexcept {
  const std::size_t n = psi.size();
  if (n < 2) return {};
  const double first = psi.front();
  const double last = psi.back();

  CompensatedSum below, above, wce, wcre;
  for (std::size_t k = 0; k < n; ++k) {
    below.add(last - psi[k]);
    above.add(psi[k] - first);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double gap = psi[i] - psi[i - 1];
    const double up = static_cast<double>(i);
    const double down = static_cast<double>(n - i);
    wce.add(up * gap * std::log(up));
    wcre.add(down * gap * std::log(down));
  }
  return {below.value(), above.value(), wce.value(), wcre.value()};
}

}  // namespace wcentropy::kernels::scalar
