#include <cstdlib>
#include <string_view>

#include "wcentropy/error.hpp"
#include "wcentropy/kernels/order_stat_sums.hpp"

namespace wcentropy::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(WCENTROPY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("WCENTROPY_ISA")) {
    const std::string_view pinned(env);
    if (pinned == "scalar") return Isa::Scalar;
    if (pinned == "avx2" && isa_available(Isa::Avx2)) return Isa::Avx2;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa best_isa() noexcept {
  static const Isa chosen = detect();
  return chosen;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (isa_available(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

OrderStatSums order_stat_sums(std::span<const double> psi, Isa isa) {
  if (!isa_available(isa)) {
    throw ParameterError("kernel variant '" + std::string(to_string(isa)) + "' is not available on this CPU");
  }
  switch (isa) {
#if defined(WCENTROPY_HAVE_AVX2)
    case Isa::Avx2: return avx2::order_stat_sums(psi);
#endif
    default: return scalar::order_stat_sums(psi);
  }
}

}  // namespace wcentropy::kernels
