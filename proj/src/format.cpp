#include "wcentropy/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace wcentropy {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  const double mag = std::fabs(v);
  const bool plain = v == 0.0 || (mag >= 1e-5 && mag < 1e15);
  auto [ptr, ec] = plain ? std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed)
                         : std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace wcentropy
