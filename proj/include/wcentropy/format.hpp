#pragma once

#include <string>

namespace wcentropy {

/// 17 significant digits; round-trips every double exactly.
std::string format_double(double v);

/// Shortest decimal that round-trips, positional for moderate magnitudes
/// (0.5 -> "0.5", 1e-4 -> "0.0001").
std::string format_shortest(double v);

}  // namespace wcentropy
