#pragma once

#include <functional>

namespace wcentropy {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive 61-point Gauss-Kronrod on [a, b].
QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tol = 1e-13);

/// int_0^inf f via the map x = u / (1 - u) with adaptive subdivision.
///
/// `truncation` is a point past which f is expected to be negligible (e.g.
/// where the survival function drops below 1e-16). The truncated integrals
/// over [0, L], [0, 2L], [0, 4L] must settle to within `abs_tol` (or 1e-9
/// relative); otherwise DivergenceError is thrown. If the mapped integral is
/// not finite, the 4L truncation is returned instead.
QuadratureResult integrate_to_infinity(const Integrand& f, double truncation, double abs_tol = 1e-10);

}  // namespace wcentropy
