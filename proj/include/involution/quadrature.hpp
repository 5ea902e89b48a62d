#pragma once

#include <functional>

namespace invo {

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
/// Subdivides until the local K15-G7 error estimate meets the tolerance
/// apportioned by subinterval length.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 40);

}  // namespace invo
