#pragma once

#include <functional>

namespace esetlab {

struct QuadratureResult {
    double value = 0.0;
    bool converged = true;
    long evaluations = 0;
};

/// Adaptive Simpson integration of f over [a, b] with interval bisection.
/// Stops refining a subinterval once the usual Richardson estimate drops
/// below the (locally apportioned) absolute tolerance. A hard evaluation cap
/// keeps near-singular integrands from spinning; the result is then marked
/// not converged instead of throwing.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol = 1e-10, long max_evaluations = 1'000'000);

}  // namespace esetlab
