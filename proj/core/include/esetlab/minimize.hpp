#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace esetlab {

struct MinimumResult {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section search on [a, b]; assumes a single local minimum inside.
/// The stop test widens to a few ulps of the endpoints so brackets sitting
/// at large abscissae terminate, with an iteration cap as the backstop.
template <class F>
MinimumResult golden_section_minimize(F&& f, double a, double b, double x_tol = 1e-12) {
    constexpr double invphi = 0.6180339887498949;
    const double tol = std::max(x_tol, 4e-16 * (std::abs(a) + std::abs(b)));
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; b - a > tol && iter < 200; ++iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? MinimumResult{x1, f1} : MinimumResult{x2, f2};
}

/// Multi-start minimization: sample `n_samples` points on [a, b], refine every
/// local minimum bracket by golden section. The distance from a curve to a
/// point need not be unimodal even for concave/convex gauges, so single-start
/// searches are not safe here.
template <class F>
MinimumResult multistart_minimize(F&& f, double a, double b, int n_samples = 256,
                                  double x_tol = 1e-12) {
    if (!(b > a)) return {a, f(a)};
    std::vector<double> xs(static_cast<std::size_t>(n_samples));
    std::vector<double> vs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        vs[i] = f(xs[i]);
    }
    MinimumResult best{xs[0], vs[0]};
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (vs[i] < best.value) best = {xs[i], vs[i]};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const bool left_ok = (i == 0) || vs[i] <= vs[i - 1];
        const bool right_ok = (i + 1 == xs.size()) || vs[i] <= vs[i + 1];
        if (!(left_ok && right_ok)) continue;
        const double lo = (i == 0) ? xs[0] : xs[i - 1];
        const double hi = (i + 1 == xs.size()) ? xs.back() : xs[i + 1];
        MinimumResult refined = golden_section_minimize(f, lo, hi, x_tol);
        if (refined.value < best.value) best = refined;
    }
    return best;
}

}  // namespace esetlab
