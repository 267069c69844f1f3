#pragma once

#include <esetlab/gauge.hpp>
#include <esetlab/interval_union.hpp>

#include <functional>
#include <vector>

namespace esetlab {

/// Non-decreasing function known on a strictly increasing grid. Step
/// interpolation keeps the avoidance verification conservative: the
/// left-hand side g evaluates by the step below, the right-hand side h by
/// the step above (the lemma only uses monotonicity).
struct MonotoneSample {
    std::vector<double> grid;
    std::vector<double> values;

    static MonotoneSample from_function(const std::function<double(double)>& f,
                                        std::span<const double> grid);
    void check() const;  // throws InvalidInput on a malformed sample
    /// Value at the largest grid point <= r (lower step).
    double lower_at(double r) const;
    /// Value at the smallest grid point >= r (upper step).
    double upper_at(double r) const;
    bool in_range(double r) const { return r >= grid.front() && r <= grid.back(); }
};

struct AvoidanceReport {
    double R = 0.0;                      // grid witness; the true threshold may be smaller
    std::size_t R_index = 0;
    bool hypothesis_ok = false;          // density stayed under its cap on the tail
    double density_limsup = 0.0;
    std::vector<double> density_trajectory;
    std::vector<std::size_t> violations;       // grid indices with g(r) > h(dilated r)
    std::vector<std::size_t> unevaluable;      // dilated point beyond the grid
    bool nonempty_step_ok = true;        // [r, dilated r] never fully inside E
    bool interval_step_ok = true;        // the quadrature chain of the threshold argument
    bool passed = false;
};

/// Dilation-avoidance check with a shrinking dilation alpha(r) = 1 + eps(r).
/// Hypotheses: g <= h on grid points off E, and the gauge density of E
/// against eps stays below 1/alpha (else HypothesisFail). R is the first
/// grid point from which eps(r) > alpha (K(r)/r) int_{E cap [r,inf)} dx/K
/// holds onward; beyond it the report verifies g(r) <= h((1+eps(r)) r), the
/// non-emptiness of [r, (1+eps(r)) r] \ E, and the interval-step chain
/// int_r^{a(r) r} dx/K >= (a(r)-1) r / K(a(r) r) >= eps(r) r / (alpha K(r)).
AvoidanceReport avoidance_check_plane(const MonotoneSample& g, const MonotoneSample& h,
                                      const IntervalUnion& E, const Gauge& gauge,
                                      const std::function<double(double)>& eps_profile,
                                      double alpha);

/// Unit-disc analogue with s(r) = 1 - b(r)(1-r) and density cap 1.
AvoidanceReport avoidance_check_unitdisc(const MonotoneSample& g, const MonotoneSample& h,
                                         const IntervalUnion& E, const Gauge& gauge,
                                         const std::function<double(double)>& b_profile);

}  // namespace esetlab
