#pragma once

#include <esetlab/curve_family.hpp>
#include <esetlab/disc_collection.hpp>
#include <esetlab/gauge.hpp>
#include <esetlab/interval_union.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace esetlab {

/// Projection of the collection onto its size axis: the union of
/// [|z_n| - r_n, |z_n| + r_n], clipped to [1, inf) in the plane and to
/// [0, 1) in the unit disc.
IntervalUnion projection(const DiscCollection& col);

struct GaugeIntegralResult {
    double value = 0.0;
    /// Some interval touched a gauge singularity; the integral was taken up
    /// to a clipped endpoint and is a lower bound for the true value.
    bool lower_bound_only = false;
    bool converged = true;
    std::vector<std::size_t> flagged_intervals;
};

/// Integral over E of dx/gauge(x) (plane) or dx/gauge(1-x) (unit disc) by
/// adaptive Simpson quadrature, absolute tolerance per interval.
GaugeIntegralResult gauge_integral(const IntervalUnion& E, const Gauge& gauge,
                                   double abs_tol = 1e-10);

struct ExceptionalCReport {
    IntervalUnion c_set;
    double measure = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    /// Tail discs that failed the c-interval preconditions were skipped and
    /// the comparison is only partial.
    bool partial = false;
    std::vector<std::size_t> excluded;
    double sum_of_widths = 0.0;
};

/// Union of the tail discs' c-intervals with its measure compared against
/// the collection budget: 4 alpha^(N+1) epsilon for increasing concave
/// gauges, (4/beta) epsilon for decreasing convex gauges.
ExceptionalCReport exceptional_c_measure(const Gauge& gauge, double phi,
                                         const DiscCollection& col, int n_envelope = 1);

struct HitReport {
    long samples = 0;
    long hits = 0;
    double fraction = 0.0;
    double exceptional_measure = 0.0;
    double exceptional_bound = 0.0;
    /// Bound ratio p = bound / (c_hi - c_lo) and the 3 sigma binomial slack
    /// 3 sqrt(p (1-p) / samples) documented with the report.
    double p_bound = 0.0;
    double slack = 0.0;
    bool satisfied = false;
    std::uint64_t seed = 0;
    double c_lo = 0.0;
    double c_hi = 0.0;
};

/// Seeded Monte Carlo check of the avoidance conclusion: fraction of
/// sampled c whose curve meets at least one tail disc must stay below the
/// exceptional bound ratio plus the binomial slack.
HitReport monte_carlo_hits(const Gauge& gauge, double phi, const DiscCollection& col,
                           double c_lo, double c_hi, long samples, std::uint64_t seed);

struct DensityReport {
    std::vector<double> r_grid;
    std::vector<double> tail_values;
    std::vector<double> ratio_values;
    double limsup_estimate = 0.0;
};

/// Gauge density of E against a vanishing profile:
/// (gauge(r)/r) * integral over E cap [r, inf) of dx/gauge, divided by
/// eps_profile(r). The limsup is approximated by the maximum over the last
/// decade of the grid; the full trajectory is kept so convergence can be
/// judged from the report.
DensityReport k_density(const IntervalUnion& E, const Gauge& gauge,
                        const std::function<double(double)>& eps_profile,
                        std::span<const double> r_grid);

/// Unit-disc analogue with s-profile b: tail integrals over E cap [r, 1)
/// against dx/gauge(1-x), normalized by (1-b(r)).
DensityReport k_density_unit(const IntervalUnion& E, const Gauge& gauge,
                             const std::function<double(double)>& b_profile,
                             std::span<const double> r_grid);

struct ProjectionBoundReport {
    double head_integral = 0.0;
    double tail_integral = 0.0;
    double tail_bound = 0.0;
    bool satisfied = false;
};

/// The projection-integral chain: the tail part of the gauge integral of
/// the projection is compared against sum 2 alpha r_n / gauge(|z_n|)
/// (concave case) or sum 2 r_n / (beta gauge(|z_n|)) (convex case). The
/// head contribution is reported separately, never bounded.
ProjectionBoundReport projection_bound_check(const DiscCollection& col);

}  // namespace esetlab
