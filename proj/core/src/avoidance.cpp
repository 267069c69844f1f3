#include <esetlab/avoidance.hpp>

#include <esetlab/errors.hpp>
#include <esetlab/measure_lab.hpp>
#include <esetlab/quadrature.hpp>

#include <algorithm>
#include <cmath>

namespace esetlab {

MonotoneSample MonotoneSample::from_function(const std::function<double(double)>& f,
                                             std::span<const double> grid) {
    MonotoneSample s;
    s.grid.assign(grid.begin(), grid.end());
    s.values.reserve(grid.size());
    for (double r : grid) s.values.push_back(f(r));
    s.check();
    return s;
}

void MonotoneSample::check() const {
    if (grid.size() != values.size() || grid.empty())
        throw InvalidInput("MonotoneSample: grid/value size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw InvalidInput("MonotoneSample: grid not increasing");
        if (values[i] < values[i - 1] * (1.0 - 1e-15) - 1e-300)
            throw InvalidInput("MonotoneSample: values not non-decreasing");
    }
}

double MonotoneSample::lower_at(double r) const {
    auto it = std::upper_bound(grid.begin(), grid.end(), r);
    if (it == grid.begin()) throw DomainError("MonotoneSample: point below the grid");
    return values[static_cast<std::size_t>(it - grid.begin()) - 1];
}

double MonotoneSample::upper_at(double r) const {
    auto it = std::lower_bound(grid.begin(), grid.end(), r);
    if (it == grid.end()) throw DomainError("MonotoneSample: point above the grid");
    return values[static_cast<std::size_t>(it - grid.begin())];
}

namespace {

void check_precondition(const MonotoneSample& g, const MonotoneSample& h,
                        const IntervalUnion& E) {
    g.check();
    h.check();
    for (std::size_t i = 0; i < g.grid.size(); ++i) {
        const double r = g.grid[i];
        if (E.contains(r) || !h.in_range(r)) continue;
        if (g.values[i] > h.upper_at(r) * (1.0 + 1e-12) + 1e-300)
            throw InvalidInput("avoidance: hypothesis g <= h off E fails on the grid");
    }
}

double tail_integral(const IntervalUnion& E, const Gauge& gauge, double r, bool unit) {
    const IntervalUnion tail = unit ? E.clipped(r, 1.0) : E.clipped(r);
    return gauge_integral(tail, gauge).value;
}

}  // namespace

AvoidanceReport avoidance_check_plane(const MonotoneSample& g, const MonotoneSample& h,
                                      const IntervalUnion& E, const Gauge& gauge,
                                      const std::function<double(double)>& eps_profile,
                                      double alpha) {
    switch (gauge.kind()) {
        case GaugeKind::PlaneConstant:
        case GaugeKind::PlaneConcaveIdentity:
            break;
        case GaugeKind::PlaneConcavePower:
        case GaugeKind::PlaneConcaveLog:
            // Admissible only while 1 <= K(x) <= x on the verification grid.
            for (double r : g.grid) {
                const double v = gauge.eval(std::max(r, gauge.x0() + 1e-12));
                if (!(v >= 1.0 - 1e-12 && v <= r * (1.0 + 1e-12)))
                    throw UnsupportedGauge("avoidance_check_plane: K must satisfy 1 <= K(x) <= x");
            }
            break;
        default:
            throw UnsupportedGauge("avoidance_check_plane: gauge kind not admissible");
    }
    if (!(alpha > 0.0)) throw InvalidInput("avoidance_check_plane: alpha must be positive");
    check_precondition(g, h, E);

    AvoidanceReport rep;
    const std::size_t n = g.grid.size();
    std::vector<double> threshold_rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = g.grid[i];
        const double eps = eps_profile(r);
        if (!(eps > 0.0 && eps <= 1.0))
            throw InvalidInput("avoidance_check_plane: eps profile must map into (0,1]");
        const double tail = tail_integral(E, gauge, r, false);
        threshold_rhs[i] = alpha * gauge.eval(r) / r * tail;
        rep.density_trajectory.push_back(threshold_rhs[i] / (alpha * eps));
    }

    // limsup surrogate over the last decade of the grid.
    const double cut = g.grid.back() / 10.0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.grid[i] >= cut)
            rep.density_limsup = std::max(rep.density_limsup, rep.density_trajectory[i]);
    rep.hypothesis_ok = rep.density_limsup < 1.0 / alpha;
    if (!rep.hypothesis_ok)
        throw HypothesisFail("avoidance_check_plane: density >= 1/alpha on the grid tail");

    // R: first grid point from which the threshold holds onward.
    std::size_t first_ok = n;
    for (std::size_t i = n; i-- > 0;) {
        if (eps_profile(g.grid[i]) > threshold_rhs[i])
            first_ok = i;
        else
            break;
    }
    if (first_ok == n)
        throw HypothesisFail("avoidance_check_plane: threshold never reached on the grid");
    rep.R_index = first_ok;
    rep.R = g.grid[first_ok];

    for (std::size_t i = first_ok; i < n; ++i) {
        const double r = g.grid[i];
        const double eps = eps_profile(r);
        const double dilated = (1.0 + eps) * r;

        if (E.covers(r, dilated)) rep.nonempty_step_ok = false;

        const double lhs_step =
            adaptive_simpson([&gauge](double x) { return 1.0 / gauge.eval(x); }, r, dilated)
                .value;
        const double mid_step = eps * r / gauge.eval(dilated);
        const double rhs_step = eps * r / (alpha * gauge.eval(r));
        if (!(lhs_step >= mid_step * (1.0 - 1e-9) && mid_step >= rhs_step * (1.0 - 1e-9)))
            rep.interval_step_ok = false;

        if (!h.in_range(dilated)) {
            rep.unevaluable.push_back(i);
            continue;
        }
        if (g.values[i] > h.upper_at(dilated) * (1.0 + 1e-12) + 1e-300)
            rep.violations.push_back(i);
    }
    rep.passed = rep.hypothesis_ok && rep.violations.empty() && rep.nonempty_step_ok &&
                 rep.interval_step_ok;
    return rep;
}

AvoidanceReport avoidance_check_unitdisc(const MonotoneSample& g, const MonotoneSample& h,
                                         const IntervalUnion& E, const Gauge& gauge,
                                         const std::function<double(double)>& b_profile) {
    const bool identity_like =
        gauge.kind() == GaugeKind::UnitStolzPower && gauge.param() == 1.0;
    if (!identity_like && gauge.kind() != GaugeKind::UnitConvexPower)
        throw UnsupportedGauge("avoidance_check_unitdisc: gauge kind not admissible");
    check_precondition(g, h, E);

    AvoidanceReport rep;
    const std::size_t n = g.grid.size();
    std::vector<double> threshold_rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = g.grid[i];
        if (!(r > 0.0 && r < 1.0))
            throw InvalidInput("avoidance_check_unitdisc: grid must lie in (0,1)");
        const double b = b_profile(r);
        if (!(b > 0.0 && b < 1.0))
            throw InvalidInput("avoidance_check_unitdisc: b profile must map into (0,1)");
        const double tail = tail_integral(E, gauge, r, true);
        threshold_rhs[i] = gauge.eval(1.0 - r) / (1.0 - r) * tail;
        rep.density_trajectory.push_back(threshold_rhs[i] / (1.0 - b));
    }

    const double cut = 1.0 - 10.0 * (1.0 - g.grid.back());
    for (std::size_t i = 0; i < n; ++i)
        if (g.grid[i] >= cut)
            rep.density_limsup = std::max(rep.density_limsup, rep.density_trajectory[i]);
    rep.hypothesis_ok = rep.density_limsup < 1.0;
    if (!rep.hypothesis_ok)
        throw HypothesisFail("avoidance_check_unitdisc: density >= 1 on the grid tail");

    std::size_t first_ok = n;
    for (std::size_t i = n; i-- > 0;) {
        if (1.0 - b_profile(g.grid[i]) > threshold_rhs[i])
            first_ok = i;
        else
            break;
    }
    if (first_ok == n)
        throw HypothesisFail("avoidance_check_unitdisc: threshold never reached on the grid");
    rep.R_index = first_ok;
    rep.R = g.grid[first_ok];

    for (std::size_t i = first_ok; i < n; ++i) {
        const double r = g.grid[i];
        const double b = b_profile(r);
        const double s = 1.0 - b * (1.0 - r);

        if (E.covers(r, s)) rep.nonempty_step_ok = false;

        const double lhs_step =
            adaptive_simpson([&gauge](double x) { return 1.0 / gauge.eval(1.0 - x); }, r, s)
                .value;
        const double rhs_step = (s - r) / gauge.eval(1.0 - r);
        if (!(lhs_step >= rhs_step * (1.0 - 1e-9) &&
              rhs_step > tail_integral(E, gauge, r, true)))
            rep.interval_step_ok = false;

        if (!h.in_range(s)) {
            rep.unevaluable.push_back(i);
            continue;
        }
        if (g.values[i] > h.upper_at(s) * (1.0 + 1e-12) + 1e-300) rep.violations.push_back(i);
    }
    rep.passed = rep.hypothesis_ok && rep.violations.empty() && rep.nonempty_step_ok &&
                 rep.interval_step_ok;
    return rep;
}

}  // namespace esetlab
