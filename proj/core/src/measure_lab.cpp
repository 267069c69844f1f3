#include <esetlab/measure_lab.hpp>

#include <esetlab/errors.hpp>
#include <esetlab/quadrature.hpp>
#include <esetlab/rng.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace esetlab {

namespace {

constexpr double kSingularityClip = 1e-12;

}  // namespace

IntervalUnion projection(const DiscCollection& col) {
    IntervalUnion E;
    const double clip_lo = col.ambient == Ambient::Plane ? 1.0 : 0.0;
    const double clip_hi =
        col.ambient == Ambient::Plane ? std::numeric_limits<double>::infinity() : 1.0;
    for (const Disc& d : col.discs) {
        const double s = std::abs(d.center);
        const double lo = std::max(s - d.radius, clip_lo);
        const double hi = std::min(s + d.radius, clip_hi);
        if (lo < hi) E.insert(lo, hi);
    }
    return E;
}

GaugeIntegralResult gauge_integral(const IntervalUnion& E, const Gauge& gauge, double abs_tol) {
    GaugeIntegralResult res;
    const bool unit = gauge.ambient() == Ambient::UnitDisc;
    const std::function<double(double)> integrand =
        unit ? std::function<double(double)>([&gauge](double x) { return 1.0 / gauge.eval(1.0 - x); })
             : std::function<double(double)>([&gauge](double x) { return 1.0 / gauge.eval(x); });

    for (std::size_t i = 0; i < E.intervals().size(); ++i) {
        double lo = E.intervals()[i].lo;
        double hi = E.intervals()[i].hi;
        bool flagged = false;
        if (unit) {
            // gauge(1-x) vanishes as x -> 1; integrate up to a clipped
            // endpoint and report the value as a lower bound.
            if (hi > 1.0 - kSingularityClip) {
                hi = 1.0 - kSingularityClip;
                flagged = true;
            }
            if (lo < 0.0) lo = 0.0;
        } else if (gauge.increasing() && lo < gauge.x0() + kSingularityClip) {
            lo = gauge.x0() + kSingularityClip;
            flagged = true;
        }
        if (!(lo < hi)) continue;
        const QuadratureResult q = adaptive_simpson(integrand, lo, hi, abs_tol);
        res.value += q.value;
        res.converged = res.converged && q.converged;
        if (flagged) {
            res.lower_bound_only = true;
            res.flagged_intervals.push_back(i);
        }
    }
    return res;
}

ExceptionalCReport exceptional_c_measure(const Gauge& gauge, double phi,
                                         const DiscCollection& col, int n_envelope) {
    ExceptionalCReport rep;
    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
        try {
            const CIntervalReport ci = c_interval(gauge, phi, col.discs[n]);
            if (ci.empty) continue;  // no positive-c curve reaches the disc
            const double lo = std::max(ci.c_lo, 0.0);
            if (lo < ci.c_hi) {
                rep.c_set.insert(lo, ci.c_hi);
                rep.sum_of_widths += ci.c_hi - lo;
            }
        } catch (const PartialDomain&) {
            rep.excluded.push_back(n);
            rep.partial = true;
        }
    }
    rep.measure = rep.c_set.measure();
    if (gauge.has_doubling_up())
        rep.bound = 4.0 * std::pow(gauge.doubling_up(), n_envelope + 1) * col.epsilon;
    else if (gauge.has_doubling_down())
        rep.bound = 4.0 / gauge.doubling_down() * col.epsilon;
    else
        throw UnsupportedGauge("exceptional_c_measure: no budget for this gauge kind");
    rep.satisfied = rep.measure <= rep.bound * (1.0 + 1e-9);
    return rep;
}

HitReport monte_carlo_hits(const Gauge& gauge, double phi, const DiscCollection& col,
                           double c_lo, double c_hi, long samples, std::uint64_t seed) {
    if (samples < 1) throw InvalidInput("monte_carlo_hits: samples >= 1");
    if (!(c_hi > c_lo)) throw InvalidInput("monte_carlo_hits: empty c range");

    HitReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.c_lo = c_lo;
    rep.c_hi = c_hi;

    if (col.tail_index < col.discs.size()) {
        const ExceptionalCReport exc = exceptional_c_measure(gauge, phi, col);
        rep.exceptional_measure = exc.measure;
        rep.exceptional_bound = exc.bound;
    }

    // Per-disc certified pre-reject, independent of the c-interval route:
    // the curve ordinate over the search window is c * [gmin, gmax]; a hit
    // needs it to reach [y - r, y + r].
    struct Prefilter {
        double gmin, gmax, ylo, yhi;
        const Disc* disc;
    };
    std::vector<Prefilter> pre;
    pre.reserve(col.discs.size() - col.tail_index);
    const double dom = gauge.curve_domain_start();
    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
        const Disc& d = col.discs[n];
        const Complex zc = rotate(d.center, -phi);
        const double wlo = std::max(dom, zc.real() - 3.0 * d.radius);
        const double whi = zc.real() + 3.0 * d.radius;
        if (whi < wlo) continue;
        const double g1 = gauge.eval(wlo);
        const double g2 = gauge.eval(whi);
        pre.push_back({std::min(g1, g2), std::max(g1, g2), zc.imag() - d.radius,
                       zc.imag() + d.radius, &d});
    }

    std::mt19937_64 eng(seed);
    CurveFamily fam{gauge, phi, Complex(1.0, 0.0), 1.0, Branch::Upper};
    for (long s = 0; s < samples; ++s) {
        const double c = uniform_in(eng, c_lo, c_hi);
        fam.c = c;
        bool hit = false;
        for (const Prefilter& p : pre) {
            if (c * p.gmax < p.ylo || c * p.gmin > p.yhi) continue;
            if (meets(fam, *p.disc).hit()) {
                hit = true;
                break;
            }
        }
        if (hit) ++rep.hits;
    }
    rep.fraction = static_cast<double>(rep.hits) / static_cast<double>(samples);
    rep.p_bound = rep.exceptional_bound / (c_hi - c_lo);
    rep.slack =
        3.0 * std::sqrt(std::max(rep.p_bound * (1.0 - rep.p_bound), 0.0) / samples);
    rep.satisfied = rep.fraction <= rep.p_bound + rep.slack;
    return rep;
}

namespace {

DensityReport density_impl(const IntervalUnion& E, const Gauge& gauge,
                           const std::function<double(double)>& denom,
                           std::span<const double> r_grid, bool unit) {
    DensityReport rep;
    for (double r : r_grid) {
        const double den = denom(r);
        if (!(den > 0.0)) throw InvalidInput("k_density: profile must stay positive");
        const IntervalUnion tail =
            unit ? E.clipped(r, 1.0) : E.clipped(r);
        const double tail_integral = gauge_integral(tail, gauge).value;
        const double size = unit ? 1.0 - r : r;
        const double ratio = gauge.eval(size) / size * tail_integral / den;
        rep.r_grid.push_back(r);
        rep.tail_values.push_back(tail_integral);
        rep.ratio_values.push_back(ratio);
    }
    // limsup surrogate: maximum over the last decade of the grid.
    if (!rep.r_grid.empty()) {
        const double r_max = rep.r_grid.back();
        double cut;
        if (unit)
            cut = 1.0 - 10.0 * (1.0 - r_max);
        else
            cut = r_max / 10.0;
        double m = 0.0;
        for (std::size_t i = 0; i < rep.r_grid.size(); ++i)
            if (rep.r_grid[i] >= cut) m = std::max(m, rep.ratio_values[i]);
        rep.limsup_estimate = m;
    }
    return rep;
}

}  // namespace

DensityReport k_density(const IntervalUnion& E, const Gauge& gauge,
                        const std::function<double(double)>& eps_profile,
                        std::span<const double> r_grid) {
    if (gauge.ambient() != Ambient::Plane)
        throw InvalidInput("k_density: plane variant needs a plane gauge");
    return density_impl(E, gauge, eps_profile, r_grid, false);
}

DensityReport k_density_unit(const IntervalUnion& E, const Gauge& gauge,
                             const std::function<double(double)>& b_profile,
                             std::span<const double> r_grid) {
    if (gauge.ambient() != Ambient::UnitDisc)
        throw InvalidInput("k_density_unit: needs a unit gauge");
    auto denom = [&b_profile](double r) { return 1.0 - b_profile(r); };
    return density_impl(E, gauge, denom, r_grid, true);
}

ProjectionBoundReport projection_bound_check(const DiscCollection& col) {
    ProjectionBoundReport rep;
    DiscCollection head = col;
    head.discs.assign(col.discs.begin(),
                      col.discs.begin() + static_cast<std::ptrdiff_t>(col.tail_index));
    DiscCollection tail = col;
    tail.discs.assign(col.discs.begin() + static_cast<std::ptrdiff_t>(col.tail_index),
                      col.discs.end());
    head.tail_index = 0;
    tail.tail_index = 0;

    rep.head_integral = gauge_integral(projection(head), col.gauge).value;
    rep.tail_integral = gauge_integral(projection(tail), col.gauge).value;

    double bound = 0.0;
    for (std::size_t n = 0; n < tail.discs.size(); ++n) {
        const double term = tail.discs[n].radius / col.gauge.eval(tail.size_of(n));
        if (col.gauge.has_doubling_up())
            bound += 2.0 * col.gauge.doubling_up() * term;
        else if (col.gauge.has_doubling_down())
            bound += 2.0 / col.gauge.doubling_down() * term;
        else
            bound += 2.0 * term;  // rapid kinds: doubling-type limit 1
    }
    rep.tail_bound = bound;
    rep.satisfied = rep.tail_integral <= bound * (1.0 + 1e-9);
    return rep;
}

}  // namespace esetlab
