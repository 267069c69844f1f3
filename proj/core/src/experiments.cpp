#include <esetlab/experiments.hpp>

#include <esetlab/errors.hpp>
#include <esetlab/rng.hpp>

#include <algorithm>
#include <cmath>

namespace esetlab::experiments {

namespace {

constexpr double kTwoPi = 6.283185307179586;

}  // namespace

CantorResult run_cantor(int levels) {
    CantorResult res;
    res.levels = levels;
    const DiscCollection col = gen_cantor_rset(levels);
    res.diameter_sum = col.diameter_sum();
    res.expected_diameter_sum = 4.0 * (1.0 - std::pow(2.0 / 3.0, levels));
    res.projection_measure = projection(col).measure();
    res.valid = validate(col).valid;
    res.passed = res.valid &&
                 std::abs(res.diameter_sum - res.expected_diameter_sum) <= 1e-9 &&
                 std::abs(res.projection_measure - 4.0 / 3.0) <= 1e-9;
    return res;
}

NamedExamplesResult run_named_examples(int n_max, int k_max) {
    NamedExamplesResult res;
    const DiscCollection ex1 = gen_example1(n_max, k_max);
    const DiscCollection ex2 = gen_example2(n_max, k_max);
    res.diameter_sum_1 = ex1.diameter_sum();
    res.diameter_sum_2 = ex2.diameter_sum();
    res.sums_below_two = res.diameter_sum_1 < 2.0 && res.diameter_sum_2 < 2.0;

    res.sums_increasing = true;
    double prev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double sum = gen_example1(n, k_max).diameter_sum();
        if (!(sum > prev)) res.sums_increasing = false;
        prev = sum;
    }

    // Rays arg z = 1/n are the curves y = tan(1/n) x of the identity gauge.
    const Gauge identity = Gauge::plane_identity();
    for (int n = 1; n <= n_max; ++n) {
        CurveFamily ray{identity, 0.0, Complex(1.0, 0.0), std::tan(1.0 / n), Branch::Upper};
        for (const Disc& d : ex1.discs) {
            if (std::abs(std::arg(d.center) - 1.0 / n) > 1e-12) continue;
            if (!meets(ray, d).hit()) ++res.ray_misses;
        }
    }
    // Horizontal lines y = 1/n are the constant-gauge curves with c = 1/n.
    const Gauge constant = Gauge::plane_constant(1.0);
    for (int n = 1; n <= n_max; ++n) {
        CurveFamily line{constant, 0.0, Complex(1.0, 0.0), 1.0 / n, Branch::Upper};
        for (const Disc& d : ex2.discs) {
            if (std::abs(d.center.imag() - 1.0 / n) > 1e-12) continue;
            if (!meets(line, d).hit()) ++res.line_misses;
        }
    }
    res.passed = res.sums_below_two && res.sums_increasing && res.ray_misses == 0 &&
                 res.line_misses == 0 && validate(ex1).valid && validate(ex2).valid;
    return res;
}

ConcavePlaneResult run_concave_plane(std::uint64_t seed, int count, double epsilon,
                                     long mc_samples) {
    RandomSetParams params;
    params.ambient = Ambient::Plane;
    params.gauge = Gauge::plane_power(0.5);
    params.count = count;
    params.epsilon = epsilon;
    params.envelope_m = 1.0;
    params.seed = seed;
    const DiscCollection col = gen_random(params);

    ConcavePlaneResult res;
    res.exceptional = exceptional_c_measure(params.gauge, 0.0, col);
    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
        const CIntervalReport ci = c_interval(params.gauge, 0.0, col.discs[n]);
        if (!ci.satisfied) ++res.width_violations;
    }
    res.monte_carlo = monte_carlo_hits(params.gauge, 0.0, col, 0.1, 10.0, mc_samples, seed + 1);
    res.passed = validate(col).valid && res.exceptional.satisfied && !res.exceptional.partial &&
                 res.width_violations == 0 && res.monte_carlo.satisfied;
    return res;
}

ConvexPlaneResult run_convex_plane(std::uint64_t seed, int count, double epsilon) {
    RandomSetParams params;
    params.ambient = Ambient::Plane;
    params.gauge = Gauge::plane_convex_power(1.0);
    params.count = count;
    params.epsilon = epsilon;
    params.envelope_m = 1.0;
    params.seed = seed;
    const DiscCollection col = gen_random(params);

    ConvexPlaneResult res;
    res.exceptional = exceptional_c_measure(params.gauge, 0.0, col);
    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
        const CIntervalReport ci = c_interval(params.gauge, 0.0, col.discs[n]);
        if (!ci.satisfied) ++res.width_violations;
    }
    res.passed = validate(col).valid && res.exceptional.satisfied && !res.exceptional.partial &&
                 res.width_violations == 0;
    return res;
}

RapidPlaneResult run_rapid_plane(std::uint64_t seed, int count) {
    RandomSetParams params;
    params.ambient = Ambient::Plane;
    params.gauge = Gauge::plane_rapid_power(2.0);
    params.count = count;
    params.epsilon = 1e-3;
    params.envelope_m = 1.0;
    params.seed = seed;
    const DiscCollection col = gen_random(params);

    RapidPlaneResult res;
    res.valid = validate(col).valid;
    res.trend = width_trend_rapid(params.gauge, 0.0, col, 0.1);
    res.passed = res.valid && res.trend.passed;
    return res;
}

HorocycleResult run_horocycle(int n_max) {
    HorocycleResult res;
    res.n_max = n_max;
    const DiscCollection col = gen_horocycle_lset(n_max);
    res.valid = validate(col).valid;

    const Disc last = horocycle_disc(n_max);
    const double size = 1.0 - std::abs(last.center);
    res.ratio_at_nmax = last.radius / size * std::pow(std::log1p(n_max), 2);

    double sum = 0.0;
    double increment = 0.0;
    for (int n = horocycle_first_valid_index(); n <= n_max; ++n) {
        const Disc d = horocycle_disc(n);
        increment = d.radius / std::sqrt(1.0 - std::abs(d.center));
        sum += increment;
    }
    res.partial_sum = sum;
    res.last_increment = increment;
    res.passed = res.valid && std::abs(res.ratio_at_nmax - 8.0) <= 0.08 &&
                 res.last_increment < 1e-6;
    return res;
}

UnitConvexResult run_unit_convex(std::uint64_t seed, int count) {
    RandomSetParams params;
    params.ambient = Ambient::UnitDisc;
    params.gauge = Gauge::unit_convex_power(2.0);
    params.count = count;
    params.epsilon = 1e-3;
    params.envelope_m = 1.8;
    params.seed = seed;
    // The quadratic gauge scales radii like t^3; keep t large enough that
    // they stay far above the double spacing at |z| ~ 1.
    params.t_lo = 1e-4;
    params.t_hi = 5e-2;
    const DiscCollection col = gen_random(params);

    UnitConvexResult res;
    res.valid = validate(col).valid;
    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n)
        res.widths.push_back(c_interval(params.gauge, Complex(1.0, 0.0), col.discs[n]).width);
    if (!res.widths.empty()) {
        res.initial_envelope = *std::max_element(res.widths.begin(), res.widths.end());
        res.final_envelope = res.widths.back();
    }
    res.passed = res.valid && !res.widths.empty() &&
                 res.final_envelope <= 0.1 * res.initial_envelope;
    return res;
}

StolzResult run_stolz(double gamma, std::uint64_t seed, int count) {
    RandomSetParams params;
    params.ambient = Ambient::UnitDisc;
    params.gauge = Gauge::unit_stolz_power(gamma);
    params.count = count;
    params.epsilon = 1e-3;
    params.envelope_m = 2.0;  // capped to aperture 1.9, strictly inside S(1,2)
    params.seed = seed;
    // Keep the budget-scaled radii far above the double spacing at |z| ~ 1;
    // the gamma = 2 budget shrinks them like t^2.
    params.t_lo = 1e-3;
    params.t_hi = 5e-2;
    const DiscCollection col = gen_random(params);

    StolzResult res;
    res.gamma = gamma;
    res.count = count;
    for (const Disc& d : col.discs)
        res.k_comparability = std::max(
            res.k_comparability, std::abs(1.0 - d.center) / (1.0 - std::abs(d.center)));
    for (const Disc& d : col.discs) {
        const double width = c_interval(params.gauge, Complex(1.0, 0.0), d).width;
        if (width > bound_stolz(gamma, d, res.k_comparability)) ++res.violations;
    }
    res.passed = validate(col).valid && res.violations == 0;
    return res;
}

CartanFuzzResult run_cartan_fuzz(int sets, long samples_per_set, std::uint64_t seed) {
    CartanFuzzResult res;
    res.sets = sets;
    std::mt19937_64 eng(seed);
    for (int s = 0; s < sets; ++s) {
        const int mu = 3 + static_cast<int>(eng() % 48);  // mu <= 50
        const double d = uniform_in(eng, 0.1, 2.0);
        std::vector<Complex> points(static_cast<std::size_t>(mu));
        for (Complex& p : points)
            p = Complex(uniform_in(eng, -5.0, 5.0), uniform_in(eng, -5.0, 5.0));
        const std::vector<Disc> discs = cartan_discs(points, d);

        double radii = 0.0;
        for (const Disc& disc : discs) radii += disc.radius;
        if (radii > 2.0 * d * (1.0 + 1e-9)) ++res.budget_violations;

        std::vector<double> dist(points.size());
        long accepted = 0;
        while (accepted < samples_per_set) {
            const Complex z(uniform_in(eng, -8.0, 8.0), uniform_in(eng, -8.0, 8.0));
            bool outside = true;
            for (const Disc& disc : discs)
                if (std::abs(z - disc.center) <= disc.radius) {
                    outside = false;
                    break;
                }
            if (!outside) continue;
            ++accepted;
            for (std::size_t i = 0; i < points.size(); ++i) dist[i] = std::abs(z - points[i]);
            std::sort(dist.begin(), dist.end());
            for (std::size_t m = 1; m <= dist.size(); ++m)
                if (!(dist[m - 1] > static_cast<double>(m) * d / mu)) {
                    ++res.distance_violations;
                    break;
                }
        }
    }
    res.passed = res.budget_violations == 0 && res.distance_violations == 0;
    return res;
}

std::vector<Complex> sample_admissible_plane(const CartanConstruction& con, double r_lo,
                                             double r_hi, long count, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    const double llo = std::log(r_lo);
    const double lhi = std::log(r_hi);
    long guard = 0;
    while (static_cast<long>(out.size()) < count) {
        if (++guard > 1000 * count)
            throw NumericFailure("sample_admissible_plane: rejection sampling stalled");
        const double r = std::exp(uniform_in(eng, llo, lhi));
        const Complex z = std::polar(r, uniform_in(eng, 0.0, kTwoPi));
        if (!con.excluded(z)) out.push_back(z);
    }
    return out;
}

LogDerivResult run_logderiv(std::uint64_t seed, int zero_count, long samples) {
    std::mt19937_64 eng(seed);
    std::vector<ZeroPole> points;
    points.reserve(static_cast<std::size_t>(zero_count));
    for (int i = 0; i < zero_count; ++i) {
        const double r = std::exp(uniform_in(eng, std::log(1.0), std::log(50.0)));
        points.push_back({std::polar(r, uniform_in(eng, 0.0, kTwoPi)), 1, PointKind::Zero});
    }
    const RationalFunction f{std::move(points)};
    const Gauge gauge = Gauge::plane_power(0.75);
    const double alpha = 2.0;

    LogDerivResult res;
    const CartanConstruction con = build_exceptional_set(f, 0, alpha, gauge, Ambient::Plane);
    res.construction_check = check_construction(con);
    res.closed_form_gap = res.construction_check.closed_form_gap;

    const std::vector<Complex> zs = sample_admissible_plane(
        con, con.inner_exclusion_radius * 1.02, 3.0 * f.max_point_modulus(), samples, seed + 1);
    res.report = check_logderiv_bound(f, 1, 0, alpha, gauge, zs, con);
    res.passed = res.construction_check.passed && res.closed_form_gap <= 1e-6 &&
                 res.report.inner_violations == 0 && res.report.stability <= 0.10 &&
                 res.report.rejected.empty();
    return res;
}

LogDerivResult run_logdiff(std::uint64_t seed, long samples) {
    std::mt19937_64 eng(seed);
    std::vector<ZeroPole> points;
    for (int i = 0; i < 50; ++i) {
        const double r = std::exp(uniform_in(eng, std::log(1.0), std::log(40.0)));
        points.push_back({std::polar(r, uniform_in(eng, 0.0, kTwoPi)), 1, PointKind::Zero});
    }
    for (int i = 0; i < 30; ++i) {
        const double r = std::exp(uniform_in(eng, std::log(1.0), std::log(40.0)));
        points.push_back({std::polar(r, uniform_in(eng, 0.0, kTwoPi)), 1, PointKind::Pole});
    }
    const RationalFunction f{std::move(points)};
    const Gauge gauge = Gauge::plane_power(0.75);
    const double alpha = 2.0;
    const Complex shift(1.0, 0.5);

    LogDerivResult res;
    const CartanConstruction con = build_exceptional_set(f, 0, alpha, gauge, Ambient::Plane);
    res.construction_check = check_construction(con);
    res.closed_form_gap = res.construction_check.closed_form_gap;

    // z and z + shift must both stay admissible.
    std::vector<Complex> zs;
    std::mt19937_64 seng(seed + 1);
    const double llo = std::log(con.inner_exclusion_radius * 1.02 + std::abs(shift));
    const double lhi = std::log(3.0 * f.max_point_modulus());
    long guard = 0;
    while (static_cast<long>(zs.size()) < samples) {
        if (++guard > 1000 * samples)
            throw NumericFailure("run_logdiff: rejection sampling stalled");
        const Complex z = std::polar(std::exp(uniform_in(seng, llo, lhi)),
                                     uniform_in(seng, 0.0, kTwoPi));
        if (!con.excluded(z) && !con.excluded(z + shift)) zs.push_back(z);
    }
    res.report = check_logdiff_bound(f, shift, alpha, gauge, zs, con);
    res.passed = res.construction_check.passed && res.closed_form_gap <= 1e-6 &&
                 res.report.inner_violations == 0 && res.report.stability <= 0.10 &&
                 res.report.rejected.empty();
    return res;
}

LogDerivResult run_logderiv_disc(long samples) {
    std::vector<ZeroPole> points;
    for (int m = 1; m <= 12; ++m)
        points.push_back({Complex(1.0 - std::exp2(-m), 0.0), 1, PointKind::Zero});
    const RationalFunction f{std::move(points)};
    const Gauge gauge = Gauge::unit_convex_power(2.0);
    const double alpha = 2.0;
    const double b = 0.5;

    LogDerivResult res;
    const CartanConstruction con =
        build_exceptional_set(f, 0, alpha, gauge, Ambient::UnitDisc, b);
    res.construction_check = check_construction(con);

    // Rings r = 1 - (3/4) 2^-m between consecutive zeros, seeded angles.
    std::vector<Complex> zs;
    std::mt19937_64 eng(41);
    const int m_lo = con.nu0 + 1;
    const int m_hi = 14;
    long guard = 0;
    while (static_cast<long>(zs.size()) < samples) {
        if (++guard > 1000 * samples)
            throw NumericFailure("run_logderiv_disc: rejection sampling stalled");
        const int m = m_lo + static_cast<int>(eng() % (m_hi - m_lo + 1));
        const double r = 1.0 - 0.75 * std::exp2(-m);
        const Complex z = std::polar(r, uniform_in(eng, 0.0, kTwoPi));
        if (!con.excluded(z)) zs.push_back(z);
    }
    res.report = check_logderiv_bound_unitdisc(f, 1, 0, alpha, b, gauge, zs, con);
    res.passed = res.construction_check.passed &&
                 res.construction_check.side_conditions_ok &&
                 res.report.inner_violations == 0 && res.report.stability <= 0.10 &&
                 res.report.rejected.empty();
    return res;
}

AvoidanceResult run_avoidance() {
    AvoidanceResult res;

    {
        // Constant gauge, E = [2,3], eps(r) = 1/r, alpha = 1. The monotone
        // pair jumps to the exit value inside E, so the dilation must clear
        // the excluded interval.
        std::vector<double> grid;
        for (double r = 1.0; r <= 50.0 + 1e-9; r += 0.25) grid.push_back(r);
        IntervalUnion E;
        E.insert(2.0, 3.0);
        auto g_fn = [](double r) { return (r >= 2.0 && r <= 3.0) ? 3.0 : r; };
        auto h_fn = [](double r) { return r; };
        std::vector<double> h_grid;
        for (double r = 1.0; r <= 60.0 + 1e-9; r += 0.25) h_grid.push_back(r);
        const MonotoneSample g = MonotoneSample::from_function(g_fn, grid);
        const MonotoneSample h = MonotoneSample::from_function(h_fn, h_grid);
        res.plane = avoidance_check_plane(g, h, E, Gauge::plane_constant(1.0),
                                          [](double r) { return 1.0 / r; }, 1.0);
    }

    {
        // Identity unit gauge, E = union of [1-2^-m, 1-2^-m + 4^-m],
        // b(r) = 1 - 8(1-r); the tail integral is about 2(1-r), so the
        // density sits near 1/4.
        IntervalUnion E;
        std::vector<std::pair<double, double>> bands;
        for (int m = 4; m <= 20; ++m) {
            const double a = 1.0 - std::exp2(-m);
            const double bnd = a + std::pow(4.0, -m);
            E.insert(a, bnd);
            bands.emplace_back(a, bnd);
        }
        std::vector<double> grid;
        for (int i = 0; i <= 400; ++i)
            grid.push_back(1.0 - 0.12 * std::pow(1.0 - 1e-6 / 0.12, i / 400.0));
        for (const auto& [a, bnd] : bands) {
            grid.push_back(a);
            grid.push_back(0.5 * (a + bnd));
            grid.push_back(bnd);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        auto g_fn = [&bands](double r) {
            for (const auto& [a, bnd] : bands)
                if (r >= a && r <= bnd) return bnd;
            return r;
        };
        auto h_fn = [](double r) { return r; };
        std::vector<double> h_grid = grid;
        h_grid.push_back(1.0 - 1e-9);
        std::sort(h_grid.begin(), h_grid.end());
        h_grid.erase(std::unique(h_grid.begin(), h_grid.end()), h_grid.end());

        const MonotoneSample g = MonotoneSample::from_function(g_fn, grid);
        const MonotoneSample h = MonotoneSample::from_function(h_fn, h_grid);
        res.unit = avoidance_check_unitdisc(g, h, E, Gauge::unit_stolz_power(1.0),
                                            [](double r) { return 1.0 - 8.0 * (1.0 - r); });
    }

    res.passed = res.plane.passed && res.unit.passed;
    return res;
}

double brute_force_grid_measure(const IntervalUnion& set, double lo, double hi, long cells) {
    const double cell = (hi - lo) / static_cast<double>(cells);
    const auto& ivs = set.intervals();
    std::size_t p = 0;
    double total = 0.0;
    for (long i = 0; i < cells; ++i) {
        const double a = lo + cell * static_cast<double>(i);
        const double b = a + cell;
        while (p < ivs.size() && ivs[p].hi < a) ++p;
        for (std::size_t q = p; q < ivs.size() && ivs[q].lo < b; ++q)
            total += std::max(0.0, std::min(b, ivs[q].hi) - std::max(a, ivs[q].lo));
    }
    return total;
}

IntervalFuzzResult run_interval_fuzz(int unions, std::uint64_t seed) {
    IntervalFuzzResult res;
    res.unions = unions;
    // Grid range covers every possible insert (offsets up to 1000 plus
    // lengths up to 30).
    const double lo = -1.0;
    const double hi = 1035.0;
    res.tolerance = 1e-6 * (hi - lo);
    std::mt19937_64 eng(seed);
    for (int u = 0; u < unions; ++u) {
        IntervalUnion set;
        const int k = 1 + static_cast<int>(eng() % 100);
        for (int i = 0; i < k; ++i) {
            const double a = uniform_in(eng, 0.0, 1000.0);
            const double len = uniform_in(eng, 1e-4, 30.0);
            set.insert(a, a + len);
        }
        const double grid = brute_force_grid_measure(set, lo, hi);
        res.max_gap = std::max(res.max_gap, std::abs(grid - set.measure()));
    }
    res.passed = res.max_gap <= res.tolerance;
    return res;
}

}  // namespace esetlab::experiments
