// Acceptance suite: one line per criterion, wall-clock budget included.
// Exit code 0 only if every selected criterion passes.

#include <esetlab/experiments.hpp>

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace esetlab;
using namespace esetlab::experiments;

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* label;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

Outcome cantor_criterion() {
    const CantorResult r = run_cantor(12);
    return {r.passed, fmt("diameter sum %.12f (expected %.12f), projection measure %.12f",
                          r.diameter_sum, r.expected_diameter_sum, r.projection_measure)};
}

Outcome examples_criterion() {
    const NamedExamplesResult r = run_named_examples(20, 20);
    return {r.passed,
            fmt("sums %.9f / %.9f < 2, increasing=%d, ray misses %ld, line misses %ld",
                r.diameter_sum_1, r.diameter_sum_2, r.sums_increasing ? 1 : 0, r.ray_misses,
                r.line_misses)};
}

Outcome concave_criterion() {
    const ConcavePlaneResult r = run_concave_plane(7, 500, 1e-3, 10000);
    return {r.passed,
            fmt("measure %.3e <= %.3e, width violations %ld, MC fraction %.3e <= %.3e",
                r.exceptional.measure, r.exceptional.bound, r.width_violations,
                r.monte_carlo.fraction, r.monte_carlo.p_bound + r.monte_carlo.slack)};
}

Outcome convex_criterion() {
    const ConvexPlaneResult r = run_convex_plane(11, 500, 1e-3);
    return {r.passed, fmt("measure %.3e <= %.3e, width violations %ld", r.exceptional.measure,
                          r.exceptional.bound, r.width_violations)};
}

Outcome rapid_criterion() {
    const RapidPlaneResult r = run_rapid_plane(13, 400);
    return {r.passed, fmt("width envelope %.3e -> %.3e (ratio %.4f)",
                          r.trend.initial_envelope, r.trend.final_envelope,
                          r.trend.initial_envelope > 0.0
                              ? r.trend.final_envelope / r.trend.initial_envelope
                              : 0.0)};
}

Outcome horocycle_criterion() {
    const HorocycleResult r = run_horocycle(100000);
    return {r.passed, fmt("ratio %.6f (target 8 within 1%%), last increment %.3e",
                          r.ratio_at_nmax, r.last_increment)};
}

Outcome stolz_criterion() {
    const StolzResult g1 = run_stolz(1.0, 19, 200);
    const StolzResult g2 = run_stolz(2.0, 19, 200);
    return {g1.passed && g2.passed,
            fmt("gamma=1: %ld violations (K=%.3f); gamma=2: %ld violations (K=%.3f)",
                g1.violations, g1.k_comparability, g2.violations, g2.k_comparability)};
}

Outcome cartan_criterion() {
    const CartanFuzzResult r = run_cartan_fuzz(200, 1000, 23);
    return {r.passed, fmt("%d sets, budget violations %ld, distance violations %ld", r.sets,
                          r.budget_violations, r.distance_violations)};
}

Outcome logderiv_criterion() {
    const LogDerivResult r = run_logderiv(29, 100, 10000);
    return {r.passed,
            fmt("closed-form gap %.2e, inner violations %ld, C %.4f (stability %.3f)",
                r.closed_form_gap, r.report.inner_violations, r.report.empirical_c,
                r.report.stability)};
}

Outcome logdiff_criterion() {
    const LogDerivResult d = run_logdiff(31, 10000);
    const LogDerivResult u = run_logderiv_disc(10000);
    return {d.passed && u.passed,
            fmt("difference: %ld inner violations (stab %.3f); unit disc: %ld inner "
                "violations (stab %.3f), side conditions %s",
                d.report.inner_violations, d.report.stability, u.report.inner_violations,
                u.report.stability,
                u.construction_check.side_conditions_ok ? "ok" : "FAIL")};
}

Outcome avoidance_criterion() {
    const AvoidanceResult r = run_avoidance();
    return {r.passed,
            fmt("plane R=%.3f (%zu violations), unit R=%.6f (%zu violations), "
                "interval step %s/%s",
                r.plane.R, r.plane.violations.size(), r.unit.R, r.unit.violations.size(),
                r.plane.interval_step_ok ? "ok" : "FAIL",
                r.unit.interval_step_ok ? "ok" : "FAIL")};
}

Outcome interval_criterion() {
    const IntervalFuzzResult r = run_interval_fuzz(1000, 37);
    return {r.passed,
            fmt("%d unions, max gap %.3e <= %.3e", r.unions, r.max_gap, r.tolerance)};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "ternary-cover diameter sum and projection measure", 1.0, cantor_criterion},
        {2, "ray/line example generators", 1.0, examples_criterion},
        {3, "concave-gauge exceptional measure, widths, Monte Carlo", 30.0,
         concave_criterion},
        {4, "decreasing-gauge exceptional measure and widths", 30.0, convex_criterion},
        {5, "rapid-gauge width envelope decay", 30.0, rapid_criterion},
        {6, "horocycle collection asymptotics", 10.0, horocycle_criterion},
        {7, "non-tangential width budget, gamma in {1,2}", 30.0, stolz_criterion},
        {8, "exceptional-disc construction guarantees", 60.0, cartan_criterion},
        {9, "derivative-quotient bound experiment", 60.0, logderiv_criterion},
        {10, "difference and unit-disc bound experiments", 120.0, logdiff_criterion},
        {11, "dilation-avoidance instances", 5.0, avoidance_criterion},
        {12, "interval-union measure fuzzing", 10.0, interval_criterion},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    bool all_passed = true;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed <= c.time_limit_s;
        const bool passed = outcome.passed && in_budget;
        all_passed = all_passed && passed;
        std::printf("[%s] C%02d %s: %s [t=%.2fs, limit %.0fs]\n", passed ? "PASS" : "FAIL",
                    c.id, c.label, outcome.detail.c_str(), elapsed, c.time_limit_s);
        if (!in_budget) std::printf("       time budget exceeded\n");
    }
    return all_passed ? 0 : 1;
}
