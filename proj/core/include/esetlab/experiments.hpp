#pragma once

#include <esetlab/avoidance.hpp>
#include <esetlab/bound_checks.hpp>
#include <esetlab/cartan.hpp>
#include <esetlab/curve_family.hpp>
#include <esetlab/disc_collection.hpp>
#include <esetlab/interval_union.hpp>
#include <esetlab/measure_lab.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace esetlab::experiments {

// Seeded end-to-end experiments behind the `verify` subcommand and the
// acceptance suite. Each runner returns a result struct with a `passed`
// flag and enough numbers for the report lines.

struct CantorResult {
    int levels = 0;
    double diameter_sum = 0.0;
    double expected_diameter_sum = 0.0;
    double projection_measure = 0.0;
    bool valid = false;
    bool passed = false;
};
CantorResult run_cantor(int levels = 12);

struct NamedExamplesResult {
    double diameter_sum_1 = 0.0;
    double diameter_sum_2 = 0.0;
    bool sums_below_two = false;
    bool sums_increasing = false;
    long ray_misses = 0;   // designated rays must meet every disc of their family
    long line_misses = 0;  // same for the horizontal lines
    bool passed = false;
};
NamedExamplesResult run_named_examples(int n_max = 20, int k_max = 20);

struct ConcavePlaneResult {
    ExceptionalCReport exceptional;
    HitReport monte_carlo;
    long width_violations = 0;
    bool passed = false;
};
/// Concave-gauge avoidance experiment: K = sqrt(x), 500-disc seeded set,
/// tail budget 1e-3, envelope M = 1 (N = 1). Exceptional measure must stay
/// below 4 alpha^2 epsilon, the Monte Carlo hit fraction below its binomial
/// cap, and no tail disc may exceed its width budget.
ConcavePlaneResult run_concave_plane(std::uint64_t seed = 7, int count = 500,
                                     double epsilon = 1e-3, long mc_samples = 10000);

struct ConvexPlaneResult {
    ExceptionalCReport exceptional;
    long width_violations = 0;
    bool passed = false;
};
/// Decreasing-gauge experiment: L = 1/x, exceptional measure below
/// (4/beta) epsilon, no width-budget violations.
ConvexPlaneResult run_convex_plane(std::uint64_t seed = 11, int count = 500,
                                   double epsilon = 1e-3);

struct RapidPlaneResult {
    TrendReport trend;
    bool valid = false;
    bool passed = false;
};
/// Rapid-gauge surrogate: per-disc widths over the tail must decay under a
/// shrinking envelope (final below 10% of initial).
RapidPlaneResult run_rapid_plane(std::uint64_t seed = 13, int count = 400);

struct HorocycleResult {
    int n_max = 0;
    double ratio_at_nmax = 0.0;     // r_n / (1-|z_n|) * log^2(1+n)
    double partial_sum = 0.0;       // sum r_n / sqrt(1-|z_n|)
    double last_increment = 0.0;
    bool valid = false;
    bool passed = false;
};
HorocycleResult run_horocycle(int n_max = 100000);

struct UnitConvexResult {
    std::vector<double> widths;
    double initial_envelope = 0.0;
    double final_envelope = 0.0;
    bool valid = false;
    bool passed = false;
};
/// Zero-angle-gauge surrogate in the unit disc: tail widths decay.
UnitConvexResult run_unit_convex(std::uint64_t seed = 17, int count = 300);

struct StolzResult {
    double gamma = 1.0;
    double k_comparability = 0.0;
    long violations = 0;
    int count = 0;
    bool passed = false;
};
/// Width budget (4 + 2K) r / (1-|z|)^gamma over seeded discs inside S(1,2).
StolzResult run_stolz(double gamma, std::uint64_t seed = 19, int count = 200);

struct CartanFuzzResult {
    int sets = 0;
    long budget_violations = 0;
    long distance_violations = 0;
    bool passed = false;
};
/// Seeded point sets (mu <= 50): emitted radii within 2d and the sorted
/// distance guarantee dist_(m) > m d / mu at outside samples.
CartanFuzzResult run_cartan_fuzz(int sets = 200, long samples_per_set = 1000,
                                 std::uint64_t seed = 23);

struct LogDerivResult {
    CartanCheck construction_check;
    BoundReport report;
    double closed_form_gap = 0.0;
    bool passed = false;
};
/// Plane derivative-quotient experiment: 100 seeded zeros in |z| < 50,
/// k = 1, j = 0, gauge x^(3/4), alpha = 2. Tail sum of the construction
/// matches the closed-form budget termwise; inner chain holds at every
/// admissible sample; the empirical constant is stable under doubling.
LogDerivResult run_logderiv(std::uint64_t seed = 29, int zero_count = 100, long samples = 10000);

/// Difference analogue with mixed zeros/poles and shift c = 1 + i/2.
LogDerivResult run_logdiff(std::uint64_t seed = 31, long samples = 10000);

/// Unit-disc analogue on the geometric zero sequence 1 - 2^-m, b = 1/2,
/// gauge x^2; also asserts the three nu0 side conditions.
LogDerivResult run_logderiv_disc(long samples = 10000);

struct AvoidanceResult {
    AvoidanceReport plane;
    AvoidanceReport unit;
    bool passed = false;
};
/// The two synthetic dilation-avoidance instances: constant gauge with
/// E = [2,3] and eps(r) = 1/r; identity unit gauge with geometric E and
/// b(r) = 1 - 8(1-r).
AvoidanceResult run_avoidance();

struct IntervalFuzzResult {
    int unions = 0;
    double max_gap = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};
/// Randomized unions against the cell-by-cell grid measure (1e6 cells).
IntervalFuzzResult run_interval_fuzz(int unions = 1000, std::uint64_t seed = 37);

/// Cell-accumulated measure of a union over [lo, hi]; the independent
/// route the fuzz harness compares against.
double brute_force_grid_measure(const IntervalUnion& set, double lo, double hi,
                                long cells = 1000000);

/// Admissible plane samples for the bound checkers: seeded log-annulus
/// rejection sampling outside the construction.
std::vector<Complex> sample_admissible_plane(const CartanConstruction& con, double r_lo,
                                             double r_hi, long count, std::uint64_t seed);

}  // namespace esetlab::experiments
