#pragma once

#include <esetlab/gauge.hpp>
#include <esetlab/types.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace esetlab {

/// Finite, validated truncation of a gauge-weighted disc collection.
/// Infinite collections are represented by a truncation plus a declared tail
/// budget: the sum of r_n / gauge(size_n) over n >= tail_index stays below
/// epsilon. Discs are ordered by increasing |center| at construction and the
/// struct is treated as immutable afterwards.
struct DiscCollection {
    Ambient ambient = Ambient::Plane;
    Gauge gauge = Gauge::plane_identity();
    std::vector<Disc> discs;
    double epsilon = 0.0;
    std::size_t tail_index = 0;

    double size_of(std::size_t n) const { return size_coordinate(ambient, discs[n].center); }
    double ratio_of(std::size_t n) const { return discs[n].radius / gauge.eval(size_of(n)); }
    double tail_sum() const;
    double diameter_sum() const;
};

/// Sorts by increasing |center| and attaches the declared tail budget.
DiscCollection make_collection(Ambient ambient, Gauge gauge, std::vector<Disc> discs,
                               double epsilon, std::size_t tail_index);

struct ValidationIssue {
    std::size_t index = 0;
    std::string what;
};

struct ValidationReport {
    bool valid = false;
    double tail_sum = 0.0;
    double epsilon = 0.0;
    std::vector<double> ratios;
    /// Heuristic decreasing-to-zero indicator for the ratio sequence.
    bool ratios_trend_to_zero = false;
    /// Rapid kinds only: r_n / Re(center) tends to zero along the tail.
    bool technical_trend_ok = true;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate(const DiscCollection& col);

/// Rays arg(z) = 1/n, n <= n_max, each carrying k_max discs with radii
/// 2^-(n+k); moduli grow as k e^n (the growth rate is a free choice).
/// Constant gauge; total diameter sum stays below 2.
DiscCollection gen_example1(int n_max, int k_max);

/// Horizontal-line variant: Im(center) = 1/n, radii 2^-(n+k).
DiscCollection gen_example2(int n_max, int k_max);

/// Ternary-cover collection: level k contributes 2^k discs whose vertical
/// projections are the open intervals of length 2/3^k centered at the
/// standard middle-thirds interval centers. The construction is placed at
/// real-axis offset cantor_shift() so that the radial projection distorts
/// the vertical one by less than 1e-10. Imaginary parts default to 1; a
/// seed draws them uniformly from [0.5, 2] (any choice is admissible).
DiscCollection gen_cantor_rset(int levels, std::optional<std::uint64_t> seed = std::nullopt);

double cantor_shift();

/// Centers (1 + exp(i/n))/2 on the horocycle |z - 1/2| = 1/2 with radii
/// 1/(n^2 log^2(1+n)); gauge l(x) = sqrt(x). Leading indices whose discs
/// would poke out of the unit disc are dropped.
DiscCollection gen_horocycle_lset(int n_max);
/// First index the horocycle generator keeps (disc fits inside the disc).
int horocycle_first_valid_index();
/// Center and radius for formula index n (valid or not).
Disc horocycle_disc(int n);

struct RandomSetParams {
    Ambient ambient = Ambient::Plane;
    Gauge gauge = Gauge::plane_power(0.5);
    int count = 500;
    double epsilon = 1e-3;
    double envelope_m = 1.0;  // plane: slope bound |y| <= M x; unit: Stolz aperture
    std::uint64_t seed = 7;
    // Plane placement range for the rotated abscissa, log-spaced.
    double x_lo = 10.0;
    double x_hi = 1e4;
    // Unit placement range for the size coordinate 1 - |z|, log-spaced.
    double t_lo = 1e-5;
    double t_hi = 1e-2;
    // Curve-parameter range used when placing discs near the family.
    double c_lo = 0.1;
    double c_hi = 10.0;
};

/// Deterministic seeded instance generator. Plane concave gauges place
/// centers inside the slope envelope |y| <= M x; decreasing gauges place
/// them near the curves y = c L(x); unit gauges place them inside the
/// aperture |1-z| <= M (1-|z|) with radii decaying like gauge(t) * t so the
/// per-disc widths trend downward. Radii are scaled so the declared tail
/// budget holds with a factor-2 margin, and every tail disc satisfies
/// x - r >= x/2 >= e (plane) or stays strictly inside the unit disc.
DiscCollection gen_random(const RandomSetParams& params);

}  // namespace esetlab
