#pragma once

#include <esetlab/disc_collection.hpp>
#include <esetlab/gauge.hpp>
#include <esetlab/rational_fn.hpp>
#include <esetlab/types.hpp>

#include <optional>
#include <span>
#include <vector>

namespace esetlab {

/// Boutroux-Cartan exceptional discs for mu points and budget d > 0.
/// Greedy construction: repeatedly take the largest lambda such that some
/// disc of radius lambda d / mu contains at least lambda remaining points,
/// remove the covered points, emit the disc dilated by factor 2.
/// Guarantees: the emitted radii sum to at most 2d, and every z outside all
/// emitted discs has its sorted distances to the original points satisfy
/// dist_(m) > m d / mu for every m. Any construction meeting these two
/// guarantees is conformant; the guarantees, not the algorithm, are the
/// contract.
std::vector<Disc> cartan_discs(std::span<const Complex> points, double d);

struct CartanAnnulus {
    int nu = 0;
    long mu = 0;
    double d_nu = 0.0;
    /// Discs of the level-nu run that meet the annulus A_nu.
    std::vector<Disc> discs;
};

struct CartanConstruction {
    Ambient ambient = Ambient::Plane;
    double alpha = 2.0;
    double b = 0.0;  // unit-disc ratio, unused in the plane
    Gauge gauge = Gauge::plane_identity();
    int j = 0;
    int nu0 = 1;
    int nu_end = 0;
    /// Smallest l >= 1 with 2^l >= alpha.
    int l_exponent = 1;
    std::vector<CartanAnnulus> annuli;
    /// Samples must also avoid |z| <= alpha^nu0 (plane) or
    /// |z| <= 1 - b^nu0 (unit disc).
    double inner_exclusion_radius = 0.0;

    std::vector<Disc> retained_discs() const;
    bool excluded(const Complex& z) const;
    /// Exceptional discs as a collection for reuse by the measure tooling.
    DiscCollection as_collection() const;
};

/// Annulus-by-annulus exceptional set for the pointwise bounds. Per level
/// nu >= nu0, the points of f^(j) with modulus <= alpha^(nu+2) (plane) or
/// <= 1 - b^(nu+2) (unit disc) feed cartan_discs with
/// d_nu = gauge(alpha^nu) / (nu log alpha)^alpha, resp.
/// gauge(b^nu) / (nu^alpha (-log b)^alpha); discs meeting the annulus are
/// retained. nu0 is the smallest level from which every side condition
/// holds: alpha^nu > 4 d_nu and doubling applicability in the plane;
/// 4 d_nu < b^(nu+1), b^(nu+1) < 1 - b^nu and log mu_nu >= 1 in the unit
/// disc (the last only once f has at least three points).
CartanConstruction build_exceptional_set(const RationalFunction& f, int j, double alpha,
                                         const Gauge& gauge, Ambient ambient,
                                         std::optional<double> b = std::nullopt);

struct CartanCheck {
    bool radii_within_budget = true;   // per-annulus sum <= 2 d_nu
    bool origin_excluded = true;       // plane: origin outside all discs
    bool inside_unit_disc = true;      // unit: discs stay inside
    bool side_conditions_ok = true;    // the nu0 conditions at every level
    double tail_sum = 0.0;             // sum r / gauge(size) over retained discs
    double tail_bound = 0.0;           // sum over nu of the per-annulus budget
    /// Plane: closed form sum 2 alpha / (nu^alpha (log alpha)^alpha); it
    /// must agree with the d_nu route termwise.
    double closed_form_sum = 0.0;
    double closed_form_gap = 0.0;
    bool tail_bounded = true;
    bool passed = true;
};

CartanCheck check_construction(const CartanConstruction& con);

}  // namespace esetlab
