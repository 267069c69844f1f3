#pragma once

#include <esetlab/cartan.hpp>
#include <esetlab/gauge.hpp>
#include <esetlab/rational_fn.hpp>
#include <esetlab/types.hpp>

#include <span>
#include <string>
#include <vector>

namespace esetlab {

struct BoundSample {
    Complex z;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double inner_lhs = 0.0;
    double inner_rhs = 0.0;
    bool inner_ok = true;
};

struct BoundReport {
    std::vector<BoundSample> samples;
    std::vector<std::size_t> rejected;  // indices of inadmissible input samples
    /// max LHS/RHS over the accepted samples; the abstract constant is
    /// existential, so stability of this maximum under sample doubling is
    /// the testable surrogate.
    double empirical_c = 0.0;
    double empirical_c_first_half = 0.0;
    double stability = 0.0;  // |C_full - C_half| / C_full
    long inner_violations = 0;
    /// j > 0 with poles relies on numeric numerator roots; experimental.
    bool experimental_j_path = false;
    /// Growth functional used in the bracket, recorded for the reader.
    std::string characteristic_note;
};

/// Pointwise derivative-quotient bound in the plane. Per accepted sample z
/// (outside the exceptional discs and the inner exclusion radius):
///   LHS  = |f^(k)/f^(j)(z)|^(1/(k-j)),
///   RHS  = T(alpha r)/r + n_j(alpha r) log+ n_j(alpha r) (log r)^alpha / K(r),
/// plus the direct inner-chain inequality
///   sum over |a_m| <= alpha r of 1/|z - a_m|
///     <= alpha^(l+1) n_j(alpha^2 r) log n_j(alpha^2 r) (log r)^alpha / K(r).
BoundReport check_logderiv_bound(const RationalFunction& f, int k, int j, double alpha,
                                 const Gauge& gauge, std::span<const Complex> z_samples,
                                 const CartanConstruction& con);

/// Difference analogue: LHS = |log|f(z+shift)/f(z)||, same bracket with
/// n = n_0; the inner chain is the same Cartan sum, which controls the
/// termwise difference expansion. Both z and z+shift must be admissible.
BoundReport check_logdiff_bound(const RationalFunction& f, const Complex& shift, double alpha,
                                const Gauge& gauge, std::span<const Complex> z_samples,
                                const CartanConstruction& con);

/// Unit-disc variant with s(r) = 1 - b(1-r):
///   RHS = (T(s(r)) - log(1-r))/(1-r)^2 + W(r),
///   W(r) = n_j(s(r)) log+ n_j(s(r)) log^alpha(1/(1-r)) / k(1-r),
/// and inner chain
///   sum over |a_m| <= s(r) of 1/|z - a_m|
///     <= 2 n_j(1-b^2(1-r)) log n_j(1-b^2(1-r)) log^alpha(1/(1-r)) / k(1-r).
BoundReport check_logderiv_bound_unitdisc(const RationalFunction& f, int k, int j, double alpha,
                                          double b, const Gauge& gauge,
                                          std::span<const Complex> z_samples,
                                          const CartanConstruction& con);

}  // namespace esetlab
