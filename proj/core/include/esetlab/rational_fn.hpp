#pragma once

#include <esetlab/types.hpp>

#include <vector>

namespace esetlab {

enum class PointKind { Zero, Pole };

struct ZeroPole {
    Complex location;
    int multiplicity = 1;
    PointKind kind = PointKind::Zero;
};

/// Rational test function given by its zeros and poles,
/// f(z) = prod (z - a_m)^(+-mult), ordered by increasing modulus.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(std::vector<ZeroPole> points);

    const std::vector<ZeroPole>& points() const { return points_; }
    bool has_poles() const;
    long total_zero_multiplicity() const;
    long total_pole_multiplicity() const;
    double max_point_modulus() const;

    /// Zeros and poles of the j-th derivative. For j = 0 these are the
    /// defining points. For j > 0, zeros come from the explicit numerator
    /// polynomial (each numeric root with multiplicity 1) and poles inherit
    /// multiplicity + j; with poles of multiplicity > 1 this path is
    /// experimental (spurious numerator roots at the poles are deflated).
    std::vector<ZeroPole> derivative_points(int j) const;

    /// Points listed according to multiplicity (each of multiplicity m
    /// appears m times), as the Cartan construction consumes them.
    std::vector<Complex> multiplicity_expanded_points(int j) const;

  private:
    std::vector<ZeroPole> points_;
    mutable std::vector<std::vector<ZeroPole>> derivative_cache_;
};

/// Exact evaluation of f^(k)/f^(j) through the logarithmic-derivative
/// recurrence: with S_i the i-th derivative of f'/f (a sum of shifted
/// reciprocal powers), f^(m)/f is an integer polynomial in S_0..S_{m-1}
/// built by h_{m+1} = h_m' + h_m S_0; the requested ratio is h_k / h_j.
/// This path never forms the huge polynomial values themselves, so it is
/// overflow-free for ~100 zeros. Throws SingularPoint at zeros/poles of
/// f^(j).
Complex log_derivative(const RationalFunction& f, int k, int j, const Complex& z);

/// Number of zeros and poles of f^(j) with modulus <= t, counting
/// multiplicities.
long counting_function(const RationalFunction& f, int j, double t);

/// Growth-functional stand-in for rational functions in the plane:
/// max(total zero multiplicity, total pole multiplicity) * log r, r >= 1.
double characteristic_proxy(const RationalFunction& f, double r);

/// Unit-disc stand-in: the integrated pole-counting function
/// sum over poles with |a| <= r of mult * log(r / |a|). Exact up to the
/// bounded proximity term; reports that rely on it say so.
double characteristic_proxy_unit(const RationalFunction& f, double r);

/// log(f(z+shift)) - log(f(z)) for the modulus only:
/// sum of +-mult * (log|z+shift-a| - log|z-a|); overflow-free.
double log_modulus_ratio(const RationalFunction& f, const Complex& shift, const Complex& z);

/// Dense polynomial with complex coefficients (ascending powers). Test
/// oracle and j > 0 support; not meant for high degree at large |z|.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    static Polynomial from_roots(const std::vector<Complex>& roots);

    std::size_t degree() const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex eval(const Complex& z) const;
    Polynomial derivative() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial scaled(const Complex& factor) const;
    /// Synthetic division by (z - root); the remainder is discarded.
    Polynomial deflated(const Complex& root) const;
    /// All roots via the companion-matrix eigenvalues.
    std::vector<Complex> roots() const;

  private:
    void trim();
    std::vector<Complex> coeffs_;
};

}  // namespace esetlab
