#include <esetlab/rational_fn.hpp>

#include <esetlab/errors.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

namespace esetlab {

namespace {

constexpr double kPointTol = 1e-13;

double sign_of(PointKind k) { return k == PointKind::Zero ? 1.0 : -1.0; }

// f^(m)/f as an integer polynomial in S_0..S_{m-1}, where S_i is the i-th
// derivative of f'/f. Monomials are exponent vectors; the recurrence is
// h_{m+1} = h_m' + h_m S_0 with h' expanded by the chain rule S_i -> S_{i+1}.
using Monomial = std::vector<int>;
using SymbolicPoly = std::map<Monomial, double>;

SymbolicPoly multiply_s0(const SymbolicPoly& p) {
    SymbolicPoly out;
    for (const auto& [mono, coeff] : p) {
        Monomial m = mono;
        if (m.empty()) m.resize(1, 0);
        ++m[0];
        out[m] += coeff;
    }
    return out;
}

SymbolicPoly differentiate(const SymbolicPoly& p) {
    SymbolicPoly out;
    for (const auto& [mono, coeff] : p) {
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            Monomial m = mono;
            --m[i];
            if (m.size() <= i + 1) m.resize(i + 2, 0);
            ++m[i + 1];
            out[m] += coeff * mono[i];
        }
    }
    return out;
}

SymbolicPoly add(SymbolicPoly a, const SymbolicPoly& b) {
    for (const auto& [mono, coeff] : b) a[mono] += coeff;
    return a;
}

const SymbolicPoly& log_derivative_poly(int order) {
    static std::vector<SymbolicPoly> cache;  // cache[m] = f^(m+1)/f
    if (cache.empty()) {
        SymbolicPoly h1;
        h1[Monomial{1}] = 1.0;
        cache.push_back(h1);
    }
    while (static_cast<int>(cache.size()) < order)
        cache.push_back(add(differentiate(cache.back()), multiply_s0(cache.back())));
    return cache[static_cast<std::size_t>(order - 1)];
}

Complex evaluate_symbolic(const SymbolicPoly& p, const std::vector<Complex>& s_values) {
    Complex total = 0.0;
    for (const auto& [mono, coeff] : p) {
        Complex term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i)
            for (int e = 0; e < mono[i]; ++e) term *= s_values[i];
        total += term;
    }
    return total;
}

}  // namespace

RationalFunction::RationalFunction(std::vector<ZeroPole> points) : points_(std::move(points)) {
    for (const ZeroPole& p : points_)
        if (p.multiplicity < 1) throw InvalidInput("RationalFunction: multiplicity >= 1");
    std::stable_sort(points_.begin(), points_.end(), [](const ZeroPole& a, const ZeroPole& b) {
        return std::abs(a.location) < std::abs(b.location);
    });
}

bool RationalFunction::has_poles() const {
    return std::any_of(points_.begin(), points_.end(),
                       [](const ZeroPole& p) { return p.kind == PointKind::Pole; });
}

long RationalFunction::total_zero_multiplicity() const {
    long n = 0;
    for (const ZeroPole& p : points_)
        if (p.kind == PointKind::Zero) n += p.multiplicity;
    return n;
}

long RationalFunction::total_pole_multiplicity() const {
    long n = 0;
    for (const ZeroPole& p : points_)
        if (p.kind == PointKind::Pole) n += p.multiplicity;
    return n;
}

double RationalFunction::max_point_modulus() const {
    double m = 0.0;
    for (const ZeroPole& p : points_) m = std::max(m, std::abs(p.location));
    return m;
}

std::vector<ZeroPole> RationalFunction::derivative_points(int j) const {
    if (j < 0) throw InvalidInput("derivative_points: j >= 0");
    if (j == 0) return points_;
    if (derivative_cache_.size() >= static_cast<std::size_t>(j) &&
        !derivative_cache_[static_cast<std::size_t>(j) - 1].empty())
        return derivative_cache_[static_cast<std::size_t>(j) - 1];

    std::vector<Complex> zero_roots, pole_roots;
    for (const ZeroPole& p : points_) {
        auto& dst = p.kind == PointKind::Zero ? zero_roots : pole_roots;
        for (int m = 0; m < p.multiplicity; ++m) dst.push_back(p.location);
    }

    Polynomial numer = Polynomial::from_roots(zero_roots);
    if (pole_roots.empty()) {
        for (int i = 0; i < j; ++i) numer = numer.derivative();
    } else {
        const Polynomial q = Polynomial::from_roots(pole_roots);
        const Polynomial qd = q.derivative();
        // f^(i) = N_i / Q^(i+1) with N_{i+1} = N_i' Q - (i+1) N_i Q'.
        for (int i = 0; i < j; ++i)
            numer = numer.derivative() * q - (numer * qd).scaled(static_cast<double>(i + 1));
        // Poles of multiplicity m >= 2 force numerator roots of order
        // j (m - 1) at the pole itself; peel them off before counting.
        for (const ZeroPole& p : points_) {
            if (p.kind != PointKind::Pole || p.multiplicity < 2) continue;
            for (int s = 0; s < j * (p.multiplicity - 1); ++s) numer = numer.deflated(p.location);
        }
    }

    std::vector<ZeroPole> out;
    if (numer.degree() > 0 || (numer.coeffs().size() == 1 && numer.coeffs()[0] == Complex(0.0)))
        for (const Complex& root : numer.roots()) out.push_back({root, 1, PointKind::Zero});
    for (const ZeroPole& p : points_)
        if (p.kind == PointKind::Pole)
            out.push_back({p.location, p.multiplicity + j, PointKind::Pole});
    std::stable_sort(out.begin(), out.end(), [](const ZeroPole& a, const ZeroPole& b) {
        return std::abs(a.location) < std::abs(b.location);
    });

    if (derivative_cache_.size() < static_cast<std::size_t>(j))
        derivative_cache_.resize(static_cast<std::size_t>(j));
    derivative_cache_[static_cast<std::size_t>(j) - 1] = out;
    return out;
}

std::vector<Complex> RationalFunction::multiplicity_expanded_points(int j) const {
    std::vector<Complex> out;
    for (const ZeroPole& p : derivative_points(j))
        for (int m = 0; m < p.multiplicity; ++m) out.push_back(p.location);
    return out;
}

Complex log_derivative(const RationalFunction& f, int k, int j, const Complex& z) {
    if (!(k > j && j >= 0)) throw InvalidInput("log_derivative: needs k > j >= 0");
    for (const ZeroPole& p : f.points())
        if (std::abs(z - p.location) < kPointTol * (1.0 + std::abs(z)))
            throw SingularPoint("log_derivative: z at a zero/pole of f");

    // S_i(z): i-th derivative of f'/f, evaluated termwise.
    std::vector<Complex> s(static_cast<std::size_t>(k));
    for (const ZeroPole& p : f.points()) {
        const Complex inv = 1.0 / (z - p.location);
        Complex power = inv;
        double factorial_sign = 1.0;
        for (int i = 0; i < k; ++i) {
            s[static_cast<std::size_t>(i)] +=
                sign_of(p.kind) * p.multiplicity * factorial_sign * power;
            power *= inv;
            factorial_sign *= -static_cast<double>(i + 1);
        }
    }

    const Complex hk = evaluate_symbolic(log_derivative_poly(k), s);
    if (j == 0) return hk;
    const Complex hj = evaluate_symbolic(log_derivative_poly(j), s);
    if (hj == Complex(0.0)) throw SingularPoint("log_derivative: z is a zero of f^(j)");
    return hk / hj;
}

long counting_function(const RationalFunction& f, int j, double t) {
    if (t < 0.0) throw InvalidInput("counting_function: t >= 0");
    long n = 0;
    for (const ZeroPole& p : f.derivative_points(j))
        if (std::abs(p.location) <= t) n += p.multiplicity;
    return n;
}

double characteristic_proxy(const RationalFunction& f, double r) {
    if (!(r >= 1.0)) throw InvalidInput("characteristic_proxy: r >= 1");
    const long deg =
        std::max(f.total_zero_multiplicity(), f.total_pole_multiplicity());
    return static_cast<double>(deg) * std::log(r);
}

double characteristic_proxy_unit(const RationalFunction& f, double r) {
    if (!(r > 0.0 && r < 1.0)) throw InvalidInput("characteristic_proxy_unit: r in (0,1)");
    double total = 0.0;
    for (const ZeroPole& p : f.points()) {
        if (p.kind != PointKind::Pole) continue;
        const double a = std::abs(p.location);
        if (a == 0.0) throw InvalidInput("characteristic_proxy_unit: pole at the origin");
        if (a <= r) total += p.multiplicity * std::log(r / a);
    }
    return total;
}

double log_modulus_ratio(const RationalFunction& f, const Complex& shift, const Complex& z) {
    double total = 0.0;
    for (const ZeroPole& p : f.points()) {
        const double d0 = std::abs(z - p.location);
        const double d1 = std::abs(z + shift - p.location);
        if (d0 < kPointTol || d1 < kPointTol)
            throw SingularPoint("log_modulus_ratio: evaluation at a zero/pole");
        total += sign_of(p.kind) * p.multiplicity * (std::log(d1) - std::log(d0));
    }
    return total;
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{1.0};
    for (const Complex& r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

std::size_t Polynomial::degree() const { return coeffs_.size() - 1; }

Complex Polynomial::eval(const Complex& z) const {
    Complex acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(std::vector<Complex>{Complex(0.0)});
    std::vector<Complex> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<Complex> c(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<Complex> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Complex& factor) const {
    std::vector<Complex> c = coeffs_;
    for (Complex& v : c) v *= factor;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::deflated(const Complex& root) const {
    if (coeffs_.size() <= 1) return *this;
    std::vector<Complex> q(coeffs_.size() - 1, 0.0);
    Complex carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + carry * root;
    }
    return Polynomial(std::move(q));
}

std::vector<Complex> Polynomial::roots() const {
    const std::size_t n = degree();
    if (n == 0) return {};
    const Complex lead = coeffs_.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                        static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) =
            -coeffs_[i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
    if (solver.info() != Eigen::Success)
        throw NumericFailure("Polynomial::roots: eigen solver failed");
    std::vector<Complex> out;
    out.reserve(n);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        out.push_back(solver.eigenvalues()(i));
    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        return std::abs(a) < std::abs(b);
    });
    return out;
}

}  // namespace esetlab
