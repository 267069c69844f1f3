#include <esetlab/bound_checks.hpp>

#include <esetlab/errors.hpp>

#include <algorithm>
#include <cmath>

namespace esetlab {

namespace {

double log_plus(double x) { return std::max(std::log(x), 0.0); }

void finalize(BoundReport& rep) {
    rep.empirical_c = 0.0;
    rep.empirical_c_first_half = 0.0;
    const std::size_t half = rep.samples.size() / 2;
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        rep.empirical_c = std::max(rep.empirical_c, rep.samples[i].ratio);
        if (i < half) rep.empirical_c_first_half = std::max(rep.empirical_c_first_half,
                                                            rep.samples[i].ratio);
        if (!rep.samples[i].inner_ok) ++rep.inner_violations;
    }
    rep.stability = rep.empirical_c > 0.0
                        ? std::abs(rep.empirical_c - rep.empirical_c_first_half) / rep.empirical_c
                        : 0.0;
}

double cartan_point_sum(const RationalFunction& f, int j, const Complex& z, double cutoff) {
    double sum = 0.0;
    for (const ZeroPole& p : f.derivative_points(j)) {
        if (std::abs(p.location) > cutoff) continue;
        const double dist = std::abs(z - p.location);
        if (dist == 0.0) throw SingularPoint("cartan_point_sum: sample at a point");
        sum += static_cast<double>(p.multiplicity) / dist;
    }
    return sum;
}

}  // namespace

BoundReport check_logderiv_bound(const RationalFunction& f, int k, int j, double alpha,
                                 const Gauge& gauge, std::span<const Complex> z_samples,
                                 const CartanConstruction& con) {
    if (!(k > j && j >= 0)) throw InvalidInput("check_logderiv_bound: needs k > j >= 0");
    BoundReport rep;
    rep.experimental_j_path = j > 0 && f.has_poles();
    rep.characteristic_note = "T(r) = max(deg num, deg den) log r (rational closed form)";

    const double al1 = std::pow(alpha, con.l_exponent + 1);
    for (std::size_t i = 0; i < z_samples.size(); ++i) {
        const Complex z = z_samples[i];
        if (con.excluded(z)) {
            rep.rejected.push_back(i);
            continue;
        }
        const double r = std::abs(z);
        BoundSample s;
        s.z = z;
        const double nj_ar = static_cast<double>(counting_function(f, j, alpha * r));
        s.lhs = std::pow(std::abs(log_derivative(f, k, j, z)), 1.0 / (k - j));
        s.rhs = characteristic_proxy(f, alpha * r) / r +
                nj_ar * log_plus(nj_ar) * std::pow(std::log(r), alpha) / gauge.eval(r);
        s.ratio = s.rhs > 0.0 ? s.lhs / s.rhs : 0.0;

        const double nj_a2r = static_cast<double>(counting_function(f, j, alpha * alpha * r));
        s.inner_lhs = cartan_point_sum(f, j, z, alpha * r);
        s.inner_rhs = al1 * nj_a2r * std::log(std::max(nj_a2r, 1.0)) *
                      std::pow(std::log(r), alpha) / gauge.eval(r);
        s.inner_ok = s.inner_lhs <= s.inner_rhs * (1.0 + 1e-12);
        rep.samples.push_back(s);
    }
    finalize(rep);
    return rep;
}

BoundReport check_logdiff_bound(const RationalFunction& f, const Complex& shift, double alpha,
                                const Gauge& gauge, std::span<const Complex> z_samples,
                                const CartanConstruction& con) {
    BoundReport rep;
    rep.characteristic_note = "T(r) = max(deg num, deg den) log r (rational closed form)";
    const double al1 = std::pow(alpha, con.l_exponent + 1);
    for (std::size_t i = 0; i < z_samples.size(); ++i) {
        const Complex z = z_samples[i];
        if (con.excluded(z) || con.excluded(z + shift)) {
            rep.rejected.push_back(i);
            continue;
        }
        const double r = std::abs(z);
        BoundSample s;
        s.z = z;
        const double n_ar = static_cast<double>(counting_function(f, 0, alpha * r));
        s.lhs = std::abs(log_modulus_ratio(f, shift, z));
        s.rhs = characteristic_proxy(f, alpha * r) / r +
                n_ar * log_plus(n_ar) * std::pow(std::log(r), alpha) / gauge.eval(r);
        s.ratio = s.rhs > 0.0 ? s.lhs / s.rhs : 0.0;

        const double n_a2r = static_cast<double>(counting_function(f, 0, alpha * alpha * r));
        s.inner_lhs = cartan_point_sum(f, 0, z, alpha * r);
        s.inner_rhs = al1 * n_a2r * std::log(std::max(n_a2r, 1.0)) *
                      std::pow(std::log(r), alpha) / gauge.eval(r);
        s.inner_ok = s.inner_lhs <= s.inner_rhs * (1.0 + 1e-12);
        rep.samples.push_back(s);
    }
    finalize(rep);
    return rep;
}

BoundReport check_logderiv_bound_unitdisc(const RationalFunction& f, int k, int j, double alpha,
                                          double b, const Gauge& gauge,
                                          std::span<const Complex> z_samples,
                                          const CartanConstruction& con) {
    if (!(k > j && j >= 0)) throw InvalidInput("check_logderiv_bound_unitdisc: k > j >= 0");
    if (!(b > 0.0 && b < 1.0)) throw InvalidInput("check_logderiv_bound_unitdisc: b in (0,1)");
    BoundReport rep;
    rep.experimental_j_path = j > 0 && f.has_poles();
    rep.characteristic_note =
        "T(r) = integrated pole counting function (rational closed form, unit disc)";
    for (std::size_t i = 0; i < z_samples.size(); ++i) {
        const Complex z = z_samples[i];
        if (con.excluded(z) || !(std::abs(z) < 1.0)) {
            rep.rejected.push_back(i);
            continue;
        }
        const double r = std::abs(z);
        const double one_minus_r = 1.0 - r;
        const double s_r = 1.0 - b * one_minus_r;
        const double loginv = std::log(1.0 / one_minus_r);
        BoundSample s;
        s.z = z;
        const double nj_sr = static_cast<double>(counting_function(f, j, s_r));
        const double w_r =
            nj_sr * log_plus(nj_sr) * std::pow(loginv, alpha) / gauge.eval(one_minus_r);
        s.lhs = std::pow(std::abs(log_derivative(f, k, j, z)), 1.0 / (k - j));
        s.rhs = (characteristic_proxy_unit(f, s_r) - std::log(one_minus_r)) /
                    (one_minus_r * one_minus_r) +
                w_r;
        s.ratio = s.rhs > 0.0 ? s.lhs / s.rhs : 0.0;

        const double cut = 1.0 - b * b * one_minus_r;
        const double n_cut = static_cast<double>(counting_function(f, j, cut));
        s.inner_lhs = cartan_point_sum(f, j, z, s_r);
        s.inner_rhs = 2.0 * n_cut * std::log(std::max(n_cut, 1.0)) * std::pow(loginv, alpha) /
                      gauge.eval(one_minus_r);
        s.inner_ok = s.inner_lhs <= s.inner_rhs * (1.0 + 1e-12);
        rep.samples.push_back(s);
    }
    finalize(rep);
    return rep;
}

}  // namespace esetlab
