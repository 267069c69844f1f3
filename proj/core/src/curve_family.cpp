#include <esetlab/curve_family.hpp>

#include <esetlab/errors.hpp>
#include <esetlab/minimize.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace esetlab {

namespace {

constexpr double kE = 2.718281828459045;
constexpr double kTwoPi = 6.283185307179586;
// Distance reported where the unit-disc curve has no point at a parameter.
constexpr double kNoPointDistance = 16.0;

double branch_sign(Branch b) { return b == Branch::Lower ? -1.0 : 1.0; }

double band_halfwidth(double radius) { return 1e-9 * std::max(1.0, radius); }

MeetClass classify(double dmin, double radius) {
    const double band = band_halfwidth(radius);
    if (dmin <= radius - band) return MeetClass::Hit;
    if (dmin >= radius + band) return MeetClass::Miss;
    return MeetClass::Band;
}

struct Extrema {
    double min_value;
    double max_value;
};

// Cyclic boundary scan with golden-section refinement of each local
// extremum bracket.
template <class F>
Extrema boundary_extrema(F&& v, int n_samples = 1024) {
    std::vector<double> theta(static_cast<std::size_t>(n_samples));
    std::vector<double> vals(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        theta[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n_samples);
        vals[i] = v(theta[i]);
    }
    double lo = vals[0], hi = vals[0];
    const std::size_t n = theta.size();
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, vals[i]);
        hi = std::max(hi, vals[i]);
        const double prev = vals[(i + n - 1) % n];
        const double next = vals[(i + 1) % n];
        const double a = theta[i] - kTwoPi / n;
        const double b = theta[i] + kTwoPi / n;
        if (vals[i] <= prev && vals[i] <= next)
            lo = std::min(lo, golden_section_minimize(v, a, b).value);
        if (vals[i] >= prev && vals[i] >= next) {
            auto neg = [&v](double t) { return -v(t); };
            hi = std::max(hi, -golden_section_minimize(neg, a, b).value);
        }
    }
    return {lo, hi};
}

}  // namespace

std::optional<Complex> boundary_point(const CurveFamily& fam, double t) {
    if (fam.branch == Branch::Both)
        throw InvalidInput("boundary_point: select a single branch");
    const double sign = branch_sign(fam.branch);
    if (fam.gauge.ambient() == Ambient::Plane) {
        if (t < fam.gauge.curve_domain_start())
            throw DomainError("boundary_point: t below the curve domain start");
        return rotate(Complex(t, sign * fam.c * fam.gauge.eval(t)), fam.phi);
    }
    if (!(t > 0.0 && t < 1.0)) throw DomainError("boundary_point: radius outside (0,1)");
    const double target = fam.c * fam.gauge.eval(1.0 - t);
    const double cos_w = (1.0 + t * t - target * target) / (2.0 * t);
    if (!(cos_w >= -1.0 && cos_w <= 1.0)) return std::nullopt;
    const double w = std::acos(cos_w);
    return fam.zeta * std::polar(t, sign * w);
}

namespace {

MeetResult meets_plane(const CurveFamily& fam, const Disc& d) {
    const Complex zc = rotate(d.center, -fam.phi);
    const double x = zc.real();
    const double y = zc.imag();
    const double r = d.radius;
    const double pad = 2.0 * r;
    const double dom = fam.gauge.curve_domain_start();
    const double wlo = std::max(dom, x - r - pad);
    const double whi = x + r + pad;

    const auto branch_dist2 = [&](double sign) {
        return [&fam, x, y, sign](double t) {
            const double dy = sign * fam.c * fam.gauge.eval(t) - y;
            return (t - x) * (t - x) + dy * dy;
        };
    };

    MeetResult res;
    if (whi < wlo) {
        // Disc entirely left of the curve domain.
        const auto f_up = branch_dist2(1.0);
        const auto f_dn = branch_dist2(-1.0);
        double d2 = f_up(dom);
        if (fam.branch != Branch::Upper) d2 = std::min(d2, f_dn(dom));
        if (fam.branch == Branch::Lower) d2 = f_dn(dom);
        res.min_distance = std::sqrt(d2);
        res.t_at_min = dom;
        res.classification = classify(res.min_distance, r);
        return res;
    }

    double best = std::numeric_limits<double>::infinity();
    double best_t = wlo;
    for (double sign : {1.0, -1.0}) {
        if ((sign > 0 && fam.branch == Branch::Lower) ||
            (sign < 0 && fam.branch == Branch::Upper))
            continue;
        const MinimumResult m = multistart_minimize(branch_dist2(sign), wlo, whi, 256, 1e-12);
        if (m.value < best) {
            best = m.value;
            best_t = m.x;
        }
    }
    res.min_distance = std::sqrt(best);
    res.t_at_min = best_t;
    res.classification = classify(res.min_distance, r);
    return res;
}

MeetResult meets_unit(const CurveFamily& fam, const Disc& d) {
    const double tn = std::abs(d.center);
    const double r = d.radius;
    const double pad = 2.0 * r;
    const double wlo = std::max(1e-12, tn - r - pad);
    const double whi = std::min(1.0 - 1e-15, tn + r + pad);

    MeetResult res;
    if (whi <= wlo) {
        res.min_distance = kNoPointDistance;
        res.classification = MeetClass::Miss;
        return res;
    }

    double best = std::numeric_limits<double>::infinity();
    double best_t = wlo;
    for (double sign : {1.0, -1.0}) {
        if ((sign > 0 && fam.branch == Branch::Lower) ||
            (sign < 0 && fam.branch == Branch::Upper))
            continue;
        auto dist2 = [&](double t) {
            const double target = fam.c * fam.gauge.eval(1.0 - t);
            const double cos_w = (1.0 + t * t - target * target) / (2.0 * t);
            if (!(cos_w >= -1.0 && cos_w <= 1.0))
                return kNoPointDistance * kNoPointDistance;
            const Complex pt = fam.zeta * std::polar(t, sign * std::acos(cos_w));
            return std::norm(pt - d.center);
        };
        const MinimumResult m = multistart_minimize(dist2, wlo, whi, 256, 1e-12);
        if (m.value < best) {
            best = m.value;
            best_t = m.x;
        }
    }
    res.min_distance = std::sqrt(best);
    res.t_at_min = best_t;
    res.classification = classify(res.min_distance, r);
    return res;
}

}  // namespace

MeetResult meets(const CurveFamily& fam, const Disc& d) {
    return fam.gauge.ambient() == Ambient::Plane ? meets_plane(fam, d) : meets_unit(fam, d);
}

CIntervalReport c_interval(const Gauge& gauge, double phi, const Disc& d) {
    if (gauge.ambient() != Ambient::Plane)
        throw InvalidInput("c_interval: plane overload needs a plane gauge");
    const Complex zc = rotate(d.center, -phi);
    const double x = zc.real();
    const double y = zc.imag();
    const double r = d.radius;
    if (!(x - r > gauge.curve_domain_start()))
        throw PartialDomain("c_interval: disc not strictly inside the curve domain");

    CIntervalReport rep;
    if (y + r <= 0.0) {
        rep.empty = true;
        return rep;
    }
    auto v = [&](double theta) {
        return (y + r * std::sin(theta)) / gauge.eval(x + r * std::cos(theta));
    };
    Extrema ex = boundary_extrema(v);
    const double center_value = y / gauge.eval(x);
    rep.c_lo = std::min(ex.min_value, center_value);
    rep.c_hi = std::max(ex.max_value, center_value);
    rep.width = rep.c_hi - rep.c_lo;
    rep.crosses_axis = (y - r < 0.0);

    try {
        if (gauge.has_doubling_up())
            rep.bound = bound_cc(gauge, phi, d);
        else if (gauge.has_doubling_down())
            rep.bound = bound_cc2(gauge, phi, d);
    } catch (const NotInAsymptoticRegime&) {
    }
    if (std::isfinite(rep.bound)) rep.satisfied = rep.width <= rep.bound * (1.0 + 1e-9);
    return rep;
}

CIntervalReport c_interval(const Gauge& gauge, const Complex& zeta, const Disc& d) {
    if (gauge.ambient() != Ambient::UnitDisc)
        throw InvalidInput("c_interval: unit overload needs a unit gauge");
    const double tn = std::abs(d.center);
    const double r = d.radius;
    if (!(tn + r < 1.0)) throw PartialDomain("c_interval: disc not strictly inside the unit disc");
    if (!(tn - r > 0.0)) throw PartialDomain("c_interval: disc covers the origin");

    auto v = [&](double theta) {
        const Complex z = d.center + std::polar(r, theta);
        return std::abs(1.0 - std::conj(zeta) * z) / gauge.eval(1.0 - std::abs(z));
    };
    Extrema ex = boundary_extrema(v);
    const double center_value =
        std::abs(1.0 - std::conj(zeta) * d.center) / gauge.eval(1.0 - tn);

    CIntervalReport rep;
    rep.c_lo = std::min(ex.min_value, center_value);
    rep.c_hi = std::max(ex.max_value, center_value);
    rep.width = rep.c_hi - rep.c_lo;
    return rep;
}

namespace {

// Asymptotic regime for the width budgets: the radius stays below half the
// abscissa, the abscissa has cleared e, and the doubling step at x/2 is
// covered by the gauge threshold.
void require_asymptotic_regime(const Gauge& gauge, double x, double r, const char* who) {
    if (!(x - r >= 0.5 * x && x >= kE && 0.5 * x >= gauge.r_threshold()))
        throw NotInAsymptoticRegime(std::string(who) +
                                    ": needs x - r >= x/2, x >= e, x/2 >= R");
}

}  // namespace

double bound_cc(const Gauge& gauge, double phi, const Disc& d, int n_envelope) {
    if (!gauge.has_doubling_up())
        throw UnsupportedGauge("bound_cc: needs an increasing concave or constant gauge");
    const Complex zc = rotate(d.center, -phi);
    require_asymptotic_regime(gauge, zc.real(), d.radius, "bound_cc");
    return 4.0 * std::pow(gauge.doubling_up(), n_envelope) * d.radius / gauge.eval(zc.real());
}

double bound_cc2(const Gauge& gauge, double phi, const Disc& d) {
    if (!gauge.has_doubling_down())
        throw UnsupportedGauge("bound_cc2: needs a decreasing convex gauge");
    const Complex zc = rotate(d.center, -phi);
    require_asymptotic_regime(gauge, zc.real(), d.radius, "bound_cc2");
    return 4.0 * d.radius / (gauge.doubling_down() * gauge.eval(std::abs(d.center)));
}

double bound_stolz(double gamma, const Disc& d, double k_comparability) {
    if (!(gamma >= 1.0)) throw InvalidInput("bound_stolz: gamma must be >= 1");
    const double t = 1.0 - std::abs(d.center);
    if (!(t > 0.0)) throw NotStolz("bound_stolz: center not inside the unit disc");
    const double dist1 = std::abs(1.0 - d.center);
    if (!(dist1 < 100.0 * t))
        throw NotStolz("bound_stolz: center outside every aperture S(1,c), c <= 100");
    return (4.0 + 2.0 * k_comparability) * d.radius / std::pow(t, gamma);
}

TrendReport width_trend_rapid(const Gauge& gauge, double phi, const DiscCollection& col,
                              double envelope_drop) {
    if (gauge.kind() != GaugeKind::PlaneRapidPower && gauge.kind() != GaugeKind::PlaneRapidXLog)
        throw UnsupportedGauge("width_trend_rapid: needs a rapid plane gauge");

    TrendReport rep;
    std::vector<double> tech;
    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
        const Complex zc = rotate(col.discs[n].center, -phi);
        if (!(zc.real() > 0.0)) {
            rep.failures.push_back(n);
            continue;
        }
        tech.push_back(col.discs[n].radius / zc.real());
    }
    bool tech_ok = true;
    if (tech.size() >= 8) {
        const std::size_t q = tech.size() / 4;
        double head_max = 0.0, tail_max = 0.0;
        for (std::size_t i = 0; i < q; ++i) head_max = std::max(head_max, tech[i]);
        for (std::size_t i = tech.size() - q; i < tech.size(); ++i)
            tail_max = std::max(tail_max, tech[i]);
        tech_ok = tail_max <= 0.5 * head_max || tail_max < 1e-12;
        if (!tech_ok)
            for (std::size_t i = tech.size() - q; i < tech.size(); ++i)
                if (tech[i] > 0.5 * head_max) rep.failures.push_back(col.tail_index + i);
    }

    for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
        try {
            const CIntervalReport ci = c_interval(gauge, phi, col.discs[n]);
            rep.indices.push_back(n);
            rep.widths.push_back(ci.width);
        } catch (const PartialDomain&) {
            rep.failures.push_back(n);
        }
    }

    if (rep.widths.empty()) {
        rep.decreasing = true;
        rep.passed = tech_ok && rep.failures.empty();
        return rep;
    }
    rep.envelope.assign(rep.widths.size(), 0.0);
    double running = 0.0;
    for (std::size_t i = rep.widths.size(); i-- > 0;) {
        running = std::max(running, rep.widths[i]);
        rep.envelope[i] = running;
    }
    rep.initial_envelope = rep.envelope.front();
    rep.final_envelope = rep.widths.back();
    rep.decreasing = true;  // suffix maxima are non-increasing by construction
    rep.passed = tech_ok && rep.failures.empty() &&
                 rep.final_envelope <= envelope_drop * rep.initial_envelope;
    return rep;
}

}  // namespace esetlab
