#include <esetlab/disc_collection.hpp>

#include <esetlab/errors.hpp>
#include <esetlab/rng.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace esetlab {

namespace {

constexpr double kCantorShift = 1e5;
constexpr double kE = 2.718281828459045;

bool trend_to_zero(const std::vector<double>& v) {
    if (v.size() < 8) return v.empty() || v.back() <= v.front() * (1.0 + 1e-12);
    const std::size_t q = v.size() / 4;
    double head_max = 0.0, tail_max = 0.0;
    for (std::size_t i = 0; i < q; ++i) head_max = std::max(head_max, v[i]);
    for (std::size_t i = v.size() - q; i < v.size(); ++i) tail_max = std::max(tail_max, v[i]);
    return tail_max <= 0.5 * head_max || tail_max < 1e-12;
}

}  // namespace

double DiscCollection::tail_sum() const {
    double s = 0.0;
    for (std::size_t n = tail_index; n < discs.size(); ++n) s += ratio_of(n);
    return s;
}

double DiscCollection::diameter_sum() const {
    double s = 0.0;
    for (const Disc& d : discs) s += 2.0 * d.radius;
    return s;
}

DiscCollection make_collection(Ambient ambient, Gauge gauge, std::vector<Disc> discs,
                               double epsilon, std::size_t tail_index) {
    if (!(epsilon > 0.0)) throw InvalidInput("make_collection: epsilon must be positive");
    std::stable_sort(discs.begin(), discs.end(), [](const Disc& a, const Disc& b) {
        return std::abs(a.center) < std::abs(b.center);
    });
    DiscCollection col;
    col.ambient = ambient;
    col.gauge = std::move(gauge);
    col.discs = std::move(discs);
    col.epsilon = epsilon;
    col.tail_index = std::min(tail_index, col.discs.size());
    return col;
}

ValidationReport validate(const DiscCollection& col) {
    ValidationReport rep;
    rep.epsilon = col.epsilon;
    rep.ratios.reserve(col.discs.size());

    for (std::size_t n = 0; n < col.discs.size(); ++n) {
        const Disc& d = col.discs[n];
        if (!(d.radius > 0.0)) rep.issues.push_back({n, "radius not positive"});
        if (n > 0 && std::abs(d.center) < std::abs(col.discs[n - 1].center))
            rep.issues.push_back({n, "not ordered by increasing modulus"});
        if (col.ambient == Ambient::Plane) {
            if (std::abs(d.center) <= d.radius) rep.issues.push_back({n, "disc contains the origin"});
        } else {
            if (std::abs(d.center) + d.radius >= 1.0)
                rep.issues.push_back({n, "disc not inside the unit disc"});
        }
        rep.ratios.push_back(col.ratio_of(n));
    }

    rep.tail_sum = col.tail_sum();
    if (!(rep.tail_sum < col.epsilon))
        rep.issues.push_back({col.tail_index, "tail sum exceeds declared epsilon"});

    rep.ratios_trend_to_zero = trend_to_zero(rep.ratios);

    const GaugeKind k = col.gauge.kind();
    if (k == GaugeKind::PlaneRapidPower || k == GaugeKind::PlaneRapidXLog) {
        std::vector<double> tech;
        tech.reserve(col.discs.size());
        for (const Disc& d : col.discs) {
            const double x = d.center.real();
            tech.push_back(x > 0.0 ? d.radius / x : std::numeric_limits<double>::infinity());
        }
        rep.technical_trend_ok = trend_to_zero(tech);
        if (!rep.technical_trend_ok)
            rep.issues.push_back({0, "r_n / Re(z_n) does not trend to zero"});
    }

    rep.valid = rep.issues.empty();
    return rep;
}

DiscCollection gen_example1(int n_max, int k_max) {
    if (n_max < 1 || k_max < 1) throw InvalidInput("gen_example1: n_max, k_max >= 1");
    std::vector<Disc> discs;
    discs.reserve(static_cast<std::size_t>(n_max) * static_cast<std::size_t>(k_max));
    for (int n = 1; n <= n_max; ++n) {
        const double theta = 1.0 / n;
        for (int k = 1; k <= k_max; ++k) {
            // |z_{n,k}| = n + k is a free choice; only growth in k matters.
            // It also keeps the radii 2^-(n+k) above the double spacing at
            // |z|, so the ray hits stay numerically observable.
            const double modulus = n + k;
            discs.push_back({std::polar(modulus, theta), std::exp2(-(n + k))});
        }
    }
    return make_collection(Ambient::Plane, Gauge::plane_constant(1.0), std::move(discs), 1.0, 0);
}

DiscCollection gen_example2(int n_max, int k_max) {
    if (n_max < 1 || k_max < 1) throw InvalidInput("gen_example2: n_max, k_max >= 1");
    std::vector<Disc> discs;
    discs.reserve(static_cast<std::size_t>(n_max) * static_cast<std::size_t>(k_max));
    for (int n = 1; n <= n_max; ++n) {
        const double height = 1.0 / n;
        for (int k = 1; k <= k_max; ++k) {
            discs.push_back({Complex(n + k, height), std::exp2(-(n + k))});
        }
    }
    return make_collection(Ambient::Plane, Gauge::plane_constant(1.0), std::move(discs), 1.0, 0);
}

double cantor_shift() { return kCantorShift; }

DiscCollection gen_cantor_rset(int levels, std::optional<std::uint64_t> seed) {
    if (levels < 1) throw InvalidInput("gen_cantor_rset: levels >= 1");
    std::mt19937_64 eng(seed.value_or(0));
    std::vector<Disc> discs;
    std::vector<double> starts{0.0};
    double len = 1.0;
    for (int k = 1; k <= levels; ++k) {
        len /= 3.0;
        std::vector<double> next;
        next.reserve(starts.size() * 2);
        for (double a : starts) {
            next.push_back(a);
            next.push_back(a + 2.0 * len);
        }
        starts = std::move(next);
        const double radius = len;  // vertical projection has length 2/3^k
        for (double a : starts) {
            const double cx = kCantorShift + a + 0.5 * len;
            const double im = seed ? uniform_in(eng, 0.5, 2.0) : 1.0;
            discs.push_back({Complex(cx, im), radius});
        }
    }
    return make_collection(Ambient::Plane, Gauge::plane_constant(1.0), std::move(discs), 2.0, 0);
}

Disc horocycle_disc(int n) {
    const double half = 0.5 / n;
    const double r = 1.0 / (static_cast<double>(n) * n * std::pow(std::log1p(n), 2));
    // (1 + e^{i/n})/2 = cos(1/(2n)) e^{i/(2n)}
    return {std::polar(std::cos(half), half), r};
}

int horocycle_first_valid_index() {
    for (int n = 1;; ++n) {
        const Disc d = horocycle_disc(n);
        if (std::abs(d.center) + d.radius < 1.0) return n;
    }
}

DiscCollection gen_horocycle_lset(int n_max) {
    if (n_max < 1) throw InvalidInput("gen_horocycle_lset: n_max >= 1");
    const int first = horocycle_first_valid_index();
    std::vector<Disc> discs;
    const Gauge gauge = Gauge::unit_concave_power(0.5);
    double sum = 0.0;
    for (int n = first; n <= n_max; ++n) {
        const Disc d = horocycle_disc(n);
        discs.push_back(d);
        sum += d.radius / gauge.eval(1.0 - std::abs(d.center));
    }
    if (discs.empty()) throw InvalidInput("gen_horocycle_lset: no disc fits inside the unit disc");
    return make_collection(Ambient::UnitDisc, gauge, std::move(discs), sum * 1.1 + 1e-12, 0);
}

namespace {

DiscCollection gen_random_plane(const RandomSetParams& p) {
    if (p.x_lo < 2.0 * kE)
        throw InvalidInput("gen_random: plane placement needs x_lo >= 2e");
    if (!(p.x_hi > p.x_lo)) throw InvalidInput("gen_random: x_hi must exceed x_lo");

    std::mt19937_64 eng(p.seed);
    const double llo = std::log(p.x_lo);
    const double lhi = std::log(p.x_hi);
    const bool curve_mode = !p.gauge.increasing() && p.gauge.kind() != GaugeKind::PlaneConstant;

    std::vector<Disc> discs(static_cast<std::size_t>(p.count));
    std::vector<double> raw_radius(discs.size());
    for (std::size_t i = 0; i < discs.size(); ++i) {
        const double slot = (static_cast<double>(i) + 0.35 + 0.3 * uniform01(eng)) /
                            static_cast<double>(p.count);
        const double x = std::exp(llo + (lhi - llo) * slot);
        double y;
        if (curve_mode) {
            y = uniform_in(eng, p.c_lo, p.c_hi) * p.gauge.eval(x);
        } else {
            y = p.envelope_m * uniform_in(eng, 0.05, 0.95) * x;
        }
        discs[i] = {Complex(x, y), 0.0};
        // Sublinear radius profile: r/x decays along the collection, so the
        // rapid-gauge trend condition holds and widths fall off.
        raw_radius[i] = 0.05 * std::sqrt(x) * uniform_in(eng, 0.2, 1.0);
    }

    // Scale radii so the declared tail budget holds with a factor-2 margin;
    // the subsequent cap only shrinks radii further.
    const std::size_t tail = discs.size() / 2;
    double tail_sum = 0.0;
    for (std::size_t i = tail; i < discs.size(); ++i)
        tail_sum += raw_radius[i] / p.gauge.eval(std::abs(discs[i].center));
    const double scale = 0.5 * p.epsilon / tail_sum;
    for (std::size_t i = 0; i < discs.size(); ++i)
        discs[i].radius = std::min(raw_radius[i] * scale, 0.45 * discs[i].center.real());

    return make_collection(Ambient::Plane, p.gauge, std::move(discs), p.epsilon, tail);
}

DiscCollection gen_random_unit(const RandomSetParams& p) {
    if (!(p.t_lo > 0.0 && p.t_hi < 0.5 && p.t_hi > p.t_lo))
        throw InvalidInput("gen_random: unit placement needs 0 < t_lo < t_hi < 0.5");

    std::mt19937_64 eng(p.seed);
    const double llo = std::log(p.t_hi);
    const double lhi = std::log(p.t_lo);
    const bool aperture_mode =
        p.gauge.kind() == GaugeKind::UnitStolzPower || p.gauge.kind() == GaugeKind::UnitConvexPower;
    const double aperture = std::min(p.envelope_m, 1.9);

    std::vector<Disc> discs(static_cast<std::size_t>(p.count));
    std::vector<double> raw_radius(discs.size());
    for (std::size_t i = 0; i < discs.size(); ++i) {
        const double slot = (static_cast<double>(i) + 0.35 + 0.3 * uniform01(eng)) /
                            static_cast<double>(p.count);
        const double t = std::exp(llo + (lhi - llo) * slot);
        double target;  // |1 - z|
        if (aperture_mode) {
            target = t * (1.0 + (aperture - 1.0) * uniform_in(eng, 0.02, 0.98));
        } else {
            target = uniform_in(eng, p.c_lo, p.c_hi) * p.gauge.eval(t);
            target = std::max(target, t * 1.0001);
        }
        const double rho = 1.0 - t;
        const double cos_w = (1.0 + rho * rho - target * target) / (2.0 * rho);
        if (!(cos_w >= -1.0 && cos_w <= 1.0))
            throw InvalidInput("gen_random: unit placement outside the solvable aperture");
        discs[i] = {std::polar(rho, std::acos(cos_w)), 0.0};
        raw_radius[i] = 0.04 * uniform_in(eng, 0.5, 1.0) * p.gauge.eval(t) * t;
    }

    const std::size_t tail = discs.size() / 2;
    double tail_sum = 0.0;
    for (std::size_t i = tail; i < discs.size(); ++i)
        tail_sum += raw_radius[i] / p.gauge.eval(1.0 - std::abs(discs[i].center));
    const double scale = 0.5 * p.epsilon / tail_sum;
    for (std::size_t i = 0; i < discs.size(); ++i) {
        const double t = 1.0 - std::abs(discs[i].center);
        discs[i].radius = std::min(raw_radius[i] * scale, 5e-3 * t);
    }

    return make_collection(Ambient::UnitDisc, p.gauge, std::move(discs), p.epsilon, tail);
}

}  // namespace

DiscCollection gen_random(const RandomSetParams& params) {
    if (params.count < 1) throw InvalidInput("gen_random: count >= 1");
    if (!(params.epsilon > 0.0)) throw InvalidInput("gen_random: epsilon must be positive");
    if (!(params.envelope_m > 0.0)) throw InvalidInput("gen_random: envelope_m must be positive");
    if (params.gauge.ambient() == Ambient::Plane && params.ambient == Ambient::UnitDisc)
        throw InvalidInput("gen_random: plane gauge with unit-disc ambient");
    if (params.gauge.ambient() == Ambient::UnitDisc && params.ambient == Ambient::Plane)
        throw InvalidInput("gen_random: unit gauge with plane ambient");
    return params.ambient == Ambient::Plane ? gen_random_plane(params) : gen_random_unit(params);
}

}  // namespace esetlab
