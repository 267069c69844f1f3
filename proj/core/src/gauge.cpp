#include <esetlab/gauge.hpp>

#include <esetlab/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace esetlab {

namespace {

constexpr double kRelTol = 1e-12;

void require(bool ok, const char* what) {
    if (!ok) throw InvalidInput(what);
}

}  // namespace

Gauge Gauge::plane_identity() {
    Gauge g;
    g.kind_ = GaugeKind::PlaneConcaveIdentity;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.doubling_up_ = 2.0;  // K(2x) = 2 K(x) exactly
    return g;
}

Gauge Gauge::plane_power(double a) {
    require(a > 0.0 && a < 1.0, "plane_power: a must be in (0,1)");
    Gauge g;
    g.kind_ = GaugeKind::PlaneConcavePower;
    g.param_ = a;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.doubling_up_ = std::pow(2.0, a);
    return g;
}

Gauge Gauge::plane_log(double alpha) {
    require(alpha > 1.0 && alpha <= 2.0, "plane_log: alpha must be in (1,2]");
    Gauge g;
    g.kind_ = GaugeKind::PlaneConcaveLog;
    g.param_ = alpha;
    g.x0_ = 1.0;
    g.r_threshold_ = std::pow(2.0, 1.0 / (alpha - 1.0));
    g.doubling_up_ = alpha;
    return g;
}

Gauge Gauge::plane_constant(double value) {
    require(value > 0.0, "plane_constant: value must be positive");
    Gauge g;
    g.kind_ = GaugeKind::PlaneConstant;
    g.param_ = value;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.doubling_up_ = 1.0;  // extremal value, constant gauges only
    return g;
}

Gauge Gauge::plane_convex_power(double p) {
    require(p > 0.0, "plane_convex_power: p must be positive");
    Gauge g;
    g.kind_ = GaugeKind::PlaneConvexPower;
    g.param_ = p;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.doubling_down_ = std::pow(2.0, -p);  // L(2x) = 2^-p L(x) exactly
    return g;
}

Gauge Gauge::plane_rapid_power(double p) {
    require(p > 1.0, "plane_rapid_power: p must exceed 1");
    Gauge g;
    g.kind_ = GaugeKind::PlaneRapidPower;
    g.param_ = p;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;  // x^p >= 1 for x >= 1
    g.tau_ = 1.0;
    return g;
}

Gauge Gauge::plane_rapid_xlog() {
    Gauge g;
    g.kind_ = GaugeKind::PlaneRapidXLog;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.3;  // x log(1+x) >= 1 from here on
    g.tau_ = 1.0;
    return g;
}

Gauge Gauge::unit_concave_power(double a) {
    require(a > 0.0 && a < 1.0, "unit_concave_power: a must be in (0,1)");
    Gauge g;
    g.kind_ = GaugeKind::UnitConcavePower;
    g.param_ = a;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.tau_ = 1.0;
    return g;
}

Gauge Gauge::unit_convex_power(double a) {
    require(a > 1.0, "unit_convex_power: a must exceed 1");
    Gauge g;
    g.kind_ = GaugeKind::UnitConvexPower;
    g.param_ = a;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.tau_ = 1.0;
    return g;
}

Gauge Gauge::unit_stolz_power(double gamma) {
    require(gamma >= 1.0, "unit_stolz_power: gamma must be >= 1");
    Gauge g;
    g.kind_ = GaugeKind::UnitStolzPower;
    g.param_ = gamma;
    g.x0_ = 0.0;
    g.r_threshold_ = 1.0;
    g.tau_ = 1.0;
    return g;
}

Ambient Gauge::ambient() const {
    switch (kind_) {
        case GaugeKind::UnitConcavePower:
        case GaugeKind::UnitConvexPower:
        case GaugeKind::UnitStolzPower:
            return Ambient::UnitDisc;
        default:
            return Ambient::Plane;
    }
}

std::string Gauge::kind_name() const {
    switch (kind_) {
        case GaugeKind::PlaneConcaveIdentity: return "plane_concave_identity";
        case GaugeKind::PlaneConcavePower: return "plane_concave_power";
        case GaugeKind::PlaneConcaveLog: return "plane_concave_log";
        case GaugeKind::PlaneConstant: return "plane_constant";
        case GaugeKind::PlaneConvexPower: return "plane_convex_power";
        case GaugeKind::PlaneRapidPower: return "plane_rapid_power";
        case GaugeKind::PlaneRapidXLog: return "plane_rapid_xlog";
        case GaugeKind::UnitConcavePower: return "unit_concave_power";
        case GaugeKind::UnitConvexPower: return "unit_convex_power";
        case GaugeKind::UnitStolzPower: return "unit_stolz_power";
    }
    return "unknown";
}

double Gauge::eval(double x) const {
    if (ambient() == Ambient::UnitDisc) {
        if (!(x > 0.0 && x < 1.0)) throw DomainError("unit gauge argument outside (0,1)");
        return std::pow(x, param_);
    }
    switch (kind_) {
        case GaugeKind::PlaneConcaveIdentity:
            if (x < 0.0) throw DomainError("identity gauge argument negative");
            return x;
        case GaugeKind::PlaneConcavePower:
            if (x < 0.0) throw DomainError("power gauge argument negative");
            return std::pow(x, param_);
        case GaugeKind::PlaneConcaveLog:
            if (x < 1.0) throw DomainError("log gauge argument below 1");
            return std::log(x);
        case GaugeKind::PlaneConstant:
            return param_;
        case GaugeKind::PlaneConvexPower:
            if (!(x > 0.0)) throw DomainError("convex power gauge needs x > 0");
            return std::pow(x, -param_);
        case GaugeKind::PlaneRapidPower:
            if (!(x > 0.0)) throw DomainError("rapid power gauge needs x > 0");
            return std::pow(x, param_);
        case GaugeKind::PlaneRapidXLog:
            if (!(x > 0.0)) throw DomainError("rapid xlog gauge needs x > 0");
            return x * std::log1p(x);
        default:
            throw DomainError("unreachable gauge kind");
    }
}

bool Gauge::increasing() const {
    return kind_ != GaugeKind::PlaneConvexPower && kind_ != GaugeKind::PlaneConstant;
}

bool Gauge::concave() const {
    switch (kind_) {
        case GaugeKind::PlaneConcaveIdentity:
        case GaugeKind::PlaneConcavePower:
        case GaugeKind::PlaneConcaveLog:
        case GaugeKind::UnitConcavePower:
            return true;
        case GaugeKind::UnitStolzPower:
            return param_ == 1.0;  // identity boundary case
        default:
            return false;
    }
}

bool Gauge::has_doubling_up() const {
    switch (kind_) {
        case GaugeKind::PlaneConcaveIdentity:
        case GaugeKind::PlaneConcavePower:
        case GaugeKind::PlaneConcaveLog:
        case GaugeKind::PlaneConstant:
            return true;
        default:
            return false;
    }
}

bool Gauge::has_doubling_down() const { return kind_ == GaugeKind::PlaneConvexPower; }

bool Gauge::has_doubling_type() const {
    switch (kind_) {
        case GaugeKind::PlaneRapidPower:
        case GaugeKind::PlaneRapidXLog:
        case GaugeKind::UnitConcavePower:
        case GaugeKind::UnitConvexPower:
        case GaugeKind::UnitStolzPower:
            return true;
        default:
            return false;
    }
}

double Gauge::curve_domain_start() const {
    if (ambient() == Ambient::UnitDisc) return 0.0;
    switch (kind_) {
        case GaugeKind::PlaneConvexPower:
        case GaugeKind::PlaneRapidPower:
        case GaugeKind::PlaneRapidXLog:
            return r_threshold_;
        default:
            return x0_;
    }
}

DoublingReport verify_doubling(const Gauge& g, std::span<const double> grid,
                               double alpha_candidate) {
    if (grid.empty()) throw InvalidInput("verify_doubling: empty grid");
    if (!g.has_doubling_up() && !g.has_doubling_down())
        throw UnsupportedGauge("verify_doubling: gauge kind has a doubling-type limit instead");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1])) throw InvalidInput("verify_doubling: grid not sorted");
    if (grid.front() < g.r_threshold())
        throw InvalidInput("verify_doubling: grid point below the gauge threshold R");

    DoublingReport rep;
    rep.candidate = alpha_candidate;
    rep.point_pass.resize(grid.size(), 1);
    const bool up = g.has_doubling_up();
    rep.empirical_constant = up ? 0.0 : std::numeric_limits<double>::infinity();
    bool all_ok = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const double ratio = g.eval(2.0 * x) / g.eval(x);
        bool ok;
        if (up) {
            ok = ratio <= alpha_candidate * (1.0 + kRelTol);
            if (ratio > rep.empirical_constant) {
                rep.empirical_constant = ratio;
                rep.worst_index = i;
            }
        } else {
            ok = ratio >= alpha_candidate * (1.0 - kRelTol);
            if (ratio < rep.empirical_constant) {
                rep.empirical_constant = ratio;
                rep.worst_index = i;
            }
        }
        rep.point_pass[i] = ok ? 1 : 0;
        all_ok = all_ok && ok;
    }
    rep.pass = all_ok;

    if (g.kind() == GaugeKind::PlaneConstant && alpha_candidate == 1.0)
        rep.note = "non-permitted extremal value alpha=1 works for constant functions only";

    if (up && g.increasing()) {
        // Doubling caps the growth: eval(x) <= C x^(log2 alpha) for x >= R,
        // with C = alpha * eval(R) / R^(log2 alpha).
        rep.growth_cap_checked = true;
        const double expo = std::log(alpha_candidate) / std::log(2.0);
        const double R = g.r_threshold();
        rep.growth_cap_constant = alpha_candidate * g.eval(R) / std::pow(R, expo);
        rep.growth_cap_ok = true;
        for (double x : grid) {
            if (g.eval(x) > rep.growth_cap_constant * std::pow(x, expo) * (1.0 + kRelTol)) {
                rep.growth_cap_ok = false;
                break;
            }
        }
    }
    return rep;
}

LimitReport doubling_type_limits(const std::function<double(double)>& profile,
                                 const std::function<double(double)>& delta, double gamma,
                                 std::span<const double> x_grid, Ambient ambient) {
    if (x_grid.empty()) throw InvalidInput("doubling_type_limits: empty grid");
    if (!(gamma > 0.0)) throw InvalidInput("doubling_type_limits: gamma must be positive");
    LimitReport rep;
    for (double x : x_grid) {
        const double d = delta(x);
        double base, lo_arg, hi_arg;
        if (ambient == Ambient::UnitDisc) {
            const double s = 1.0 - x;
            if (!(s > 0.0)) continue;
            base = s;
            lo_arg = s * (gamma - d);
            hi_arg = s * (gamma + d);
            if (!(lo_arg > 0.0 && hi_arg < 1.0)) continue;
        } else {
            base = x;
            lo_arg = x * (1.0 - d);
            hi_arg = x * (1.0 + d);
            if (!(lo_arg > 0.0)) continue;
        }
        rep.grid.push_back(x);
        rep.values_minus.push_back(profile(base) / profile(lo_arg));
        rep.values_plus.push_back(profile(base) / profile(hi_arg));
    }
    if (rep.grid.size() < 4) {
        rep.note = "too few admissible grid points";
        return rep;
    }
    rep.limit_minus = rep.values_minus.back();
    rep.limit_plus = rep.values_plus.back();

    // Converged when successive differences of both tracks shrink over the
    // last stretch and the two one-sided limits agree to first order.
    auto shrinking = [](const std::vector<double>& v) {
        const std::size_t n = v.size();
        const std::size_t k = std::min<std::size_t>(8, n - 1);
        double prev = std::abs(v[n - k] - v[n - k - 1]);
        for (std::size_t i = n - k + 1; i < n; ++i) {
            const double cur = std::abs(v[i] - v[i - 1]);
            if (cur > prev * 1.5 + 1e-15) return false;
            prev = cur;
        }
        return std::isfinite(v.back());
    };
    const double scale = std::max({std::abs(rep.limit_minus), std::abs(rep.limit_plus), 1.0});
    rep.converged = shrinking(rep.values_minus) && shrinking(rep.values_plus) &&
                    std::abs(rep.limit_minus - rep.limit_plus) <= 0.05 * scale;
    rep.note = "partial verification: finitely many delta profiles checked";
    return rep;
}

LimitReport verify_doubling_type(const Gauge& g, const std::function<double(double)>& delta,
                                 double gamma, std::span<const double> x_grid) {
    if (!g.has_doubling_type())
        throw UnsupportedGauge("verify_doubling_type: gauge kind has no doubling-type property");
    auto profile = [&g](double s) { return g.eval(s); };
    return doubling_type_limits(profile, delta, gamma, x_grid, g.ambient());
}

TrajectoryReport limit_diagnostics(const Gauge& g, std::span<const double> grid) {
    TrajectoryReport rep;
    for (double x : grid) {
        double v;
        switch (g.kind()) {
            case GaugeKind::PlaneRapidPower:
            case GaugeKind::PlaneRapidXLog:
                v = x / g.eval(x);
                break;
            case GaugeKind::UnitConcavePower:
            case GaugeKind::UnitConvexPower:
            case GaugeKind::UnitStolzPower: {
                const double s = 1.0 - x;
                if (!(s > 0.0 && s < 1.0)) continue;
                v = s / g.eval(s);
                break;
            }
            case GaugeKind::PlaneConcaveIdentity:
            case GaugeKind::PlaneConcavePower:
            case GaugeKind::PlaneConcaveLog:
                if (!(x > 0.0)) continue;
                v = g.eval(x) / x;
                break;
            default:
                v = g.eval(x);
                break;
        }
        rep.grid.push_back(x);
        rep.values.push_back(v);
    }
    if (rep.values.empty()) return rep;
    rep.final_value = rep.values.back();
    bool incr = true, decr = true;
    for (std::size_t i = 1; i < rep.values.size(); ++i) {
        incr = incr && rep.values[i] >= rep.values[i - 1] * (1.0 - kRelTol);
        decr = decr && rep.values[i] <= rep.values[i - 1] * (1.0 + kRelTol);
    }
    rep.trend = incr && !decr ? Trend::Increasing : (decr && !incr ? Trend::Decreasing : Trend::None);
    return rep;
}

std::vector<double> log_spaced_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0 && hi > lo) || n < 2) throw InvalidInput("log_spaced_grid: bad range");
    std::vector<double> grid(n);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<std::pair<std::string, std::function<double(double)>>> canonical_delta_profiles(
    Ambient ambient) {
    using Entry = std::pair<std::string, std::function<double(double)>>;
    if (ambient == Ambient::Plane)
        return {Entry{"1/x", [](double x) { return 1.0 / x; }},
                Entry{"1/sqrt(x)", [](double x) { return 1.0 / std::sqrt(x); }},
                Entry{"1/log(x)",
                      [](double x) { return 1.0 / std::log(std::max(x, 1.0 + 1e-9)); }}};
    return {Entry{"1-x", [](double x) { return 1.0 - x; }},
            Entry{"sqrt(1-x)", [](double x) { return std::sqrt(1.0 - x); }},
            Entry{"1/log(e/(1-x))",
                  [](double x) { return 1.0 / std::log(std::exp(1.0) / (1.0 - x)); }}};
}

}  // namespace esetlab
