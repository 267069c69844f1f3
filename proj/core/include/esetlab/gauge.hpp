#pragma once

#include <esetlab/types.hpp>

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace esetlab {

/// Closed catalog of curve gauges. Every downstream width bound needs a
/// certified doubling constant, which free-form callables cannot supply, so
/// the catalog is enumerated rather than open.
enum class GaugeKind {
    PlaneConcaveIdentity,  // K(x) = x
    PlaneConcavePower,     // K(x) = x^a,            a in (0,1)
    PlaneConcaveLog,       // K(x) = log x
    PlaneConstant,         // K(x) = const > 0
    PlaneConvexPower,      // L(x) = x^-p,           p > 0 (decreasing)
    PlaneRapidPower,       // rapid(x) = x^p,        p > 1
    PlaneRapidXLog,        // rapid(x) = x log(1+x)
    UnitConcavePower,      // l(x) = x^a,            a in (0,1), x in (0,1)
    UnitConvexPower,       // k(x) = x^a,            a > 1
    UnitStolzPower,        // k(x) = x^gamma,        gamma >= 1
};

class Gauge {
  public:
    static Gauge plane_identity();
    static Gauge plane_power(double a);
    /// alpha > 1 selects the certified doubling constant; the threshold R is
    /// derived from it: log(2x) <= alpha log(x) iff x >= 2^(1/(alpha-1)).
    static Gauge plane_log(double alpha = 1.1);
    static Gauge plane_constant(double value = 1.0);
    static Gauge plane_convex_power(double p);
    static Gauge plane_rapid_power(double p);
    static Gauge plane_rapid_xlog();
    static Gauge unit_concave_power(double a);
    static Gauge unit_convex_power(double a);
    static Gauge unit_stolz_power(double gamma);

    /// Gauge value. For unit kinds the argument is the size coordinate
    /// 1-|z|, so the domain is (0,1). Throws DomainError outside the domain.
    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    GaugeKind kind() const { return kind_; }
    Ambient ambient() const;
    std::string kind_name() const;

    double x0() const { return x0_; }
    double r_threshold() const { return r_threshold_; }
    /// Certified alpha with eval(2x) <= alpha * eval(x) for x >= R.
    double doubling_up() const { return doubling_up_; }
    /// Certified beta with eval(2x) >= beta * eval(x) (decreasing kinds).
    double doubling_down() const { return doubling_down_; }
    /// Doubling-type limit at gamma = 1 (rapid and unit kinds).
    double tau() const { return tau_; }
    double param() const { return param_; }

    bool increasing() const;
    bool concave() const;       // shape of the gauge profile
    bool has_doubling_up() const;
    bool has_doubling_down() const;
    bool has_doubling_type() const;

    /// Smallest admissible curve parameter: x0 for concave kinds, the
    /// doubling threshold R for decreasing/rapid kinds, 0 for unit kinds
    /// (curves are parameterized by radius t = |z| there).
    double curve_domain_start() const;

    friend bool operator==(const Gauge&, const Gauge&) = default;

  private:
    Gauge() = default;
    GaugeKind kind_ = GaugeKind::PlaneConcaveIdentity;
    double param_ = 0.0;
    double x0_ = 0.0;
    double r_threshold_ = 1.0;
    double doubling_up_ = 0.0;
    double doubling_down_ = 0.0;
    double tau_ = 0.0;
};

struct DoublingReport {
    bool pass = false;
    double candidate = 0.0;
    /// Tightest constant observed on the grid (max ratio for increasing
    /// kinds, min ratio for decreasing kinds).
    double empirical_constant = 0.0;
    std::size_t worst_index = 0;
    std::vector<unsigned char> point_pass;
    bool growth_cap_checked = false;
    bool growth_cap_ok = false;
    double growth_cap_constant = 0.0;
    std::string note;
};

/// Checks eval(2x) <= alpha * eval(x) (or >= beta * eval(x) for decreasing
/// kinds) on the grid; all grid points must be >= the gauge threshold R.
/// For increasing concave kinds also certifies the induced growth cap
/// eval(x) <= C * x^(log2 alpha) with C = alpha * eval(R) / R^(log2 alpha).
DoublingReport verify_doubling(const Gauge& g, std::span<const double> grid,
                               double alpha_candidate);

struct LimitReport {
    std::vector<double> grid;
    std::vector<double> values_minus;
    std::vector<double> values_plus;
    double limit_minus = 0.0;
    double limit_plus = 0.0;
    bool converged = false;
    std::string note;
};

/// Empirical doubling-type limits g(x)/g(x(1 -+ delta(x))) (rapid plane
/// kinds) or g(1-x)/g((1-x)(gamma -+ delta(x))) (unit kinds) along the grid,
/// with a convergence flag based on shrinking successive differences. Only
/// finitely many delta profiles can ever be checked, so a passing report is
/// a partial verification; see canonical_delta_profiles.
LimitReport verify_doubling_type(const Gauge& g, const std::function<double(double)>& delta,
                                 double gamma, std::span<const double> x_grid);

/// Same computation on a raw positive profile instead of a catalog gauge;
/// used to exhibit profiles for which no doubling-type limit exists.
LimitReport doubling_type_limits(const std::function<double(double)>& profile,
                                 const std::function<double(double)>& delta, double gamma,
                                 std::span<const double> x_grid, Ambient ambient);

enum class Trend { Increasing, Decreasing, None };

struct TrajectoryReport {
    std::vector<double> grid;
    std::vector<double> values;
    Trend trend = Trend::None;
    double final_value = 0.0;
};

/// Trajectory of the kind-specific limit diagnostic along the grid:
/// x/rapid(x) for rapid kinds, (1-x)/l(1-x) or (1-x)/k(1-x) for unit kinds,
/// eval(x)/x for plane concave kinds, eval(x) otherwise.
TrajectoryReport limit_diagnostics(const Gauge& g, std::span<const double> grid);

/// Default verification grid: n logarithmically spaced points in [lo, hi].
std::vector<double> log_spaced_grid(double lo, double hi, std::size_t n = 512);

/// Named vanishing profiles used for doubling-type checks: 1/x, 1/sqrt(x),
/// 1/log(x) toward infinity; 1-x, sqrt(1-x), 1/log(e/(1-x)) toward 1.
std::vector<std::pair<std::string, std::function<double(double)>>> canonical_delta_profiles(
    Ambient ambient);

}  // namespace esetlab
