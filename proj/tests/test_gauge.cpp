#include <esetlab/errors.hpp>
#include <esetlab/gauge.hpp>

#include <doctest.h>

#include <cmath>

using namespace esetlab;

TEST_CASE("eval on the catalog") {
    CHECK(Gauge::plane_identity().eval(2.0) == 2.0);
    CHECK(Gauge::plane_power(0.5).eval(4.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(Gauge::unit_convex_power(2.0).eval(0.1) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(Gauge::plane_constant(3.0).eval(123.0) == 3.0);
    CHECK(Gauge::plane_convex_power(1.0).eval(4.0) == doctest::Approx(0.25));
    CHECK(Gauge::plane_rapid_xlog().eval(1.0) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("factory parameter validation") {
    CHECK_THROWS_AS(Gauge::plane_power(1.5), InvalidInput);
    CHECK_THROWS_AS(Gauge::plane_constant(-1.0), InvalidInput);
    CHECK_THROWS_AS(Gauge::unit_convex_power(0.5), InvalidInput);
    CHECK_THROWS_AS(Gauge::unit_stolz_power(0.5), InvalidInput);
    CHECK_THROWS_AS(Gauge::plane_log(1.0), InvalidInput);
}

TEST_CASE("doubling certificates are exact for powers") {
    const Gauge g = Gauge::plane_power(0.5);
    const auto grid = log_spaced_grid(1.0, 100.0, 128);
    const DoublingReport rep = verify_doubling(g, grid, std::sqrt(2.0));
    CHECK(rep.pass);
    CHECK(rep.empirical_constant == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.growth_cap_checked);
    CHECK(rep.growth_cap_ok);
}

TEST_CASE("log gauge needs x beyond 2^(1/(alpha-1))") {
    const Gauge g = Gauge::plane_log(1.1);
    CHECK(g.r_threshold() == doctest::Approx(1024.0).epsilon(1e-12));
    const auto grid = log_spaced_grid(1024.0, 1e6, 200);
    CHECK(verify_doubling(g, grid, 1.1).pass);
    // Below the threshold the ratio log(2x)/log(x) exceeds 1.1.
    CHECK(g.eval(2.0 * 512.0) / g.eval(512.0) > 1.1);
}

TEST_CASE("constant gauge alpha=1 flagged informational") {
    const Gauge g = Gauge::plane_constant(1.0);
    const auto grid = log_spaced_grid(1.0, 100.0, 32);
    const DoublingReport rep = verify_doubling(g, grid, 1.0);
    CHECK(rep.pass);
    CHECK(rep.note.find("constant functions only") != std::string::npos);
}

TEST_CASE("identity gauge meets the technical cap alpha <= 2") {
    const Gauge g = Gauge::plane_identity();
    for (double x : log_spaced_grid(1.0, 1e8, 64)) CHECK(g.eval(2.0 * x) <= 2.0 * g.eval(x));
    CHECK(g.doubling_up() <= 2.0);
    CHECK(Gauge::plane_power(0.9).doubling_up() <= 2.0);
}

TEST_CASE("convex decreasing doubling") {
    const Gauge g = Gauge::plane_convex_power(1.0);
    const auto grid = log_spaced_grid(1.0, 1e4, 64);
    const DoublingReport rep = verify_doubling(g, grid, 0.5);
    CHECK(rep.pass);
    CHECK(rep.empirical_constant == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("doubling-type limits: unit concave power") {
    const Gauge g = Gauge::unit_concave_power(0.5);
    auto grid = log_spaced_grid(1e-8, 1e-2, 64);
    std::vector<double> xs;
    for (double s : grid) xs.push_back(1.0 - s);
    std::sort(xs.begin(), xs.end());
    const LimitReport rep =
        verify_doubling_type(g, [](double x) { return std::sqrt(1.0 - x); }, 1.0, xs);
    CHECK(rep.converged);
    // ((gamma -+ delta)/1)^(-1/2) -> gamma^(-1/2) = 1 for gamma = 1.
    CHECK(rep.limit_minus == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(rep.limit_plus == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("doubling-type limits: rapid power has limit 1") {
    const Gauge g = Gauge::plane_rapid_power(2.0);
    const auto grid = log_spaced_grid(10.0, 1e8, 64);
    const LimitReport rep = verify_doubling_type(g, [](double x) { return 1.0 / x; }, 1.0, grid);
    CHECK(rep.converged);
    CHECK(rep.limit_minus == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.limit_plus == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("profile exp(-1/x) has no doubling-type limit under sqrt delta") {
    auto profile = [](double s) { return std::exp(-1.0 / s); };
    auto delta = [](double x) { return std::sqrt(1.0 - x); };
    std::vector<double> xs;
    for (double s : log_spaced_grid(1e-8, 1e-2, 64)) xs.push_back(1.0 - s);
    std::sort(xs.begin(), xs.end());
    const LimitReport rep = doubling_type_limits(profile, delta, 1.0, xs, Ambient::UnitDisc);
    CHECK_FALSE(rep.converged);
}

TEST_CASE("doubling-type unsupported for plain concave kinds") {
    const auto grid = log_spaced_grid(10.0, 100.0, 16);
    CHECK_THROWS_AS(
        verify_doubling_type(Gauge::plane_identity(), [](double) { return 0.1; }, 1.0, grid),
        UnsupportedGauge);
}

TEST_CASE("limit diagnostics trajectories") {
    SUBCASE("rapid power: x / L(x) = 1/x decreasing to 0") {
        const auto grid = log_spaced_grid(10.0, 1e4, 32);
        const TrajectoryReport rep = limit_diagnostics(Gauge::plane_rapid_power(2.0), grid);
        CHECK(rep.trend == Trend::Decreasing);
        CHECK(rep.final_value == doctest::Approx(1e-4).epsilon(1e-9));
    }
    SUBCASE("unit concave: (1-x)/l(1-x) -> 0") {
        std::vector<double> xs;
        for (double s : log_spaced_grid(1e-8, 1e-1, 32)) xs.push_back(1.0 - s);
        std::sort(xs.begin(), xs.end());
        const TrajectoryReport rep = limit_diagnostics(Gauge::unit_concave_power(0.5), xs);
        CHECK(rep.trend == Trend::Decreasing);
        CHECK(rep.final_value == doctest::Approx(std::sqrt(1e-8)).epsilon(1e-6));
    }
    SUBCASE("unit convex: (1-x)/k(1-x) -> infinity") {
        std::vector<double> xs;
        for (double s : log_spaced_grid(1e-8, 1e-1, 32)) xs.push_back(1.0 - s);
        std::sort(xs.begin(), xs.end());
        const TrajectoryReport rep = limit_diagnostics(Gauge::unit_convex_power(2.0), xs);
        CHECK(rep.trend == Trend::Increasing);
        CHECK(rep.final_value == doctest::Approx(1e8).epsilon(1e-6));
    }
}

TEST_CASE("shape by finite differences on the default grid") {
    // Concave kinds: non-increasing difference quotients; convex kinds:
    // non-decreasing.
    auto quotient_trend = [](const Gauge& g, double lo, double hi, bool expect_concave) {
        const auto grid = log_spaced_grid(lo, hi, 64);
        double prev_q = 0.0;
        bool first = true;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double q = (g.eval(grid[i]) - g.eval(grid[i - 1])) / (grid[i] - grid[i - 1]);
            if (!first) {
                if (expect_concave)
                    CHECK(q <= prev_q * (1.0 + 1e-9) + 1e-12);
                else
                    CHECK(q >= prev_q * (1.0 - 1e-9) - 1e-12);
            }
            prev_q = q;
            first = false;
        }
    };
    quotient_trend(Gauge::plane_power(0.5), 1.0, 1e4, true);
    quotient_trend(Gauge::plane_log(), 2.0, 1e4, true);
    quotient_trend(Gauge::plane_rapid_power(2.0), 1.0, 1e3, false);
    quotient_trend(Gauge::plane_rapid_xlog(), 1.0, 1e3, false);
}

TEST_CASE("unit gauge rejects arguments outside (0,1)") {
    const Gauge g = Gauge::unit_concave_power(0.5);
    CHECK_THROWS_AS(g.eval(0.0), DomainError);
    CHECK_THROWS_AS(g.eval(1.0), DomainError);
    CHECK_THROWS_AS(Gauge::plane_log().eval(0.5), DomainError);
}

TEST_CASE("empty grid rejected") {
    std::vector<double> empty;
    CHECK_THROWS_AS(verify_doubling(Gauge::plane_identity(), empty, 2.0), InvalidInput);
}

TEST_CASE("canonical delta profiles cover both ambients") {
    CHECK(canonical_delta_profiles(Ambient::Plane).size() == 3);
    CHECK(canonical_delta_profiles(Ambient::UnitDisc).size() == 3);
    for (const auto& [name, delta] : canonical_delta_profiles(Ambient::Plane))
        CHECK(delta(100.0) > 0.0);
}
