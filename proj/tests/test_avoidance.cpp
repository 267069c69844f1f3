#include <esetlab/avoidance.hpp>
#include <esetlab/errors.hpp>
#include <esetlab/experiments.hpp>

#include <doctest.h>

#include <cmath>

using namespace esetlab;

namespace {

std::vector<double> linear_grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (double r = lo; r <= hi + 1e-12; r += step) g.push_back(r);
    return g;
}

}  // namespace

TEST_CASE("empty exceptional set passes from the grid start") {
    const auto grid = linear_grid(1.0, 40.0, 0.5);
    const auto h_grid = linear_grid(1.0, 90.0, 0.5);
    const MonotoneSample g =
        MonotoneSample::from_function([](double r) { return r; }, grid);
    const MonotoneSample h =
        MonotoneSample::from_function([](double r) { return r; }, h_grid);
    const AvoidanceReport rep = avoidance_check_plane(
        g, h, IntervalUnion{}, Gauge::plane_constant(1.0), [](double r) { return 1.0 / r; },
        1.0);
    CHECK(rep.passed);
    CHECK(rep.R == grid.front());
    CHECK(rep.violations.empty());
}

TEST_CASE("constant gauge with E = [2,3] and eps = 1/r") {
    // Threshold: 1/r > (1/r) tail(r) iff tail < 1 iff r > 2.
    const auto grid = linear_grid(1.0, 50.0, 0.25);
    const auto h_grid = linear_grid(1.0, 60.0, 0.25);
    IntervalUnion E;
    E.insert(2.0, 3.0);
    const MonotoneSample g = MonotoneSample::from_function(
        [](double r) { return (r >= 2.0 && r <= 3.0) ? 3.0 : r; }, grid);
    const MonotoneSample h =
        MonotoneSample::from_function([](double r) { return r; }, h_grid);
    const AvoidanceReport rep = avoidance_check_plane(
        g, h, E, Gauge::plane_constant(1.0), [](double r) { return 1.0 / r; }, 1.0);
    CHECK(rep.passed);
    CHECK(rep.R > 2.0);
    CHECK(rep.R <= 2.25 + 1e-12);
    CHECK(rep.violations.empty());
    CHECK(rep.nonempty_step_ok);
    CHECK(rep.interval_step_ok);
}

TEST_CASE("hypothesis g <= h off E is enforced") {
    const auto grid = linear_grid(1.0, 30.0, 0.5);
    IntervalUnion E;
    E.insert(2.0, 3.0);
    const MonotoneSample g =
        MonotoneSample::from_function([](double r) { return r + 1.0; }, grid);
    const MonotoneSample h =
        MonotoneSample::from_function([](double r) { return r; }, grid);
    CHECK_THROWS_AS(avoidance_check_plane(g, h, E, Gauge::plane_constant(1.0),
                                          [](double r) { return 1.0 / r; }, 1.0),
                    InvalidInput);
}

TEST_CASE("dense exceptional set trips the density hypothesis") {
    const auto grid = linear_grid(1.0, 900.0, 1.0);
    IntervalUnion E;
    for (int n = 1; n <= 999; ++n) E.insert(n, n + 0.9);
    const MonotoneSample g =
        MonotoneSample::from_function([](double r) { return r; }, grid);
    const MonotoneSample h = g;
    CHECK_THROWS_AS(avoidance_check_plane(g, h, E, Gauge::plane_constant(1.0),
                                          [](double r) { return 1.0 / r; }, 1.0),
                    HypothesisFail);
}

TEST_CASE("unit disc: empty set with constant ratio profile") {
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) grid.push_back(0.5 + 0.49 * i / 200.0);
    std::vector<double> h_grid = grid;
    h_grid.push_back(0.9999999);
    const MonotoneSample g =
        MonotoneSample::from_function([](double r) { return r; }, grid);
    const MonotoneSample h =
        MonotoneSample::from_function([](double r) { return r; }, h_grid);
    // Constant b recovers the fixed-dilation shape of the classical lemma.
    const AvoidanceReport rep = avoidance_check_unitdisc(
        g, h, IntervalUnion{}, Gauge::unit_stolz_power(1.0), [](double) { return 0.5; });
    CHECK(rep.passed);
    CHECK(rep.R == grid.front());
}

TEST_CASE("unit disc: geometric exceptional bands with shrinking dilation") {
    const experiments::AvoidanceResult res = experiments::run_avoidance();
    CHECK(res.unit.passed);
    CHECK(res.unit.hypothesis_ok);
    CHECK(res.unit.density_limsup < 1.0);
    CHECK(res.unit.violations.empty());
    CHECK(res.unit.interval_step_ok);
    CHECK(res.plane.passed);
}

TEST_CASE("inadmissible gauges rejected") {
    const auto grid = linear_grid(1.0, 30.0, 0.5);
    const MonotoneSample g =
        MonotoneSample::from_function([](double r) { return r; }, grid);
    CHECK_THROWS_AS(avoidance_check_plane(g, g, IntervalUnion{}, Gauge::plane_rapid_power(2.0),
                                          [](double r) { return 1.0 / r; }, 1.0),
                    UnsupportedGauge);
    std::vector<double> ugrid;
    for (int i = 0; i <= 50; ++i) ugrid.push_back(0.5 + 0.4 * i / 50.0);
    const MonotoneSample ug =
        MonotoneSample::from_function([](double r) { return r; }, ugrid);
    CHECK_THROWS_AS(avoidance_check_unitdisc(ug, ug, IntervalUnion{},
                                             Gauge::unit_concave_power(0.5),
                                             [](double) { return 0.5; }),
                    UnsupportedGauge);
}

TEST_CASE("monotone sample validation") {
    MonotoneSample bad;
    bad.grid = {1.0, 2.0};
    bad.values = {2.0, 1.0};
    CHECK_THROWS_AS(bad.check(), InvalidInput);
    bad.grid = {2.0, 1.0};
    bad.values = {1.0, 2.0};
    CHECK_THROWS_AS(bad.check(), InvalidInput);
}
