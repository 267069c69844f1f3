#include <esetlab/errors.hpp>
#include <esetlab/experiments.hpp>
#include <esetlab/interval_union.hpp>
#include <esetlab/rng.hpp>

#include <doctest.h>

#include <cmath>

using namespace esetlab;

TEST_CASE("insert merges overlaps") {
    IntervalUnion u;
    u.insert(0.0, 1.0);
    u.insert(0.5, 2.0);
    CHECK(u.size() == 1);
    CHECK(u.measure() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("touching intervals merge, gaps stay positive") {
    IntervalUnion u;
    u.insert(0.0, 1.0);
    u.insert(1.0, 2.0);
    CHECK(u.size() == 1);
    u.insert(3.0, 4.0);
    CHECK(u.size() == 2);
    CHECK(u.measure() == doctest::Approx(3.0));
}

TEST_CASE("empty union has measure zero") {
    IntervalUnion u;
    CHECK(u.measure() == 0.0);
    CHECK(u.empty());
    CHECK_FALSE(u.contains(0.0));
}

TEST_CASE("degenerate interval rejected") {
    IntervalUnion u;
    CHECK_THROWS_AS(u.insert(1.0, 1.0), InvalidInterval);
    CHECK_THROWS_AS(u.insert(2.0, 1.0), InvalidInterval);
}

TEST_CASE("ternary cover union collapses to the first level") {
    // Level k intervals are nested inside level 1, so the union measure is
    // 2/3 + 2/3 = 4/3.
    IntervalUnion u;
    double len = 1.0;
    std::vector<double> starts{0.0};
    for (int k = 1; k <= 12; ++k) {
        len /= 3.0;
        std::vector<double> next;
        for (double a : starts) {
            next.push_back(a);
            next.push_back(a + 2.0 * len);
        }
        starts = std::move(next);
        for (double a : starts) {
            const double center = a + 0.5 * len;
            u.insert(center - len, center + len);
        }
    }
    CHECK(u.measure() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    // The two level-1 cover intervals touch at 1/2 and merge.
    CHECK(u.size() <= 2);
    CHECK(u.intervals().front().lo == doctest::Approx(-1.0 / 6.0));
    CHECK(u.intervals().back().hi == doctest::Approx(7.0 / 6.0));
}

TEST_CASE("clip and cover queries") {
    IntervalUnion u;
    u.insert(0.0, 2.0);
    u.insert(5.0, 6.0);
    CHECK(u.clipped(1.0).measure() == doctest::Approx(2.0));
    CHECK(u.clipped(1.0, 5.5).measure() == doctest::Approx(1.5));
    CHECK(u.covers(0.5, 1.5));
    CHECK_FALSE(u.covers(1.5, 5.5));
    CHECK(u.contains(5.0));
    CHECK_FALSE(u.contains(4.0));
}

TEST_CASE("randomized unions agree with the cell-walk measure") {
    std::mt19937_64 eng(99);
    for (int trial = 0; trial < 50; ++trial) {
        IntervalUnion u;
        const int k = 1 + static_cast<int>(eng() % 40);
        for (int i = 0; i < k; ++i) {
            const double a = uniform_in(eng, 0.0, 100.0);
            u.insert(a, a + uniform_in(eng, 1e-3, 7.0));
        }
        const double grid = experiments::brute_force_grid_measure(u, -1.0, 108.0, 200000);
        CHECK(std::abs(grid - u.measure()) <= 1e-6 * 109.0);
    }
}
