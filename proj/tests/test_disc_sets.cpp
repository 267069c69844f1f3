#include <esetlab/disc_collection.hpp>
#include <esetlab/errors.hpp>
#include <esetlab/json_io.hpp>

#include <doctest.h>

#include <cmath>

using namespace esetlab;

TEST_CASE("empty collection validates with tail sum zero") {
    const DiscCollection col =
        make_collection(Ambient::Plane, Gauge::plane_identity(), {}, 1.0, 0);
    const ValidationReport rep = validate(col);
    CHECK(rep.valid);
    CHECK(rep.tail_sum == 0.0);
}

TEST_CASE("disc containing the origin is reported with its index") {
    std::vector<Disc> discs{{Complex(5.0, 0.0), 1.0}, {Complex(0.1, 0.0), 2.0}};
    const DiscCollection col =
        make_collection(Ambient::Plane, Gauge::plane_identity(), std::move(discs), 50.0, 0);
    const ValidationReport rep = validate(col);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.issues.size() == 1);
    CHECK(rep.issues[0].index == 0);  // sorted to the front by modulus
    CHECK(rep.issues[0].what == "disc contains the origin");
}

TEST_CASE("ternary cover generator") {
    SUBCASE("level 1 projections sit at the construction offsets") {
        const DiscCollection col = gen_cantor_rset(1);
        REQUIRE(col.discs.size() == 2);
        // Vertical projections (-1/6, 1/2) and (1/2, 7/6) after removing the
        // ambient shift.
        CHECK(col.discs[0].center.real() - cantor_shift() == doctest::Approx(1.0 / 6.0));
        CHECK(col.discs[0].radius == doctest::Approx(1.0 / 3.0));
        CHECK(col.discs[1].center.real() - cantor_shift() == doctest::Approx(5.0 / 6.0));
    }
    SUBCASE("diameter sum is the partial geometric sum") {
        const DiscCollection col = gen_cantor_rset(12);
        CHECK(col.discs.size() == (1u << 13) - 2);
        CHECK(col.diameter_sum() ==
              doctest::Approx(4.0 * (1.0 - std::pow(2.0 / 3.0, 12))).epsilon(1e-12));
        CHECK(validate(col).valid);
    }
    SUBCASE("cover intervals nest level by level") {
        const int levels = 8;
        const DiscCollection col = gen_cantor_rset(levels);
        // Bucket by radius = 1/3^k.
        for (int k = 2; k <= levels; ++k) {
            const double r_child = std::pow(3.0, -k);
            const double r_parent = 3.0 * r_child;
            for (const Disc& child : col.discs) {
                if (std::abs(child.radius - r_child) > 1e-15) continue;
                bool nested = false;
                for (const Disc& parent : col.discs) {
                    if (std::abs(parent.radius - r_parent) > 1e-15) continue;
                    if (child.center.real() - child.radius >=
                            parent.center.real() - parent.radius - 1e-12 &&
                        child.center.real() + child.radius <=
                            parent.center.real() + parent.radius + 1e-12) {
                        nested = true;
                        break;
                    }
                }
                CHECK(nested);
            }
        }
    }
    SUBCASE("every construction endpoint's vertical line hits one disc per level") {
        const int levels = 12;
        const DiscCollection col = gen_cantor_rset(levels);
        // Endpoints of the level-`levels` middle-thirds intervals.
        std::vector<double> starts{0.0};
        double len = 1.0;
        for (int k = 1; k <= levels; ++k) {
            len /= 3.0;
            std::vector<double> next;
            for (double a : starts) {
                next.push_back(a);
                next.push_back(a + 2.0 * len);
            }
            starts = std::move(next);
        }
        long worst = 1000;
        for (double a : starts) {
            for (double p : {a, a + len}) {
                const double x = cantor_shift() + p;
                long hits = 0;
                for (const Disc& d : col.discs)
                    if (std::abs(d.center.real() - x) < d.radius) ++hits;
                worst = std::min(worst, hits);
            }
        }
        CHECK(worst >= levels);
    }
    SUBCASE("seeded imaginary parts are deterministic and admissible") {
        const DiscCollection a = gen_cantor_rset(4, 5);
        const DiscCollection b = gen_cantor_rset(4, 5);
        REQUIRE(a.discs.size() == b.discs.size());
        for (std::size_t i = 0; i < a.discs.size(); ++i) {
            CHECK(a.discs[i].center == b.discs[i].center);
            CHECK(a.discs[i].center.imag() >= 0.5);
            CHECK(a.discs[i].center.imag() <= 2.0);
        }
        CHECK(validate(a).valid);
    }
}

TEST_CASE("ray-family example generator") {
    SUBCASE("single disc") {
        const DiscCollection col = gen_example1(1, 1);
        REQUIRE(col.discs.size() == 1);
        CHECK(2.0 * col.discs[0].radius == doctest::Approx(0.5));
        CHECK(std::arg(col.discs[0].center) == doctest::Approx(1.0));
        CHECK(std::abs(col.discs[0].center) == doctest::Approx(2.0));
    }
    SUBCASE("diameter sum is a product of geometric sums, below 2") {
        const DiscCollection col = gen_example1(20, 20);
        const double expected = 2.0 * (1.0 - std::exp2(-20)) * (1.0 - std::exp2(-20));
        CHECK(col.diameter_sum() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(col.diameter_sum() < 2.0);
        CHECK(validate(col).valid);
    }
    SUBCASE("partial sums increase toward 2") {
        double prev = 0.0;
        for (int n = 1; n <= 12; ++n) {
            const double sum = gen_example1(n, n).diameter_sum();
            CHECK(sum > prev);
            prev = sum;
        }
        CHECK(prev > 2.0 - 1e-3);
    }
}

TEST_CASE("horizontal-line example generator") {
    const DiscCollection col = gen_example2(6, 5);
    CHECK(validate(col).valid);
    CHECK(col.diameter_sum() < 2.0);
    // Centers sit exactly on their lines.
    long per_line = 0;
    for (const Disc& d : col.discs)
        if (d.center.imag() == doctest::Approx(1.0 / 3.0).epsilon(1e-15)) ++per_line;
    CHECK(per_line == 5);
}

TEST_CASE("horocycle generator identities") {
    SUBCASE("1 - |z_n|^2 = (1 - cos(1/n))/2 for all n") {
        for (int n : {1, 2, 5, 17, 100}) {
            const Disc d = horocycle_disc(n);
            const double lhs = 1.0 - std::norm(d.center);
            CHECK(lhs == doctest::Approx((1.0 - std::cos(1.0 / n)) / 2.0).epsilon(1e-12));
        }
    }
    SUBCASE("n = 2 value") {
        const Disc d = horocycle_disc(2);
        CHECK(1.0 - std::norm(d.center) == doctest::Approx(0.0612087).epsilon(1e-5));
    }
    SUBCASE("normalized ratio approaches 8") {
        // r_n / (1-|z_n|) * log^2(1+n) -> 8.
        double prev_gap = 1e9;
        for (int n : {100, 1000, 10000}) {
            const Disc d = horocycle_disc(n);
            const double ratio =
                d.radius / (1.0 - std::abs(d.center)) * std::pow(std::log1p(n), 2);
            const double gap = std::abs(ratio - 8.0);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap < 1e-4);
    }
    SUBCASE("generated collection is a valid unit-disc set") {
        const DiscCollection col = gen_horocycle_lset(500);
        CHECK(validate(col).valid);
        CHECK(col.gauge.kind() == GaugeKind::UnitConcavePower);
    }
}

TEST_CASE("seeded random generator") {
    RandomSetParams params;
    params.gauge = Gauge::plane_power(0.5);
    params.count = 500;
    params.epsilon = 1e-3;
    params.envelope_m = 1.0;
    params.seed = 7;

    SUBCASE("contract: validation passes across gauges and ambients") {
        CHECK(validate(gen_random(params)).valid);

        RandomSetParams convex = params;
        convex.gauge = Gauge::plane_convex_power(1.0);
        CHECK(validate(gen_random(convex)).valid);

        RandomSetParams rapid = params;
        rapid.gauge = Gauge::plane_rapid_power(2.0);
        CHECK(validate(gen_random(rapid)).valid);

        RandomSetParams unit = params;
        unit.ambient = Ambient::UnitDisc;
        unit.gauge = Gauge::unit_concave_power(0.5);
        CHECK(validate(gen_random(unit)).valid);
    }
    SUBCASE("tail discs satisfy the asymptotic regime") {
        const DiscCollection col = gen_random(params);
        for (std::size_t n = col.tail_index; n < col.discs.size(); ++n) {
            const double x = col.discs[n].center.real();
            CHECK(x - col.discs[n].radius >= 0.5 * x);
            CHECK(0.5 * x >= std::exp(1.0));
            CHECK(std::abs(col.discs[n].center.imag()) <=
                  params.envelope_m * col.discs[n].center.real());
        }
    }
    SUBCASE("same seed, same collection") {
        const DiscCollection a = gen_random(params);
        const DiscCollection b = gen_random(params);
        REQUIRE(a.discs.size() == b.discs.size());
        for (std::size_t i = 0; i < a.discs.size(); ++i) {
            CHECK(a.discs[i].center == b.discs[i].center);
            CHECK(a.discs[i].radius == b.discs[i].radius);
        }
    }
    SUBCASE("single disc still respects the budget") {
        RandomSetParams one = params;
        one.count = 1;
        const DiscCollection col = gen_random(one);
        CHECK(col.discs.size() == 1);
        CHECK(col.tail_sum() < one.epsilon);
    }
    SUBCASE("infeasible parameters rejected") {
        RandomSetParams bad = params;
        bad.count = 0;
        CHECK_THROWS_AS(gen_random(bad), InvalidInput);
        bad = params;
        bad.epsilon = 0.0;
        CHECK_THROWS_AS(gen_random(bad), InvalidInput);
        bad = params;
        bad.x_lo = 1.0;  // below 2e
        CHECK_THROWS_AS(gen_random(bad), InvalidInput);
        bad = params;
        bad.ambient = Ambient::UnitDisc;  // plane gauge, unit ambient
        CHECK_THROWS_AS(gen_random(bad), InvalidInput);
    }
}
