#include <esetlab/bound_checks.hpp>
#include <esetlab/cartan.hpp>
#include <esetlab/errors.hpp>
#include <esetlab/experiments.hpp>
#include <esetlab/rng.hpp>

#include <doctest.h>

#include <cmath>

using namespace esetlab;

TEST_CASE("exceptional discs for a single point") {
    const std::vector<Complex> pts{Complex(0.3, -0.2)};
    const std::vector<Disc> discs = cartan_discs(pts, 0.3);
    REQUIRE(discs.size() == 1);
    CHECK(discs[0].radius <= 0.6 * (1.0 + 1e-12));
    CHECK(std::abs(pts[0] - discs[0].center) <= discs[0].radius);
    // Everything outside keeps distance > d.
    for (double theta = 0.0; theta < 6.28; theta += 0.05) {
        const Complex z = discs[0].center + std::polar(discs[0].radius * 1.01, theta);
        CHECK(std::abs(z - pts[0]) > 0.3 * (1.0 - 1e-9));
    }
}

TEST_CASE("exceptional discs for three collinear points") {
    const std::vector<Complex> pts{Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0)};
    const double d = 0.3;
    const std::vector<Disc> discs = cartan_discs(pts, d);
    double radii = 0.0;
    for (const Disc& disc : discs) radii += disc.radius;
    CHECK(radii <= 2.0 * d * (1.0 + 1e-12));

    // Grid of outside samples: sorted distances exceed (0.1, 0.2, 0.3).
    std::mt19937_64 eng(5);
    long tested = 0;
    while (tested < 1000) {
        const Complex z(uniform_in(eng, -2.0, 4.0), uniform_in(eng, -2.0, 2.0));
        bool outside = true;
        for (const Disc& disc : discs)
            if (std::abs(z - disc.center) <= disc.radius) outside = false;
        if (!outside) continue;
        ++tested;
        std::vector<double> dist;
        for (const Complex& p : pts) dist.push_back(std::abs(z - p));
        std::sort(dist.begin(), dist.end());
        for (std::size_t m = 1; m <= dist.size(); ++m)
            CHECK(dist[m - 1] > static_cast<double>(m) * d / 3.0);
    }
}

TEST_CASE("clustered points collapse into one disc") {
    const std::vector<Complex> pts(7, Complex(1.0, 1.0));
    const std::vector<Disc> discs = cartan_discs(pts, 0.5);
    CHECK(discs.size() == 1);
}

TEST_CASE("annulus construction for the identity gauge") {
    // d_nu = alpha^nu / (nu log alpha)^alpha; at alpha = 2, nu = 3 this is
    // 8 / (3 log 2)^2.
    const RationalFunction f{{{Complex(1.0, 0.0), 1, PointKind::Zero},
                              {Complex(3.0, 0.0), 1, PointKind::Zero},
                              {Complex(10.0, 0.0), 1, PointKind::Zero},
                              {Complex(40.0, 0.0), 1, PointKind::Zero}}};
    CHECK(counting_function(f, 0, 16.0) == 3);

    const CartanConstruction con =
        build_exceptional_set(f, 0, 2.0, Gauge::plane_identity(), Ambient::Plane);
    CHECK(con.nu0 == 3);
    CHECK(con.l_exponent == 1);
    REQUIRE_FALSE(con.annuli.empty());
    const CartanAnnulus& first = con.annuli.front();
    CHECK(first.nu == 3);
    CHECK(first.d_nu == doctest::Approx(8.0 / std::pow(3.0 * std::log(2.0), 2)).epsilon(1e-12));
    CHECK(first.d_nu == doctest::Approx(1.8501).epsilon(1e-4));
    CHECK(first.mu == counting_function(f, 0, 32.0));

    const CartanCheck check = check_construction(con);
    CHECK(check.passed);
    CHECK(check.closed_form_gap <= 1e-6);
}

TEST_CASE("empty function yields an empty construction") {
    const CartanConstruction con =
        build_exceptional_set(RationalFunction{}, 0, 2.0, Gauge::plane_identity(),
                              Ambient::Plane);
    CHECK(con.retained_discs().empty());
    CHECK(check_construction(con).passed);
}

TEST_CASE("inner chain at a hand-checked sample") {
    // Points {1, -1, 2i}, alpha = 2, identity gauge, z = 5:
    //   sum 1/|z - a| = 1/4 + 1/6 + 1/|5-2i|  ~ 0.60237
    //   bound = 4 * 3 * log 3 * (log 5)^2 / 5 ~ 6.830
    const RationalFunction f{{{Complex(1.0, 0.0), 1, PointKind::Zero},
                              {Complex(-1.0, 0.0), 1, PointKind::Zero},
                              {Complex(0.0, 2.0), 1, PointKind::Zero}}};
    CartanConstruction con;  // minimal frame: no discs, exclusion below the sample
    con.ambient = Ambient::Plane;
    con.alpha = 2.0;
    con.gauge = Gauge::plane_identity();
    con.l_exponent = 1;
    con.nu0 = 1;
    con.inner_exclusion_radius = 2.0;

    const std::vector<Complex> zs{Complex(5.0, 0.0)};
    const BoundReport rep = check_logderiv_bound(f, 1, 0, 2.0, con.gauge, zs, con);
    REQUIRE(rep.samples.size() == 1);
    CHECK(rep.samples[0].inner_lhs == doctest::Approx(0.60237).epsilon(1e-4));
    CHECK(rep.samples[0].inner_rhs == doctest::Approx(6.830).epsilon(1e-3));
    CHECK(rep.samples[0].inner_ok);
    CHECK(rep.inner_violations == 0);
}

TEST_CASE("double zero at the origin has ratio below 2") {
    // f = z^2: |f'/f| = 2/r while the bracket already contains
    // T(alpha r)/r = 2 log(alpha r)/r.
    const RationalFunction f{{{Complex(0.0, 0.0), 2, PointKind::Zero}}};
    const Gauge gauge = Gauge::plane_identity();
    const CartanConstruction con = build_exceptional_set(f, 0, 2.0, gauge, Ambient::Plane);
    const std::vector<Complex> zs = experiments::sample_admissible_plane(
        con, con.inner_exclusion_radius * 1.05, 1000.0, 500, 9);
    const BoundReport rep = check_logderiv_bound(f, 1, 0, 2.0, gauge, zs, con);
    CHECK(rep.rejected.empty());
    CHECK(rep.empirical_c <= 2.0);
    CHECK(rep.inner_violations == 0);
}

TEST_CASE("difference bound trivial cases") {
    CartanConstruction con;
    con.ambient = Ambient::Plane;
    con.alpha = 2.0;
    con.gauge = Gauge::plane_identity();
    con.l_exponent = 1;
    con.inner_exclusion_radius = 1.0;

    SUBCASE("no zeros or poles: LHS is zero") {
        const std::vector<Complex> zs{Complex(10.0, 0.0)};
        const BoundReport rep =
            check_logdiff_bound(RationalFunction{}, Complex(1.0, 0.0), 2.0, con.gauge, zs, con);
        REQUIRE(rep.samples.size() == 1);
        CHECK(rep.samples[0].lhs == 0.0);
    }
    SUBCASE("zero shift: LHS is zero") {
        const RationalFunction f{{{Complex(0.0, 0.0), 1, PointKind::Zero}}};
        const std::vector<Complex> zs{Complex(10.0, 0.0)};
        const BoundReport rep =
            check_logdiff_bound(f, Complex(0.0, 0.0), 2.0, con.gauge, zs, con);
        CHECK(rep.samples[0].lhs == 0.0);
    }
    SUBCASE("worked value for f = z at z = 100") {
        const RationalFunction f{{{Complex(0.0, 0.0), 1, PointKind::Zero}}};
        const std::vector<Complex> zs{Complex(100.0, 0.0)};
        const BoundReport rep =
            check_logdiff_bound(f, Complex(1.0, 0.0), 2.0, con.gauge, zs, con);
        CHECK(rep.samples[0].lhs == doctest::Approx(0.00995).epsilon(1e-3));
        CHECK(rep.samples[0].lhs <= rep.samples[0].rhs);
    }
}

TEST_CASE("unit-disc construction on a geometric zero sequence") {
    std::vector<ZeroPole> points;
    for (int m = 1; m <= 12; ++m)
        points.push_back({Complex(1.0 - std::exp2(-m), 0.0), 1, PointKind::Zero});
    const RationalFunction f{std::move(points)};
    const Gauge gauge = Gauge::unit_convex_power(2.0);
    const CartanConstruction con =
        build_exceptional_set(f, 0, 2.0, gauge, Ambient::UnitDisc, 0.5);

    const CartanCheck check = check_construction(con);
    CHECK(check.side_conditions_ok);
    CHECK(check.inside_unit_disc);
    CHECK(check.origin_excluded);
    CHECK(check.radii_within_budget);
    CHECK(check.tail_bounded);

    // Ring samples between consecutive zeros stay admissible and satisfy
    // the inner chain.
    std::mt19937_64 eng(13);
    std::vector<Complex> zs;
    while (zs.size() < 200) {
        const int m = con.nu0 + 1 + static_cast<int>(eng() % 8);
        const Complex z = std::polar(1.0 - 0.75 * std::exp2(-m), uniform_in(eng, 0.0, 6.28));
        if (!con.excluded(z)) zs.push_back(z);
    }
    const BoundReport rep = check_logderiv_bound_unitdisc(f, 1, 0, 2.0, 0.5, gauge, zs, con);
    CHECK(rep.rejected.empty());
    CHECK(rep.inner_violations == 0);
    SUBCASE("single zero at the origin keeps a finite constant") {
        const RationalFunction g{{{Complex(0.0, 0.0), 1, PointKind::Zero}}};
        const CartanConstruction gcon =
            build_exceptional_set(g, 0, 2.0, gauge, Ambient::UnitDisc, 0.5);
        std::vector<Complex> samples;
        for (int i = 0; i < 50; ++i)
            samples.push_back(std::polar(1.0 - 1e-3 / (i + 1.0), 0.1 * i));
        const BoundReport grep =
            check_logderiv_bound_unitdisc(g, 1, 0, 2.0, 0.5, gauge, samples, gcon);
        for (const BoundSample& s : grep.samples) CHECK(std::isfinite(s.ratio));
        CHECK(grep.empirical_c < 1e6);
    }
}

TEST_CASE("samples inside the exceptional set are rejected with indices") {
    const RationalFunction f{{{Complex(10.0, 0.0), 1, PointKind::Zero},
                              {Complex(12.0, 0.0), 1, PointKind::Zero},
                              {Complex(20.0, 0.0), 1, PointKind::Zero}}};
    const Gauge gauge = Gauge::plane_identity();
    const CartanConstruction con = build_exceptional_set(f, 0, 2.0, gauge, Ambient::Plane);
    // The zero itself is inside some retained disc or the exclusion radius.
    const std::vector<Complex> zs{Complex(10.0, 0.0), Complex(1.0, 0.0)};
    const BoundReport rep = check_logderiv_bound(f, 1, 0, 2.0, gauge, zs, con);
    CHECK(rep.rejected.size() + rep.samples.size() == 2);
    CHECK_FALSE(rep.rejected.empty());
}

TEST_CASE("invalid construction inputs") {
    CHECK_THROWS_AS(cartan_discs(std::vector<Complex>{}, 0.5), InvalidInput);
    CHECK_THROWS_AS(cartan_discs(std::vector<Complex>{Complex(0.0, 0.0)}, 0.0), InvalidInput);
    CHECK_THROWS_AS(build_exceptional_set(RationalFunction{}, 0, 1.0, Gauge::plane_identity(),
                                          Ambient::Plane),
                    InvalidInput);
    CHECK_THROWS_AS(build_exceptional_set(RationalFunction{}, 0, 2.0,
                                          Gauge::unit_convex_power(2.0), Ambient::UnitDisc),
                    InvalidInput);
}
