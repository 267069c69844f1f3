#include <esetlab/json_io.hpp>
#include <esetlab/svg_report.hpp>

#include <doctest.h>

using namespace esetlab;

TEST_CASE("gauge round trips through JSON exactly") {
    for (const Gauge& g :
         {Gauge::plane_identity(), Gauge::plane_power(0.75), Gauge::plane_log(1.2),
          Gauge::plane_constant(2.5), Gauge::plane_convex_power(1.0),
          Gauge::plane_rapid_power(2.0), Gauge::plane_rapid_xlog(),
          Gauge::unit_concave_power(0.5), Gauge::unit_convex_power(2.0),
          Gauge::unit_stolz_power(1.5)}) {
        const Gauge back = gauge_from_json(gauge_to_json(g));
        CHECK(back == g);
    }
}

TEST_CASE("collection round trips through JSON exactly") {
    const DiscCollection col = gen_example1(4, 3);
    const DiscCollection back = collection_from_json(collection_to_json(col));
    CHECK(back.ambient == col.ambient);
    CHECK(back.epsilon == col.epsilon);
    CHECK(back.tail_index == col.tail_index);
    REQUIRE(back.discs.size() == col.discs.size());
    for (std::size_t i = 0; i < col.discs.size(); ++i) {
        CHECK(back.discs[i].center == col.discs[i].center);
        CHECK(back.discs[i].radius == col.discs[i].radius);
    }
}

TEST_CASE("CSV headers match the wire format") {
    const DiscCollection col = gen_example1(2, 2);
    const std::string csv = collection_to_csv(col);
    CHECK(csv.rfind("n,re,im,r,ratio\n", 0) == 0);

    std::vector<CIntervalReport> rows(1);
    rows[0].disc_index = 3;
    const std::string ci = c_interval_rows_to_csv(rows);
    CHECK(ci.rfind("disc_index,c_lo,c_hi,width,bound,satisfied\n", 0) == 0);
    CHECK(ci.find("\n3,") != std::string::npos);
}

TEST_CASE("figures regenerate byte-identically") {
    for (int which = 1; which <= 5; ++which) {
        const std::string a = render_figure(which);
        const std::string b = render_figure(which);
        CHECK(a == b);
        CHECK(a.rfind("<svg", 0) == 0);
        CHECK(a.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("strip plot renders the union segments") {
    IntervalUnion u;
    u.insert(0.2, 0.4);
    u.insert(2.0, 2.5);
    const std::string svg = render_strip_plot(u, 0.0, 10.0, "exceptional c-set");
    CHECK(svg.find("rect") != std::string::npos);
    CHECK(svg == render_strip_plot(u, 0.0, 10.0, "exceptional c-set"));
}

TEST_CASE("error payloads are JSON") {
    const std::string payload = error_to_json("invalid_input", "boom");
    CHECK(payload.find("\"error\"") != std::string::npos);
    CHECK(payload.find("boom") != std::string::npos);
}
