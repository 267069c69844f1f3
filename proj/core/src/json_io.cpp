#include <esetlab/json_io.hpp>

#include <esetlab/errors.hpp>

#include <json.hpp>

#include <cstdio>

namespace esetlab {

namespace {

using nlohmann::json;

json gauge_to_json_obj(const Gauge& g) {
    json params = json::object();
    switch (g.kind()) {
        case GaugeKind::PlaneConcavePower:
        case GaugeKind::UnitConcavePower:
        case GaugeKind::UnitConvexPower:
            params["a"] = g.param();
            break;
        case GaugeKind::PlaneConvexPower:
        case GaugeKind::PlaneRapidPower:
            params["p"] = g.param();
            break;
        case GaugeKind::UnitStolzPower:
            params["gamma"] = g.param();
            break;
        case GaugeKind::PlaneConstant:
            params["value"] = g.param();
            break;
        case GaugeKind::PlaneConcaveLog:
            params["alpha"] = g.param();
            break;
        default:
            break;
    }
    json j{{"kind", g.kind_name()}, {"params", params}, {"x0", g.x0()}, {"R", g.r_threshold()}};
    if (g.has_doubling_up())
        j["alpha"] = g.doubling_up();
    else if (g.has_doubling_down())
        j["beta"] = g.doubling_down();
    else
        j["tau"] = g.tau();
    return j;
}

Gauge gauge_from_json_obj(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const json& params = j.contains("params") ? j.at("params") : json::object();
    if (kind == "plane_concave_identity") return Gauge::plane_identity();
    if (kind == "plane_concave_power") return Gauge::plane_power(params.at("a").get<double>());
    if (kind == "plane_concave_log")
        return Gauge::plane_log(params.value("alpha", 1.1));
    if (kind == "plane_constant") return Gauge::plane_constant(params.value("value", 1.0));
    if (kind == "plane_convex_power")
        return Gauge::plane_convex_power(params.at("p").get<double>());
    if (kind == "plane_rapid_power") return Gauge::plane_rapid_power(params.at("p").get<double>());
    if (kind == "plane_rapid_xlog") return Gauge::plane_rapid_xlog();
    if (kind == "unit_concave_power")
        return Gauge::unit_concave_power(params.at("a").get<double>());
    if (kind == "unit_convex_power") return Gauge::unit_convex_power(params.at("a").get<double>());
    if (kind == "unit_stolz_power")
        return Gauge::unit_stolz_power(params.at("gamma").get<double>());
    throw InvalidInput("gauge_from_json: unknown kind '" + kind + "'");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string gauge_to_json(const Gauge& g, int indent) {
    return gauge_to_json_obj(g).dump(indent);
}

Gauge gauge_from_json(const std::string& text) {
    return gauge_from_json_obj(json::parse(text));
}

std::string collection_to_json(const DiscCollection& col, int indent) {
    json discs = json::array();
    for (const Disc& d : col.discs)
        discs.push_back(json{{"re", d.center.real()}, {"im", d.center.imag()}, {"r", d.radius}});
    json j{{"ambient", ambient_name(col.ambient)},
           {"gauge", gauge_to_json_obj(col.gauge)},
           {"epsilon", col.epsilon},
           {"tail_index", col.tail_index},
           {"discs", std::move(discs)}};
    return j.dump(indent);
}

DiscCollection collection_from_json(const std::string& text) {
    const json j = json::parse(text);
    const std::string ambient_str = j.at("ambient").get<std::string>();
    Ambient ambient;
    if (ambient_str == "plane")
        ambient = Ambient::Plane;
    else if (ambient_str == "unit_disc")
        ambient = Ambient::UnitDisc;
    else
        throw InvalidInput("collection_from_json: unknown ambient '" + ambient_str + "'");
    std::vector<Disc> discs;
    for (const json& dj : j.at("discs"))
        discs.push_back({Complex(dj.at("re").get<double>(), dj.at("im").get<double>()),
                         dj.at("r").get<double>()});
    return make_collection(ambient, gauge_from_json_obj(j.at("gauge")), std::move(discs),
                           j.at("epsilon").get<double>(), j.at("tail_index").get<std::size_t>());
}

std::string collection_to_csv(const DiscCollection& col) {
    std::string out = "n,re,im,r,ratio\n";
    for (std::size_t n = 0; n < col.discs.size(); ++n) {
        const Disc& d = col.discs[n];
        out += std::to_string(n) + ',' + format_double(d.center.real()) + ',' +
               format_double(d.center.imag()) + ',' + format_double(d.radius) + ',' +
               format_double(col.ratio_of(n)) + '\n';
    }
    return out;
}

std::string c_interval_rows_to_csv(const std::vector<CIntervalReport>& rows) {
    std::string out = "disc_index,c_lo,c_hi,width,bound,satisfied\n";
    for (const CIntervalReport& r : rows) {
        out += std::to_string(r.disc_index) + ',' + format_double(r.c_lo) + ',' +
               format_double(r.c_hi) + ',' + format_double(r.width) + ',' +
               format_double(r.bound) + ',' + (r.satisfied ? "true" : "false") + '\n';
    }
    return out;
}

std::string validation_to_json(const ValidationReport& rep, int indent) {
    json issues = json::array();
    for (const ValidationIssue& issue : rep.issues)
        issues.push_back(json{{"index", issue.index}, {"what", issue.what}});
    json j{{"valid", rep.valid},
           {"tail_sum", rep.tail_sum},
           {"epsilon", rep.epsilon},
           {"ratios_trend_to_zero", rep.ratios_trend_to_zero},
           {"technical_trend_ok", rep.technical_trend_ok},
           {"issues", std::move(issues)}};
    return j.dump(indent);
}

std::string hit_report_to_json(const HitReport& rep, int indent) {
    json j{{"samples", rep.samples},
           {"hits", rep.hits},
           {"fraction", rep.fraction},
           {"exceptional_measure", rep.exceptional_measure},
           {"exceptional_bound", rep.exceptional_bound},
           {"p_bound", rep.p_bound},
           {"slack", rep.slack},
           {"satisfied", rep.satisfied},
           {"seed", rep.seed},
           {"c_range", json::array({rep.c_lo, rep.c_hi})}};
    return j.dump(indent);
}

std::string density_report_to_json(const DensityReport& rep, int indent) {
    json j{{"r_grid", rep.r_grid},
           {"tail_values", rep.tail_values},
           {"ratio_values", rep.ratio_values},
           {"limsup_estimate", rep.limsup_estimate}};
    return j.dump(indent);
}

std::string exceptional_report_to_json(const ExceptionalCReport& rep, int indent) {
    json intervals = json::array();
    for (const auto& iv : rep.c_set.intervals()) intervals.push_back(json::array({iv.lo, iv.hi}));
    json j{{"measure", rep.measure},       {"bound", rep.bound},
           {"satisfied", rep.satisfied},   {"partial", rep.partial},
           {"excluded", rep.excluded},     {"sum_of_widths", rep.sum_of_widths},
           {"intervals", std::move(intervals)}};
    return j.dump(indent);
}

std::string bound_report_to_json(const BoundReport& rep, int indent) {
    json samples = json::array();
    for (const BoundSample& s : rep.samples)
        samples.push_back(json{{"re", s.z.real()},
                               {"im", s.z.imag()},
                               {"lhs", s.lhs},
                               {"rhs", s.rhs},
                               {"ratio", s.ratio},
                               {"inner_lhs", s.inner_lhs},
                               {"inner_rhs", s.inner_rhs},
                               {"inner_ok", s.inner_ok}});
    json j{{"empirical_C", rep.empirical_c},
           {"empirical_C_first_half", rep.empirical_c_first_half},
           {"stability", rep.stability},
           {"inner_violations", rep.inner_violations},
           {"rejected", rep.rejected},
           {"experimental_j_path", rep.experimental_j_path},
           {"characteristic_note", rep.characteristic_note},
           {"samples", std::move(samples)}};
    return j.dump(indent);
}

std::string avoidance_report_to_json(const AvoidanceReport& rep, int indent) {
    json j{{"R", rep.R},
           {"R_index", rep.R_index},
           {"hypothesis_ok", rep.hypothesis_ok},
           {"density_limsup", rep.density_limsup},
           {"density_trajectory", rep.density_trajectory},
           {"violations", rep.violations},
           {"unevaluable", rep.unevaluable},
           {"nonempty_step_ok", rep.nonempty_step_ok},
           {"interval_step_ok", rep.interval_step_ok},
           {"passed", rep.passed}};
    return j.dump(indent);
}

std::string cartan_to_json(const CartanConstruction& con, int indent) {
    json annuli = json::array();
    for (const CartanAnnulus& a : con.annuli) {
        json discs = json::array();
        for (const Disc& d : a.discs)
            discs.push_back(
                json{{"re", d.center.real()}, {"im", d.center.imag()}, {"r", d.radius}});
        annuli.push_back(json{
            {"nu", a.nu}, {"mu", a.mu}, {"d_nu", a.d_nu}, {"discs", std::move(discs)}});
    }
    json j{{"ambient", ambient_name(con.ambient)},
           {"alpha", con.alpha},
           {"gauge", gauge_to_json_obj(con.gauge)},
           {"j", con.j},
           {"nu0", con.nu0},
           {"nu_end", con.nu_end},
           {"l_exponent", con.l_exponent},
           {"inner_exclusion_radius", con.inner_exclusion_radius},
           {"annuli", std::move(annuli)}};
    if (con.ambient == Ambient::UnitDisc) j["b"] = con.b;
    return j.dump(indent);
}

std::string error_to_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}}.dump(2);
}

}  // namespace esetlab
