// esetlab: batch experiment runner for gauge-curve / disc-collection
// geometry. One experiment = one config = one output directory; outputs are
// byte-identical for identical configs and seeds.
//
// Exit codes: 0 pass, 2 bound or invariant violation, 3 invalid input,
// 4 internal numeric failure.

#include <esetlab/errors.hpp>
#include <esetlab/experiments.hpp>
#include <esetlab/json_io.hpp>
#include <esetlab/rng.hpp>
#include <esetlab/svg_report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

namespace {

using namespace esetlab;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitNumericFailure = 4;

struct Settings {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::string format = "json";
    bool svg = false;
    json config = json::object();

    json section(const std::string& name) const {
        if (config.contains(name) && config.at(name).is_object()) return config.at(name);
        return json::object();
    }
    fs::path resolve_out() const {
        if (!out_dir.empty()) return out_dir;
        if (config.contains("out")) return config.at("out").get<std::string>();
        if (const char* env = std::getenv("ESETLAB_OUT")) return env;
        return "esetlab_out";
    }
    std::uint64_t resolve_seed(const json& sec, std::uint64_t fallback) const {
        if (seed) return *seed;  // --seed overrides any config
        if (sec.contains("seed")) return sec.at("seed").get<std::uint64_t>();
        if (config.contains("seed")) return config.at("seed").get<std::uint64_t>();
        return fallback;
    }
};

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open for writing: " + path.string());
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read: " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Gauge gauge_from_cli(const std::string& kind, double param) {
    if (kind == "plane_concave_identity") return Gauge::plane_identity();
    if (kind == "plane_concave_power") return Gauge::plane_power(param);
    if (kind == "plane_concave_log") return Gauge::plane_log(param > 1.0 ? param : 1.1);
    if (kind == "plane_constant") return Gauge::plane_constant(param > 0.0 ? param : 1.0);
    if (kind == "plane_convex_power") return Gauge::plane_convex_power(param);
    if (kind == "plane_rapid_power") return Gauge::plane_rapid_power(param);
    if (kind == "plane_rapid_xlog") return Gauge::plane_rapid_xlog();
    if (kind == "unit_concave_power") return Gauge::unit_concave_power(param);
    if (kind == "unit_convex_power") return Gauge::unit_convex_power(param);
    if (kind == "unit_stolz_power") return Gauge::unit_stolz_power(param);
    throw InvalidInput("unknown gauge kind: " + kind);
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int cmd_generate(const Settings& st, const std::string& type, int levels, int n_max, int k_max,
                 int count, double epsilon, double envelope_m, const std::string& gauge_kind,
                 double gauge_param, const std::string& ambient_str) {
    const json sec = st.section("generate");
    DiscCollection col;
    if (type == "example1") {
        col = gen_example1(n_max, k_max);
    } else if (type == "example2") {
        col = gen_example2(n_max, k_max);
    } else if (type == "cantor") {
        std::optional<std::uint64_t> cantor_seed;
        if (st.seed) cantor_seed = st.seed;
        col = gen_cantor_rset(levels, cantor_seed);
    } else if (type == "horocycle") {
        col = gen_horocycle_lset(n_max);
    } else if (type == "random") {
        RandomSetParams params;
        params.ambient = ambient_str == "unit_disc" ? Ambient::UnitDisc : Ambient::Plane;
        params.gauge = gauge_from_cli(gauge_kind, gauge_param);
        params.count = count;
        params.epsilon = epsilon;
        params.envelope_m = envelope_m;
        params.seed = st.resolve_seed(sec, 7);
        col = gen_random(params);
    } else {
        throw InvalidInput("unknown generator: " + type);
    }

    const fs::path out = st.resolve_out();
    write_file(out / (type + ".json"), collection_to_json(col));
    if (st.format == "csv") write_file(out / (type + ".csv"), collection_to_csv(col));
    std::printf("%s: %zu discs, diameter sum %s -> %s\n", type.c_str(), col.discs.size(),
                fmt_double(col.diameter_sum()).c_str(), (out / (type + ".json")).c_str());
    return kExitPass;
}

int cmd_validate(const Settings& st, const std::string& in_path) {
    const DiscCollection col = collection_from_json(read_file(in_path));
    const ValidationReport rep = validate(col);
    const std::string payload = validation_to_json(rep);
    std::printf("%s\n", payload.c_str());
    const fs::path out = st.resolve_out();
    write_file(out / "validation.json", payload);
    return rep.valid ? kExitPass : kExitViolation;
}

int cmd_intersect(const Settings& st, const std::string& in_path, double phi, double c,
                  double zeta_arg, const std::string& branch_str) {
    const DiscCollection col = collection_from_json(read_file(in_path));
    CurveFamily fam;
    fam.gauge = col.gauge;
    fam.phi = phi;
    fam.zeta = std::polar(1.0, zeta_arg);
    fam.c = c;
    fam.branch = branch_str == "lower" ? Branch::Lower
                                       : (branch_str == "both" ? Branch::Both : Branch::Upper);
    json rows = json::array();
    long hits = 0;
    for (std::size_t n = 0; n < col.discs.size(); ++n) {
        const MeetResult res = meets(fam, col.discs[n]);
        hits += res.hit() ? 1 : 0;
        rows.push_back(json{{"disc_index", n},
                            {"hit", res.hit()},
                            {"band", res.in_band()},
                            {"min_distance", res.min_distance},
                            {"t_at_min", res.t_at_min}});
    }
    const json payload{{"c", c}, {"phi", phi}, {"hits", hits}, {"rows", rows}};
    std::printf("hits: %ld / %zu\n", hits, col.discs.size());
    write_file(st.resolve_out() / "intersect.json", payload.dump(2));
    return kExitPass;
}

int cmd_cinterval(const Settings& st, const std::string& in_path, double phi, double zeta_arg) {
    const DiscCollection col = collection_from_json(read_file(in_path));
    std::vector<CIntervalReport> rows;
    IntervalUnion c_union;
    for (std::size_t n = 0; n < col.discs.size(); ++n) {
        try {
            CIntervalReport rep =
                col.ambient == Ambient::Plane
                    ? c_interval(col.gauge, phi, col.discs[n])
                    : c_interval(col.gauge, std::polar(1.0, zeta_arg), col.discs[n]);
            rep.disc_index = n;
            if (!rep.empty && rep.c_hi > std::max(rep.c_lo, 0.0))
                c_union.insert(std::max(rep.c_lo, 0.0), rep.c_hi);
            rows.push_back(rep);
        } catch (const PartialDomain&) {
            // skipped: disc not strictly inside the curve domain
        }
    }
    const fs::path out = st.resolve_out();
    write_file(out / "cinterval.csv", c_interval_rows_to_csv(rows));
    if (st.svg && !c_union.empty()) {
        const double lo = c_union.intervals().front().lo;
        const double hi = c_union.intervals().back().hi;
        write_file(out / "cinterval.svg",
                   render_strip_plot(c_union, lo, hi, "curve-parameter intervals"));
    }
    std::printf("%zu rows, union measure %s -> %s\n", rows.size(),
                fmt_double(c_union.measure()).c_str(), (out / "cinterval.csv").c_str());
    return kExitPass;
}

int cmd_measure(const Settings& st, const std::string& in_path,
                const std::vector<std::string>& interval_args, const std::string& gauge_kind,
                double gauge_param) {
    if (!interval_args.empty()) {
        // Standalone mode: integrate 1/gauge over explicit intervals.
        const Gauge gauge = gauge_from_cli(gauge_kind, gauge_param);
        IntervalUnion E;
        for (const std::string& arg : interval_args) {
            const auto comma = arg.find(',');
            if (comma == std::string::npos)
                throw InvalidInput("--interval expects lo,hi");
            E.insert(std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1)));
        }
        const GaugeIntegralResult res = gauge_integral(E, gauge);
        std::printf("%s\n", fmt_double(res.value).c_str());
        return res.converged ? kExitPass : kExitNumericFailure;
    }
    const DiscCollection col = collection_from_json(read_file(in_path));
    const IntervalUnion E = projection(col);
    const GaugeIntegralResult integral = gauge_integral(E, col.gauge);
    const ProjectionBoundReport chain = projection_bound_check(col);
    const json payload{{"projection_measure", E.measure()},
                       {"gauge_integral", integral.value},
                       {"lower_bound_only", integral.lower_bound_only},
                       {"head_integral", chain.head_integral},
                       {"tail_integral", chain.tail_integral},
                       {"tail_bound", chain.tail_bound},
                       {"tail_bound_satisfied", chain.satisfied}};
    std::printf("%s\n", payload.dump(2).c_str());
    write_file(st.resolve_out() / "measure.json", payload.dump(2));
    return chain.satisfied ? kExitPass : kExitViolation;
}

int cmd_verify(const Settings& st, const std::string& theorem) {
    const json sec = st.section("verify");
    const fs::path out = st.resolve_out();
    bool passed = false;
    json payload;

    if (theorem == "1") {
        const auto r = experiments::run_concave_plane(
            st.resolve_seed(sec, 7), sec.value("count", 500), sec.value("epsilon", 1e-3),
            sec.value("samples", 10000L));
        passed = r.passed;
        payload = json{{"experiment", "concave_plane"},
                       {"exceptional_measure", r.exceptional.measure},
                       {"bound", r.exceptional.bound},
                       {"width_violations", r.width_violations},
                       {"mc_fraction", r.monte_carlo.fraction},
                       {"mc_cap", r.monte_carlo.p_bound + r.monte_carlo.slack},
                       {"passed", passed}};
        write_file(out / "theorem1_hits.json", hit_report_to_json(r.monte_carlo));
        write_file(out / "theorem1_exceptional.json",
                   exceptional_report_to_json(r.exceptional));
        if (st.svg)
            write_file(out / "theorem1_cset.svg",
                       render_strip_plot(r.exceptional.c_set, 0.1, 10.0, "exceptional c-set"));
    } else if (theorem == "2") {
        const auto r = experiments::run_convex_plane(st.resolve_seed(sec, 11),
                                                     sec.value("count", 500),
                                                     sec.value("epsilon", 1e-3));
        passed = r.passed;
        payload = json{{"experiment", "convex_plane"},
                       {"exceptional_measure", r.exceptional.measure},
                       {"bound", r.exceptional.bound},
                       {"width_violations", r.width_violations},
                       {"passed", passed}};
        write_file(out / "theorem2_exceptional.json",
                   exceptional_report_to_json(r.exceptional));
    } else if (theorem == "2.5") {
        const auto r =
            experiments::run_rapid_plane(st.resolve_seed(sec, 13), sec.value("count", 400));
        passed = r.passed;
        payload = json{{"experiment", "rapid_plane"},
                       {"initial_envelope", r.trend.initial_envelope},
                       {"final_envelope", r.trend.final_envelope},
                       {"failures", r.trend.failures.size()},
                       {"note", TrendReport::kSurrogateNote},
                       {"passed", passed}};
    } else if (theorem == "3") {
        const auto r = experiments::run_horocycle(sec.value("n_max", 100000));
        passed = r.passed;
        payload = json{{"experiment", "horocycle"},
                       {"ratio_at_n_max", r.ratio_at_nmax},
                       {"partial_sum", r.partial_sum},
                       {"last_increment", r.last_increment},
                       {"passed", passed}};
    } else if (theorem == "4") {
        const auto r =
            experiments::run_unit_convex(st.resolve_seed(sec, 17), sec.value("count", 300));
        passed = r.passed;
        payload = json{{"experiment", "unit_convex"},
                       {"initial_envelope", r.initial_envelope},
                       {"final_envelope", r.final_envelope},
                       {"note", TrendReport::kSurrogateNote},
                       {"passed", passed}};
    } else if (theorem == "stolz") {
        const auto g1 = experiments::run_stolz(1.0, st.resolve_seed(sec, 19),
                                               sec.value("count", 200));
        const auto g2 = experiments::run_stolz(2.0, st.resolve_seed(sec, 19),
                                               sec.value("count", 200));
        passed = g1.passed && g2.passed;
        payload = json{{"experiment", "stolz"},
                       {"gamma1_violations", g1.violations},
                       {"gamma2_violations", g2.violations},
                       {"comparability", g1.k_comparability},
                       {"passed", passed}};
    } else {
        throw InvalidInput("unknown theorem id: " + theorem +
                           " (expected 1, 2, 2.5, 3, 4 or stolz)");
    }
    std::printf("%s\n", payload.dump(2).c_str());
    write_file(out / ("verify_" + theorem + ".json"), payload.dump(2));
    return passed ? kExitPass : kExitViolation;
}

int cmd_cartan(const Settings& st, int mu, double d) {
    const json sec = st.section("cartan");
    std::mt19937_64 eng(st.resolve_seed(sec, 23));
    std::vector<Complex> points(static_cast<std::size_t>(mu));
    for (Complex& p : points)
        p = Complex(uniform_in(eng, -5.0, 5.0), uniform_in(eng, -5.0, 5.0));
    const std::vector<Disc> discs = cartan_discs(points, d);
    double radii = 0.0;
    json disc_rows = json::array();
    for (const Disc& disc : discs) {
        radii += disc.radius;
        disc_rows.push_back(json{{"re", disc.center.real()},
                                 {"im", disc.center.imag()},
                                 {"r", disc.radius}});
    }
    const bool ok = radii <= 2.0 * d * (1.0 + 1e-9);
    const json payload{{"mu", mu},       {"d", d},           {"radii_sum", radii},
                       {"budget", 2 * d}, {"within_budget", ok}, {"discs", disc_rows}};
    std::printf("%s\n", payload.dump(2).c_str());
    write_file(st.resolve_out() / "cartan.json", payload.dump(2));
    return ok ? kExitPass : kExitViolation;
}

int run_bound_experiment(const Settings& st, const std::string& which) {
    const json sec = st.section(which);
    const long samples = sec.value("samples", 10000L);
    experiments::LogDerivResult r;
    if (which == "logderiv")
        r = experiments::run_logderiv(st.resolve_seed(sec, 29), sec.value("zeros", 100),
                                      samples);
    else if (which == "logdiff")
        r = experiments::run_logdiff(st.resolve_seed(sec, 31), samples);
    else
        r = experiments::run_logderiv_disc(samples);

    const fs::path out = st.resolve_out();
    write_file(out / (which + "_report.json"), bound_report_to_json(r.report));
    const json payload{{"experiment", which},
                       {"inner_violations", r.report.inner_violations},
                       {"empirical_C", r.report.empirical_c},
                       {"stability", r.report.stability},
                       {"tail_sum", r.construction_check.tail_sum},
                       {"tail_bound", r.construction_check.tail_bound},
                       {"passed", r.passed}};
    std::printf("%s\n", payload.dump(2).c_str());
    write_file(out / (which + ".json"), payload.dump(2));
    return r.passed ? kExitPass : kExitViolation;
}

int cmd_avoidance(const Settings& st) {
    const experiments::AvoidanceResult r = experiments::run_avoidance();
    const fs::path out = st.resolve_out();
    write_file(out / "avoidance_plane.json", avoidance_report_to_json(r.plane));
    write_file(out / "avoidance_unit.json", avoidance_report_to_json(r.unit));
    std::printf("plane R=%s unit R=%s passed=%s\n", fmt_double(r.plane.R).c_str(),
                fmt_double(r.unit.R).c_str(), r.passed ? "true" : "false");
    return r.passed ? kExitPass : kExitViolation;
}

int cmd_figures(const Settings& st) {
    const fs::path out = st.resolve_out();
    for (int which = 1; which <= 5; ++which) {
        char name[16];
        std::snprintf(name, sizeof(name), "fig%d.svg", which);
        write_file(out / name, render_figure(which));
    }
    std::printf("wrote fig1.svg .. fig5.svg under %s\n", out.c_str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge-curve and disc-collection experiment runner"};
    app.require_subcommand(1);

    Settings st;
    app.add_option("--config", st.config_path, "JSON experiment config");
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt =
        app.add_option("--seed", seed_value, "override the experiment seed");
    app.add_option("--out", st.out_dir, "output directory (or ESETLAB_OUT)");
    app.add_option("--format", st.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--svg", st.svg, "also emit SVG plots");

    // generate
    auto* gen = app.add_subcommand("generate", "construct a disc collection");
    std::string gen_type;
    gen->add_option("type", gen_type, "example1|example2|cantor|horocycle|random")
        ->required();
    int levels = 12, n_max = 20, k_max = 20, count = 500;
    double epsilon = 1e-3, envelope_m = 1.0, gauge_param = 0.5;
    std::string gauge_kind = "plane_concave_power", ambient_str = "plane";
    gen->add_option("--levels", levels, "ternary-cover levels");
    gen->add_option("--n-max", n_max, "outer index bound");
    gen->add_option("--k-max", k_max, "inner index bound");
    gen->add_option("--count", count, "disc count for random sets");
    gen->add_option("--epsilon", epsilon, "declared tail budget");
    gen->add_option("--envelope-m", envelope_m, "slope envelope / aperture");
    gen->add_option("--gauge-kind", gauge_kind, "gauge catalog kind");
    gen->add_option("--gauge-param", gauge_param, "gauge parameter");
    gen->add_option("--ambient", ambient_str, "plane or unit_disc")
        ->check(CLI::IsMember({"plane", "unit_disc"}));

    // validate
    auto* val = app.add_subcommand("validate", "check collection invariants");
    std::string in_path;
    val->add_option("--in", in_path, "collection JSON")->required();

    // intersect
    auto* inter = app.add_subcommand("intersect", "single curve vs collection");
    std::string inter_in, branch_str = "upper";
    double phi = 0.0, c_value = 1.0, zeta_arg = 0.0;
    inter->add_option("--in", inter_in, "collection JSON")->required();
    inter->add_option("--phi", phi, "plane rotation");
    inter->add_option("--c", c_value, "curve parameter")->required();
    inter->add_option("--zeta-arg", zeta_arg, "boundary point argument (unit disc)");
    inter->add_option("--branch", branch_str, "upper|lower|both")
        ->check(CLI::IsMember({"upper", "lower", "both"}));

    // cinterval
    auto* cint = app.add_subcommand("cinterval", "per-disc parameter intervals");
    std::string cint_in;
    double cint_phi = 0.0, cint_zeta_arg = 0.0;
    cint->add_option("--in", cint_in, "collection JSON")->required();
    cint->add_option("--phi", cint_phi, "plane rotation");
    cint->add_option("--zeta-arg", cint_zeta_arg, "boundary point argument");

    // measure
    auto* meas = app.add_subcommand("measure", "projection and gauge integral");
    std::string meas_in;
    std::vector<std::string> meas_intervals;
    std::string meas_gauge_kind = "plane_concave_identity";
    double meas_gauge_param = 0.5;
    meas->add_option("--in", meas_in, "collection JSON");
    meas->add_option("--interval", meas_intervals, "explicit interval lo,hi (repeatable)");
    meas->add_option("--gauge-kind", meas_gauge_kind, "gauge for explicit intervals");
    meas->add_option("--gauge-param", meas_gauge_param, "gauge parameter");

    // verify
    auto* ver = app.add_subcommand("verify", "run a full verification experiment");
    std::string theorem;
    ver->add_option("--theorem", theorem, "1|2|2.5|3|4|stolz")->required();

    // cartan
    auto* car = app.add_subcommand("cartan", "seeded exceptional-disc instance");
    int mu = 25;
    double cartan_d = 1.0;
    car->add_option("--mu", mu, "point count");
    car->add_option("--d", cartan_d, "budget parameter");

    auto* logderiv = app.add_subcommand("logderiv", "plane derivative-quotient experiment");
    auto* logdiff = app.add_subcommand("logdiff", "difference experiment");
    auto* logderiv_disc =
        app.add_subcommand("logderiv-disc", "unit-disc derivative-quotient experiment");
    auto* avoid = app.add_subcommand("avoidance", "dilation-avoidance instances");
    auto* figs = app.add_subcommand("figures", "render the standard panels");

    try {
        app.parse(argc, argv);
        if (!st.config_path.empty()) st.config = json::parse(read_file(st.config_path));
        if (seed_opt->count() > 0) st.seed = seed_value;

        if (gen->parsed())
            return cmd_generate(st, gen_type, levels, n_max, k_max, count, epsilon, envelope_m,
                                gauge_kind, gauge_param, ambient_str);
        if (val->parsed()) return cmd_validate(st, in_path);
        if (inter->parsed())
            return cmd_intersect(st, inter_in, phi, c_value, zeta_arg, branch_str);
        if (cint->parsed()) return cmd_cinterval(st, cint_in, cint_phi, cint_zeta_arg);
        if (meas->parsed())
            return cmd_measure(st, meas_in, meas_intervals, meas_gauge_kind, meas_gauge_param);
        if (ver->parsed()) return cmd_verify(st, theorem);
        if (car->parsed()) return cmd_cartan(st, mu, cartan_d);
        if (logderiv->parsed()) return run_bound_experiment(st, "logderiv");
        if (logdiff->parsed()) return run_bound_experiment(st, "logdiff");
        if (logderiv_disc->parsed()) return run_bound_experiment(st, "logderiv-disc");
        if (avoid->parsed()) return cmd_avoidance(st);
        if (figs->parsed()) return cmd_figures(st);
        return kExitInvalidInput;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const NumericFailure& e) {
        std::fprintf(stderr, "%s\n", error_to_json("numeric_failure", e.what()).c_str());
        return kExitNumericFailure;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", error_to_json("invalid_input", e.what()).c_str());
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", error_to_json("internal", e.what()).c_str());
        return kExitNumericFailure;
    }
}
