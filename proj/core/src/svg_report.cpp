#include <esetlab/svg_report.hpp>

#include <esetlab/errors.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace esetlab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Canvas {
    Canvas(double xl, double xh, double yl, double yh)
        : x_lo(xl), x_hi(xh), y_lo(yl), y_hi(yh) {}
    double x_lo, x_hi, y_lo, y_hi;
    double width = 640.0, height = 480.0, margin = 40.0;
    std::string body;

    double px(double x) const {
        return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin);
    }
    double py(double y) const {
        return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke) {
        body += "<line x1=\"" + num(px(x1)) + "\" y1=\"" + num(py(y1)) + "\" x2=\"" +
                num(px(x2)) + "\" y2=\"" + num(py(y2)) + "\" stroke=\"" + stroke +
                "\" stroke-width=\"1\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
        if (pts.size() < 2) return;
        body += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) body += num(px(x)) + ',' + num(py(y)) + ' ';
        body += "\"/>\n";
    }
    void circle(double x, double y, double r_world, bool hit) {
        const double r_px = r_world / (x_hi - x_lo) * (width - 2 * margin);
        body += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"" +
                num(r_px) + "\" ";
        if (hit)
            body += "fill=\"#d33\" fill-opacity=\"0.45\" stroke=\"#a00\"";
        else
            body += "fill=\"none\" stroke=\"#36c\"";
        body += " stroke-width=\"1\"/>\n";
    }
    void text(double x, double y, const std::string& s) {
        body += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) +
                "\" font-size=\"12\" font-family=\"sans-serif\">" + s + "</text>\n";
    }
    std::string finish(const std::string& title) const {
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) +
                          ' ' + num(height) + "\">\n";
        out += "<title>" + title + "</title>\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

std::vector<std::pair<double, double>> plane_curve_points(const Gauge& g, double c, double x_lo,
                                                          double x_hi) {
    std::vector<std::pair<double, double>> pts;
    const int n = 160;
    const double start = std::max(x_lo, g.curve_domain_start() + 1e-9);
    for (int i = 0; i <= n; ++i) {
        const double x = start + (x_hi - start) * i / n;
        pts.emplace_back(x, c * g.eval(x));
    }
    return pts;
}

std::vector<std::pair<double, double>> unit_curve_points(const Gauge& g, double c) {
    std::vector<std::pair<double, double>> pts;
    const CurveFamily fam{g, 0.0, Complex(1.0, 0.0), c, Branch::Upper};
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
        const double t = 0.05 + (0.999 - 0.05) * i / n;
        if (const std::optional<Complex> z = boundary_point(fam, t))
            pts.emplace_back(z->real(), z->imag());
    }
    return pts;
}

std::string plane_figure(const Gauge& g, double c1, double c2, double x_lo, double x_hi,
                         double y_hi, const std::string& title) {
    Canvas cv{x_lo, x_hi, -0.5, y_hi};
    cv.line(x_lo, 0.0, x_hi, 0.0, "#888");
    if (x_lo < 0.0) cv.line(0.0, -0.5, 0.0, y_hi, "#888");
    cv.polyline(plane_curve_points(g, c1, x_lo, x_hi), "#222");
    cv.polyline(plane_curve_points(g, c2, x_lo, x_hi), "#222");

    const double c_mid = 0.5 * (c1 + c2);
    const CurveFamily fam{g, 0.0, Complex(1.0, 0.0), c_mid, Branch::Upper};
    const double start = std::max(x_lo + 0.15 * (x_hi - x_lo), g.curve_domain_start() + 0.2);
    for (int i = 0; i < 6; ++i) {
        const double x = start + (x_hi - 0.08 * (x_hi - x_lo) - start) * i / 5.0;
        const double offset = (i % 2 == 0) ? 1.0 : 1.6;  // alternate on/off the mid curve
        const double y = c_mid * g.eval(x) * offset;
        const double r = 0.035 * (x_hi - x_lo);
        const Disc d{Complex(x, y), r};
        cv.circle(x, y, r, meets(fam, d).hit());
    }
    cv.text(x_lo + 0.03 * (x_hi - x_lo), y_hi * 0.95, title);
    return cv.finish(title);
}

std::string unit_figure(const Gauge& g, double c1, double c2, const std::string& title) {
    Canvas cv{-1.3, 1.3, -1.05, 1.1};
    std::vector<std::pair<double, double>> circle_pts;
    for (int i = 0; i <= 256; ++i) {
        const double th = 2.0 * 3.141592653589793 * i / 256;
        circle_pts.emplace_back(std::cos(th), std::sin(th));
    }
    cv.polyline(circle_pts, "#888");
    cv.polyline(unit_curve_points(g, c1), "#222");
    cv.polyline(unit_curve_points(g, c2), "#222");

    const double c_mid = 0.5 * (c1 + c2);
    const CurveFamily fam{g, 0.0, Complex(1.0, 0.0), c_mid, Branch::Upper};
    for (int i = 0; i < 6; ++i) {
        const double t = 0.55 + 0.07 * i;
        Disc d{Complex(), 0.03};
        const CurveFamily probe{g, 0.0, Complex(1.0, 0.0),
                                (i % 2 == 0) ? c_mid : c_mid * 1.8, Branch::Upper};
        if (const std::optional<Complex> z = boundary_point(probe, t)) {
            d.center = *z;
            cv.circle(d.center.real(), d.center.imag(), d.radius, meets(fam, d).hit());
        }
    }
    cv.text(-1.25, 1.0, title);
    return cv.finish(title);
}

}  // namespace

std::string render_strip_plot(const IntervalUnion& set, double lo, double hi,
                              const std::string& title) {
    if (!(hi > lo)) throw InvalidInput("render_strip_plot: empty range");
    Canvas cv{lo, hi, 0.0, 1.0};
    cv.height = 120.0;
    cv.line(lo, 0.5, hi, 0.5, "#888");
    for (const auto& iv : set.intervals()) {
        const double a = std::max(iv.lo, lo);
        const double b = std::min(iv.hi, hi);
        if (!(a < b)) continue;
        cv.body += "<rect x=\"" + num(cv.px(a)) + "\" y=\"" + num(cv.py(0.75)) + "\" width=\"" +
                   num(cv.px(b) - cv.px(a)) + "\" height=\"" + num(cv.py(0.25) - cv.py(0.75)) +
                   "\" fill=\"#d33\" fill-opacity=\"0.6\"/>\n";
    }
    cv.text(lo, 0.93, title);
    return cv.finish(title);
}

std::string render_figure(int which) {
    switch (which) {
        case 1:
            return plane_figure(Gauge::plane_log(), 1.0, 2.0, 1.0, 9.0, 5.0,
                                "concave curves y = c K(x), K = log");
        case 2:
            return plane_figure(Gauge::plane_convex_power(1.0), 1.15, 6.1, 0.25, 5.0, 5.0,
                                "convex curves y = c L(x), L = 1/x");
        case 3:
            return plane_figure(Gauge::plane_constant(1.0), 1.52, 2.48, 0.0, 4.0, 4.0,
                                "constant case: lines y = c");
        case 4:
            return unit_figure(Gauge::unit_concave_power(0.5), 0.6, 1.4,
                               "tangential curves, l = sqrt");
        case 5:
            return unit_figure(Gauge::unit_convex_power(2.0), 4.0, 10.0,
                               "zero-angle curves, k = x^2");
        default:
            throw InvalidInput("render_figure: figure index must be 1..5");
    }
}

}  // namespace esetlab
