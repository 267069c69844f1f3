#include <esetlab/cartan.hpp>

#include <esetlab/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace esetlab {

namespace {

constexpr double kCoverTol = 1e-12;

// Largest number of points of `pts` coverable by a closed disc of radius
// rho, with a witness center. An optimal disc can be slid until its boundary
// passes through two points (or it is centered at a point), so those are the
// only candidate centers that need checking.
struct BestDisc {
    Complex center;
    long covered = 0;
};

long covered_by(const std::vector<Complex>& pts, const Complex& center, double rho) {
    const double limit = rho * (1.0 + kCoverTol) + 1e-300;
    long n = 0;
    for (const Complex& p : pts)
        if (std::abs(p - center) <= limit) ++n;
    return n;
}

BestDisc best_disc(const std::vector<Complex>& pts, double rho) {
    BestDisc best{pts.front(), 0};
    for (const Complex& p : pts) {
        const long n = covered_by(pts, p, rho);
        if (n > best.covered) best = {p, n};
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Complex mid = 0.5 * (pts[i] + pts[j]);
            const Complex diff = pts[j] - pts[i];
            const double half = 0.5 * std::abs(diff);
            if (half > rho * (1.0 + kCoverTol)) continue;
            const double h = std::sqrt(std::max(rho * rho - half * half, 0.0));
            const Complex unit = half > 0.0 ? diff / (2.0 * half) : Complex(1.0, 0.0);
            const Complex normal(-unit.imag(), unit.real());
            for (const Complex& center : {mid + h * normal, mid - h * normal}) {
                const long n = covered_by(pts, center, rho);
                if (n > best.covered) best = {center, n};
            }
        }
    }
    return best;
}

}  // namespace

std::vector<Disc> cartan_discs(std::span<const Complex> points, double d) {
    if (points.empty()) throw InvalidInput("cartan_discs: points must be nonempty");
    if (!(d > 0.0)) throw InvalidInput("cartan_discs: d must be positive");

    const double mu = static_cast<double>(points.size());
    std::vector<Complex> remaining(points.begin(), points.end());
    std::vector<Disc> out;
    // The feasible lambda can only shrink as points are removed, so each
    // scan resumes from the previous level.
    long lambda_cap = static_cast<long>(points.size());
    while (!remaining.empty()) {
        lambda_cap = std::min<long>(lambda_cap, static_cast<long>(remaining.size()));
        long lambda = lambda_cap;
        BestDisc chosen;
        for (; lambda >= 1; --lambda) {
            const double rho = static_cast<double>(lambda) * d / mu;
            chosen = best_disc(remaining, rho);
            if (chosen.covered >= lambda) break;
        }
        lambda_cap = lambda;
        const double rho = static_cast<double>(lambda) * d / mu;
        out.push_back({chosen.center, 2.0 * rho});
        const double limit = rho * (1.0 + kCoverTol) + 1e-300;
        std::erase_if(remaining,
                      [&](const Complex& p) { return std::abs(p - chosen.center) <= limit; });
    }
    return out;
}

namespace {

bool disc_meets_ring(const Disc& d, double inner, double outer) {
    const double s = std::abs(d.center);
    return s + d.radius >= inner && s - d.radius < outer;
}

}  // namespace

std::vector<Disc> CartanConstruction::retained_discs() const {
    std::vector<Disc> out;
    for (const CartanAnnulus& a : annuli) out.insert(out.end(), a.discs.begin(), a.discs.end());
    return out;
}

bool CartanConstruction::excluded(const Complex& z) const {
    if (std::abs(z) <= inner_exclusion_radius) return true;
    for (const CartanAnnulus& a : annuli)
        for (const Disc& d : a.discs)
            if (std::abs(z - d.center) <= d.radius) return true;
    return false;
}

DiscCollection CartanConstruction::as_collection() const {
    std::vector<Disc> discs = retained_discs();
    double sum = 0.0;
    for (const Disc& d : discs) {
        const double size = size_coordinate(ambient, d.center);
        sum += d.radius / gauge.eval(size);
    }
    return make_collection(ambient, gauge, std::move(discs), std::max(sum, 1e-12) * 1.01 + 1e-12,
                           0);
}

CartanConstruction build_exceptional_set(const RationalFunction& f, int j, double alpha,
                                         const Gauge& gauge, Ambient ambient,
                                         std::optional<double> b_opt) {
    if (!(alpha > 1.0)) throw InvalidInput("build_exceptional_set: alpha > 1");
    if (ambient == Ambient::UnitDisc && (!b_opt || !(*b_opt > 0.0 && *b_opt < 1.0)))
        throw InvalidInput("build_exceptional_set: unit disc needs b in (0,1)");
    if (gauge.ambient() != ambient)
        throw InvalidInput("build_exceptional_set: gauge/ambient mismatch");

    CartanConstruction con;
    con.ambient = ambient;
    con.alpha = alpha;
    con.b = b_opt.value_or(0.0);
    con.gauge = gauge;
    con.j = j;

    con.l_exponent = 1;
    while (std::exp2(con.l_exponent) < alpha) ++con.l_exponent;

    const std::vector<Complex> all_points = f.multiplicity_expanded_points(j);
    const long total = static_cast<long>(all_points.size());
    double max_mod = 0.0;
    for (const Complex& p : all_points) max_mod = std::max(max_mod, std::abs(p));

    const bool unit = ambient == Ambient::UnitDisc;
    const double b = con.b;

    auto d_of = [&](int nu) {
        if (unit)
            return gauge.eval(std::pow(b, nu)) /
                   (std::pow(nu, alpha) * std::pow(-std::log(b), alpha));
        return gauge.eval(std::pow(alpha, nu)) / std::pow(nu * std::log(alpha), alpha);
    };
    auto mu_of = [&](int nu) {
        const double cut = unit ? 1.0 - std::pow(b, nu + 2) : std::pow(alpha, nu + 2);
        long n = 0;
        for (const Complex& p : all_points)
            if (std::abs(p) <= cut) ++n;
        return n;
    };
    auto conditions_hold = [&](int nu) {
        const double d_nu = d_of(nu);
        if (unit) {
            const double bn1 = std::pow(b, nu + 1);
            if (!(4.0 * d_nu < bn1)) return false;
            if (!(bn1 < 1.0 - std::pow(b, nu))) return false;
            if (total >= 3 && !(mu_of(nu) >= 3)) return false;  // log mu_nu >= 1
            return true;
        }
        const double an = std::pow(alpha, nu);
        if (!(an > 4.0 * d_nu)) return false;
        // Doubling is applied at alpha^nu / 2 and down to alpha^(nu+1)/2^l.
        if (!(an / 2.0 >= gauge.r_threshold())) return false;
        if (!(an * alpha / std::exp2(con.l_exponent) >= gauge.r_threshold())) return false;
        return true;
    };

    // Smallest nu0 from which the side conditions hold through the active
    // range (they are monotone once d_nu / alpha^nu decays).
    constexpr int kNuCap = 400;
    int nu0 = -1;
    for (int nu = 1; nu <= kNuCap; ++nu) {
        if (conditions_hold(nu)) {
            nu0 = nu;
            break;
        }
    }
    if (nu0 < 0) throw NumericFailure("build_exceptional_set: no admissible nu0 found");
    con.nu0 = nu0;
    con.inner_exclusion_radius = unit ? 1.0 - std::pow(b, nu0) : std::pow(alpha, nu0);

    int consecutive_empty = 0;
    int nu = nu0;
    for (; nu <= kNuCap && consecutive_empty < 3; ++nu) {
        if (!conditions_hold(nu))
            throw NumericFailure("build_exceptional_set: side condition lost above nu0");
        const double d_nu = d_of(nu);
        const double inner = unit ? 1.0 - std::pow(b, nu) : std::pow(alpha, nu);
        const double outer = unit ? 1.0 - std::pow(b, nu + 1) : std::pow(alpha, nu + 1);
        // No disc of this run can reach the annulus once the points plus
        // the dilated radius stay short of it.
        if (total == 0 || max_mod + 3.0 * d_nu < inner) {
            ++consecutive_empty;
            continue;
        }
        const double cut = unit ? 1.0 - std::pow(b, nu + 2) : std::pow(alpha, nu + 2);
        std::vector<Complex> pts;
        for (const Complex& p : all_points)
            if (std::abs(p) <= cut) pts.push_back(p);
        CartanAnnulus record;
        record.nu = nu;
        record.mu = static_cast<long>(pts.size());
        record.d_nu = d_nu;
        if (!pts.empty())
            for (const Disc& d : cartan_discs(pts, d_nu))
                if (disc_meets_ring(d, inner, outer)) record.discs.push_back(d);
        consecutive_empty = 0;
        con.annuli.push_back(std::move(record));
    }
    con.nu_end = nu - 1;
    while (!con.annuli.empty() && con.annuli.back().discs.empty()) con.annuli.pop_back();
    if (!con.annuli.empty()) con.nu_end = con.annuli.back().nu;
    return con;
}

CartanCheck check_construction(const CartanConstruction& con) {
    CartanCheck check;
    const bool unit = con.ambient == Ambient::UnitDisc;
    long mu_max = 0;
    for (const CartanAnnulus& a : con.annuli) mu_max = std::max(mu_max, a.mu);
    for (const CartanAnnulus& a : con.annuli) {
        double radii = 0.0;
        for (const Disc& d : a.discs) {
            radii += d.radius;
            const double size = size_coordinate(con.ambient, d.center);
            check.tail_sum += d.radius / con.gauge.eval(size);
            if (!unit && std::abs(d.center) <= d.radius) check.origin_excluded = false;
            if (unit) {
                if (std::abs(d.center) + d.radius >= 1.0) check.inside_unit_disc = false;
                if (std::abs(d.center) <= d.radius) check.origin_excluded = false;
            }
        }
        if (radii > 2.0 * a.d_nu * (1.0 + 1e-9)) check.radii_within_budget = false;

        if (unit) {
            const double bn1 = std::pow(con.b, a.nu + 1);
            if (!(4.0 * a.d_nu < bn1) || !(bn1 < 1.0 - std::pow(con.b, a.nu)) ||
                (mu_max >= 3 && a.mu < 3))  // log mu_nu >= 1 once f has 3 points
                check.side_conditions_ok = false;
            check.tail_bound +=
                2.0 * a.d_nu /
                con.gauge.eval(bn1 - 2.0 * a.d_nu);
        } else {
            const double an = std::pow(con.alpha, a.nu);
            if (!(an > 4.0 * a.d_nu)) check.side_conditions_ok = false;
            check.tail_bound += 2.0 * con.alpha * a.d_nu / con.gauge.eval(an);
            check.closed_form_sum +=
                2.0 * con.alpha /
                (std::pow(a.nu, con.alpha) * std::pow(std::log(con.alpha), con.alpha));
        }
    }
    if (!unit)
        check.closed_form_gap = std::abs(check.tail_bound - check.closed_form_sum);
    check.tail_bounded = check.tail_sum <= check.tail_bound * (1.0 + 1e-9);
    check.passed = check.radii_within_budget && check.origin_excluded &&
                   check.inside_unit_disc && check.side_conditions_ok && check.tail_bounded &&
                   (unit || check.closed_form_gap <= 1e-6);
    return check;
}

}  // namespace esetlab
