#include <esetlab/quadrature.hpp>

#include <cmath>

namespace esetlab {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    long evals = 0;
    long max_evals = 0;
    bool converged = true;

    double eval(double x) {
        ++evals;
        return f(x);
    }
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    if (st.evals + 2 > st.max_evals || depth > 60) {
        st.converged = false;
        return whole;
    }
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, long max_evaluations) {
    if (!(b > a)) return {0.0, true, 0};
    SimpsonState st{f, 0, max_evaluations, true};
    const double fa = st.eval(a);
    const double m = 0.5 * (a + b);
    const double fm = st.eval(m);
    const double fb = st.eval(b);
    const double whole = simpson(fa, fm, fb, b - a);
    const double value = recurse(st, a, b, fa, fm, fb, whole, abs_tol, 0);
    return {value, st.converged, st.evals};
}

}  // namespace esetlab
