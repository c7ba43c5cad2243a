#pragma once

// Scalar numerics used by the closed-form analytics: adaptive quadrature
// (finite intervals and [0,inf) via a compactifying substitution), bracketed
// root finding, and 1-D unimodal maximization.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace clonal {

struct Tolerances {
    double quad_rel = 1e-10;  // relative quadrature tolerance
    double root_abs = 1e-12;  // absolute bracket width for roots
    double opt_abs = 1e-10;   // absolute argument tolerance for maximization
    int max_iter = 200;       // iteration / recursion-depth cap

    void check() const {
        if (quad_rel <= 0 || root_abs <= 0 || opt_abs <= 0)
            throw std::invalid_argument("Tolerances: all tolerances must be positive");
        if (max_iter < 1) throw std::invalid_argument("Tolerances: max_iter must be >= 1");
    }
};

struct numerics_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class F>
double simpson_adapt(F& f, double a, double fa, double m, double fm, double b, double fb,
                     double whole, double eps, int depth, int max_depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (std::isnan(flm) || std::isnan(frm)) throw numerics_error("quadrature: integrand returned NaN");
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * eps || (b - a) <= std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b)))
        return left + right + delta / 15.0;
    if (depth >= max_depth) throw numerics_error("quadrature: subdivision cap reached before convergence");
    return simpson_adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1, max_depth) +
           simpson_adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Simpson on [a, b] to relative tolerance tol.quad_rel.
template <class F>
double integrate_finite(F&& f, double a, double b, const Tolerances& tol = {}) {
    tol.check();
    if (!(a <= b)) throw std::invalid_argument("integrate_finite: requires a <= b");
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (std::isnan(fa) || std::isnan(fb) || std::isnan(fm))
        throw numerics_error("quadrature: integrand returned NaN");
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Seed the absolute budget from a coarse composite estimate so quad_rel
    // acts as a relative tolerance.
    double coarse = 0.0;
    {
        const int k = 8;
        const double h = (b - a) / k;
        double prev = fa;
        for (int i = 1; i <= k; ++i) {
            const double x = a + h * i;
            const double fx = (i == k) ? fb : f(x);
            coarse += 0.5 * h * (prev + fx);
            prev = fx;
        }
    }
    const double scale = std::max({std::abs(coarse), std::abs(whole), 1e-300});
    const double eps = tol.quad_rel * scale;
    return detail::simpson_adapt(f, a, fa, m, fm, b, fb, whole, eps, 0, tol.max_iter);
}

// Integral of f over [0, inf) for integrands that decay like exp(-rate*s).
// Substitutes u = exp(-rate*s), which maps [0,inf) onto (0,1] and turns the
// integral into (1/rate) * int_0^1 f(-log(u)/rate) / u du.  Passing the
// integrand's own decay rate keeps the transformed integrand bounded.
template <class F>
double integrate_0_inf(F&& f, double rate, const Tolerances& tol = {}) {
    if (!(rate > 0)) throw std::invalid_argument("integrate_0_inf: rate must be positive");
    auto g = [&f, rate](double u) -> double {
        if (u <= 0) return 0.0;
        const double s = -std::log(u) / rate;
        return f(s) / (rate * u);
    };
    // The left endpoint is nudged off zero; the neglected mass under a bounded
    // transformed integrand is below 1e-300.
    const double u_min = 1e-300;
    return integrate_finite(g, u_min, 1.0, tol);
}

// Root of a continuous function with a sign change on [lo, hi], by Brent's
// method (bisection safeguarded by secant / inverse quadratic steps).
template <class G>
double find_root_monotone(G&& g, double lo, double hi, const Tolerances& tol = {}) {
    tol.check();
    double a = lo, b = hi;
    double fa = g(a), fb = g(b);
    if (std::isnan(fa) || std::isnan(fb)) throw numerics_error("root: function returned NaN");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw numerics_error("root: no sign change on bracket [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol_act = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol.root_abs;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol_act || fb == 0.0) return b;
        if (std::abs(e) >= tol_act && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {  // inverse quadratic
                const double q1 = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q1 * (q1 - r) - (b - a) * (r - 1.0));
                q = (q1 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol_act * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol_act) ? d : (xm > 0 ? tol_act : -tol_act);
        fb = g(b);
        if (std::isnan(fb)) throw numerics_error("root: function returned NaN");
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw numerics_error("root: max_iter exceeded");
}

struct MaximizeResult {
    double arg = 0;
    double value = 0;
    bool at_boundary = false;  // maximum pinned to an end of the search interval
};

// Golden-section search for the maximum of a unimodal function on (lo, hi).
// Never evaluates the endpoints; if the shrinking bracket ends up hugging one,
// the result carries that endpoint and the boundary flag.
template <class H>
MaximizeResult maximize_1d(H&& h, double lo, double hi, const Tolerances& tol = {}) {
    tol.check();
    if (!(lo < hi)) throw std::invalid_argument("maximize_1d: requires lo < hi");
    constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = h(x1), f2 = h(x2);
    if (std::isnan(f1) || std::isnan(f2)) throw numerics_error("maximize: function returned NaN");
    int iter = 0;
    while (b - a > tol.opt_abs) {
        if (++iter > tol.max_iter) throw numerics_error("maximize: max_iter exceeded");
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = h(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = h(x1);
        }
        if (std::isnan(f1) || std::isnan(f2)) throw numerics_error("maximize: function returned NaN");
    }
    MaximizeResult r;
    r.arg = (f1 > f2) ? x1 : x2;
    r.value = std::max(f1, f2);
    const double edge = 2.0 * tol.opt_abs + 1e-9 * (hi - lo);
    if (r.arg - lo <= edge) {
        r.arg = lo;
        r.at_boundary = true;
    } else if (hi - r.arg <= edge) {
        r.arg = hi;
        r.at_boundary = true;
    }
    return r;
}

}  // namespace clonal
