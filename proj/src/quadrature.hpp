#pragma once

#include <cmath>

namespace cwchaos::quadrature {

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson with interval bisection; absolute tolerance, bounded depth.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth = 60) {
    if (a == b) {
        return 0.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = detail::simpson(a, b, fa, fm, fb);
    return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

} // namespace cwchaos::quadrature
