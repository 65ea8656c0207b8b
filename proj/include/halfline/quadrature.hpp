#ifndef HALFLINE_QUADRATURE_HPP
#define HALFLINE_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <initializer_list>
#include <vector>

#include "halfline/types.hpp"

namespace halfline::quadrature {

namespace detail {

template <std::invocable<double> F>
double adaptive_step(F&& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw QuadratureError("adaptive quadrature: recursion depth exhausted");
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson on [a, b].
template <std::invocable<double> F>
double integrate(F&& f, double a, double b, double tol = 1e-9, int depth = 50) {
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Integrates over [a, b] splitting at the interior breakpoints (kernel kinks).
template <std::invocable<double> F>
double integrate_split(F&& f, double a, double b, std::initializer_list<double> breaks,
                       double tol = 1e-9) {
    std::vector<double> pts{a};
    for (double p : breaks)
        if (p > a && p < b)
            pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        sum += integrate(f, pts[i], pts[i + 1], tol / static_cast<double>(pts.size()));
    return sum;
}

} // namespace halfline::quadrature

#endif
