#pragma once

// Test-side numeric oracles, kept independent of the library's elliptic
// integral implementation: plain adaptive Simpson quadrature over a
// callable integrand.

#include <cmath>
#include <functional>

namespace test_oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    double mid = 0.5 * (a + b);
    double flm = f(0.5 * (a + mid));
    double frm = f(0.5 * (mid + b));
    double left = (mid - a) * (fa + 4.0 * flm + fm) / 6.0;
    double right = (b - mid) * (fm + 4.0 * frm + fb) / 6.0;
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_rec(f, a, mid, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, mid, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Arc length of the ellipse (a cos t, b sin t) between two parameters, by
// direct quadrature of the parametric speed.
inline double ellipse_arc(double a, double b, double t0, double t1,
                          double tol = 1e-12) {
    return integrate(
        [a, b](double t) {
            double s = std::sin(t), c = std::cos(t);
            return std::sqrt(a * a * s * s + b * b * c * c);
        },
        t0, t1, tol);
}

}  // namespace test_oracle
