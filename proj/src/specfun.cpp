#include "orbitsim/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitsim/types.hpp"

namespace orbitsim {
namespace {

// Error tolerances for the Carlson duplication iterations.  The truncated
// Taylor expansions below are 5th order, so a relative argument spread of
// eps^(1/6) keeps the truncation error at machine precision.
constexpr double kRfErrTol = 0.0025;
constexpr double kRdErrTol = 0.0015;

double simpson(double fa, double fm, double fb, double h) {
    return h * (fa + 4.0 * fm + fb) / 6.0;
}

double integrand(double t, double m) {
    double s = std::sin(t);
    return std::sqrt(1.0 - m * s * s);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double m, double tol, int depth) {
    double mid = 0.5 * (a + b);
    double lm = integrand(0.5 * (a + mid), m);
    double rm = integrand(0.5 * (mid + b), m);
    double left = simpson(fa, lm, fm, mid - a);
    double right = simpson(fm, rm, fb, b - mid);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(a, mid, fa, lm, fm, left, m, 0.5 * tol, depth - 1) +
           adaptive_simpson(mid, b, fm, rm, fb, right, m, 0.5 * tol, depth - 1);
}

}  // namespace

double carlson_rf(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0 || x + y <= 0.0 || y + z <= 0.0 ||
        x + z <= 0.0) {
        throw std::domain_error("carlson_rf: arguments outside domain");
    }
    double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    do {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        ave = (x + y + z) / 3.0;
        dx = (ave - x) / ave;
        dy = (ave - y) / ave;
        dz = (ave - z) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kRfErrTol);
    double e2 = dx * dy - dz * dz;
    double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) /
           std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z <= 0.0 || x + y <= 0.0) {
        throw std::domain_error("carlson_rd: arguments outside domain");
    }
    double sum = 0.0;
    double fac = 1.0;
    double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    do {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lam));
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        ave = 0.2 * (x + y + 3.0 * z);
        dx = (ave - x) / ave;
        dy = (ave - y) / ave;
        dz = (ave - z) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kRdErrTol);
    double ea = dx * dy;
    double eb = dz * dz;
    double ec = ea - eb;
    double ed = ea - 6.0 * eb;
    double ee = ed + 2.0 * ec;
    double series =
        1.0 + ed * (-3.0 / 14.0 + (9.0 / 88.0) * ed - (4.5 / 26.0) * dz * ee) +
        dz * (ee / 6.0 + dz * (-(9.0 / 22.0) * ec + dz * (3.0 / 26.0) * ea));
    return 3.0 * sum + fac * series / (ave * std::sqrt(ave));
}

double ellint_e_incomplete(double u, double m) {
    if (m > 1.0) {
        throw std::domain_error("ellint_e_incomplete: requires m <= 1");
    }
    if (u == 0.0) return 0.0;
    if (m == 0.0) return u;  // integrand is identically 1
    if (u < 0.0) return -ellint_e_incomplete(-u, m);

    // E(u|1) integrates |cos t|, which folds to a sawtooth of slope-1 arcs.
    if (m == 1.0) {
        double n = std::round(u / kPi);
        return 2.0 * n + std::sin(u - n * kPi);
    }

    // Quasi-periodicity: each half period of the integrand contributes a
    // fixed area of 2 E(m).
    double k = std::floor(u / kPi);
    double r = u - k * kPi;  // in [0, pi)
    double base = (k != 0.0) ? 2.0 * k * ellint_e_complete(m) : 0.0;

    // Reflect [pi/2, pi) onto [0, pi/2] about the quarter period.
    if (r > kPi / 2.0) {
        return base + 2.0 * ellint_e_complete(m) -
               ellint_e_incomplete(kPi - r, m);
    }

    double s = std::sin(r);
    double c = std::cos(r);
    double q = 1.0 - m * s * s;
    double s3 = s * s * s;
    return base + s * carlson_rf(c * c, q, 1.0) -
           (m / 3.0) * s3 * carlson_rd(c * c, q, 1.0);
}

double ellint_e_complete(double m) {
    if (m > 1.0) {
        throw std::domain_error("ellint_e_complete: requires m <= 1");
    }
    if (m == 0.0) return kPi / 2.0;
    if (m == 1.0) return 1.0;
    return carlson_rf(0.0, 1.0 - m, 1.0) -
           (m / 3.0) * carlson_rd(0.0, 1.0 - m, 1.0);
}

double oracle_e(double u, double m, double tol) {
    if (u == 0.0) return 0.0;
    if (u < 0.0) return -oracle_e(-u, m, tol);
    double fa = integrand(0.0, m);
    double fb = integrand(u, m);
    double fm = integrand(0.5 * u, m);
    double whole = simpson(fa, fm, fb, u);
    return adaptive_simpson(0.0, u, fa, fm, fb, whole, m, tol, 40);
}

}  // namespace orbitsim
