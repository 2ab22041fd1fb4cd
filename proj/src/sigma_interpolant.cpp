#include "orbitsim/sigma_interpolant.hpp"

#include <cmath>
#include <string>

namespace orbitsim {
namespace {

std::string failure_message(double achieved, double bound) {
    return "sigma interpolant certification failed: max error " +
           std::to_string(achieved) + " exceeds bound " + std::to_string(bound);
}

}  // namespace

CertificationFailure::CertificationFailure(double achieved, double bound)
    : std::runtime_error(failure_message(achieved, bound)),
      achieved_error(achieved),
      bound(bound) {}

double SigmaInterpolant::operator()(double t) const {
    // Reduce to the principal period; each full period adds one perimeter.
    double k = std::floor((t + kPi) / kTwoPi);
    double tr = t - k * kTwoPi;  // in [-pi, pi)
    double pos = (tr + kPi) / h_;
    int i = static_cast<int>(pos);
    int last = static_cast<int>(sigma_.size()) - 2;
    if (i < 0) i = 0;
    if (i > last) i = last;
    double xi = pos - i;  // in [0, 1]

    // Quintic Hermite cell: matches value, first and second derivative at
    // both ends (derivatives scaled by the cell width).
    double p0 = sigma_[i], p1 = sigma_[i + 1];
    double d0 = dsigma_[i] * h_, d1 = dsigma_[i + 1] * h_;
    double c0 = d2sigma_[i] * h_ * h_, c1 = d2sigma_[i + 1] * h_ * h_;
    double va = p1 - p0 - d0 - 0.5 * c0;
    double vb = d1 - d0 - c0;
    double vc = c1 - c0;
    double a3 = 10.0 * va - 4.0 * vb + 0.5 * vc;
    double a4 = -15.0 * va + 7.0 * vb - vc;
    double a5 = 6.0 * va - 3.0 * vb + 0.5 * vc;
    double val =
        p0 + xi * (d0 + xi * (0.5 * c0 + xi * (a3 + xi * (a4 + xi * a5))));
    return val + k * period_length_;
}

SigmaInterpolant build_sigma_interpolant(const CurveSpec& curve,
                                         int grid_size) {
    if (grid_size < 64) {
        throw std::invalid_argument("sigma interpolant grid must be >= 64");
    }
    SigmaInterpolant interp;
    int n = grid_size;
    interp.h_ = kTwoPi / n;
    interp.sigma_.resize(n + 1);
    interp.dsigma_.resize(n + 1);
    interp.d2sigma_.resize(n + 1);

    double a = curve.a, b = curve.b;
    for (int i = 0; i <= n; ++i) {
        double t = -kPi + kTwoPi * static_cast<double>(i) / n;
        double speed = param_speed(curve, t);
        interp.sigma_[i] = arc_length_at_param(curve, t);
        interp.dsigma_[i] = speed;
        interp.d2sigma_[i] =
            (a * a - b * b) * std::sin(t) * std::cos(t) / speed;
    }
    for (int i = 0; i < n; ++i) {
        if (!(interp.sigma_[i + 1] > interp.sigma_[i])) {
            throw std::logic_error(
                "sigma interpolant nodes are not strictly increasing");
        }
    }
    interp.period_length_ = interp.sigma_[n] - interp.sigma_[0];

    // Certify against direct evaluation at 10x grid density (off-node
    // points included since the sweep and the grid are offset).
    double worst = 0.0;
    int sweep = 10 * n;
    for (int i = 0; i <= sweep; ++i) {
        double t = -kPi + kTwoPi * static_cast<double>(i) / sweep;
        double err = std::abs(interp(t) - arc_length_at_param(curve, t));
        if (err > worst) worst = err;
    }
    interp.max_abs_error_ = worst;
    if (worst > kSigmaCertBound) {
        throw CertificationFailure(worst, kSigmaCertBound);
    }
    return interp;
}

}  // namespace orbitsim
