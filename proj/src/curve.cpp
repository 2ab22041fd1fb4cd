#include "orbitsim/curve.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitsim/specfun.hpp"

namespace orbitsim {

CurveSpec CurveSpec::circle(double r, PerimeterMode mode) {
    if (!(r > 0.0)) throw std::invalid_argument("circle radius must be > 0");
    return CurveSpec{CurveKind::Circle, r, r, mode};
}

CurveSpec CurveSpec::ellipse(double a, double b, PerimeterMode mode) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("ellipse semi-axes must be > 0");
    }
    return CurveSpec{CurveKind::Ellipse, a, b, mode};
}

double project(const CurveSpec& curve, double theta) {
    // The tangent of (a cos t, b sin t) is (-a sin t, b cos t); requiring it
    // to point along (cos theta, sin theta) gives sin t = -R cos(theta)/a and
    // cos t = R sin(theta)/b for a positive common factor R, so the branch
    // falls out of the two-argument arctangent.
    return std::atan2(-curve.b * std::cos(theta), curve.a * std::sin(theta));
}

Vec2 point_on_curve(const CurveSpec& curve, double t) {
    return {curve.a * std::cos(t), curve.b * std::sin(t)};
}

double radial_distance(const CurveSpec& curve, double theta) {
    double s = std::sin(theta);
    double c = std::cos(theta);
    return std::sqrt(curve.a * curve.a * s * s + curve.b * curve.b * c * c);
}

double curvature(const CurveSpec& curve, double theta) {
    if (curve.is_circle()) return 1.0 / curve.a;
    double r = radial_distance(curve, theta);
    return r * r * r / (curve.a * curve.a * curve.b * curve.b);
}

double curvature_at_param(const CurveSpec& curve, double t) {
    if (curve.is_circle()) return 1.0 / curve.a;
    double v = param_speed(curve, t);
    return curve.a * curve.b / (v * v * v);
}

double param_speed(const CurveSpec& curve, double t) {
    double s = std::sin(t);
    double c = std::cos(t);
    return std::sqrt(curve.a * curve.a * s * s + curve.b * curve.b * c * c);
}

double arc_length_at_param(const CurveSpec& curve, double t) {
    // |d rho / dt| = b sqrt(1 - m sin^2 t) with m = 1 - (a/b)^2, so the
    // length integral from the top point (0, b) is b*(E(t|m) - E(pi/2|m)).
    // Quasi-periodicity of E makes this valid for every real t, adding one
    // exact perimeter per parameter period.
    if (curve.is_circle()) return curve.a * (t - kPi / 2.0);
    double m = 1.0 - (curve.a / curve.b) * (curve.a / curve.b);
    return curve.b * (ellint_e_incomplete(t, m) - ellint_e_complete(m));
}

double arc_length(const CurveSpec& curve, double theta) {
    return arc_length_at_param(curve, project(curve, theta));
}

double perimeter(const CurveSpec& curve) {
    if (curve.is_circle()) return kTwoPi * curve.a;
    double a = curve.a, b = curve.b;
    if (curve.perimeter_mode == PerimeterMode::Ramanujan) {
        return kPi * (3.0 * (a + b) - std::sqrt((3.0 * a + b) * (a + 3.0 * b)));
    }
    // 4 * major * E(pi/2 | eccentricity^2), written from whichever axis is
    // larger so the parameter stays in [0, 1).
    if (a >= b) return 4.0 * a * ellint_e_complete(1.0 - (b / a) * (b / a));
    return 4.0 * b * ellint_e_complete(1.0 - (a / b) * (a / b));
}

double curve_phase(const CurveSpec& curve, double theta) {
    return wrap_two_pi(kTwoPi * arc_length(curve, theta) / perimeter(curve));
}

Vec2 position_error(const CurveSpec& curve, const AgentState& state) {
    Vec2 rho = point_on_curve(curve, project(curve, state.theta));
    return Vec2{state.x, state.y} - rho;
}

CurveFrame curve_frame(const CurveSpec& curve, double theta) {
    CurveFrame f;
    f.t_param = project(curve, theta);
    f.point = point_on_curve(curve, f.t_param);
    f.radial = radial_distance(curve, theta);
    f.kappa = curvature(curve, theta);
    f.sigma = arc_length_at_param(curve, f.t_param);
    f.psi = wrap_two_pi(kTwoPi * f.sigma / perimeter(curve));
    return f;
}

double min_curvature_radius(const CurveSpec& curve) {
    if (curve.is_circle()) return curve.a;
    double a = curve.a, b = curve.b;
    return std::min(b * b / a, a * a / b);
}

OffsetBoundary offset_boundary(const CurveSpec& curve, double delta, int n) {
    if (!(delta > 0.0)) throw std::invalid_argument("offset delta must be > 0");
    if (n < 16) throw std::invalid_argument("offset sample count must be >= 16");
    OffsetBoundary result;
    result.inner_self_intersects = !(delta < min_curvature_radius(curve));
    result.outer.reserve(n);
    result.inner.reserve(n);
    for (int i = 0; i < n; ++i) {
        double t = -kPi + kTwoPi * static_cast<double>(i) / (n - 1);
        Vec2 p = point_on_curve(curve, t);
        // Outward unit normal of (a cos t, b sin t).
        double nx = curve.b * std::cos(t);
        double ny = curve.a * std::sin(t);
        double len = std::hypot(nx, ny);
        Vec2 nrm{nx / len, ny / len};
        result.outer.push_back(p + delta * nrm);
        result.inner.push_back(p - delta * nrm);
    }
    return result;
}

}  // namespace orbitsim
