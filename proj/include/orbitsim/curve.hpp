#pragma once

#include <vector>

#include "orbitsim/types.hpp"

namespace orbitsim {

enum class CurveKind { Circle, Ellipse };
enum class PerimeterMode { Exact, Ramanujan };

// The desired orbit: a circle of radius r or an axis-aligned ellipse with
// semi-axes a (along x) and b (along y), centered at the origin.  A circle
// is stored with a == b == r so every ellipse formula applies unchanged.
struct CurveSpec {
    CurveKind kind = CurveKind::Circle;
    double a = 1.0;
    double b = 1.0;
    PerimeterMode perimeter_mode = PerimeterMode::Exact;

    static CurveSpec circle(double r, PerimeterMode mode = PerimeterMode::Exact);
    static CurveSpec ellipse(double a, double b,
                             PerimeterMode mode = PerimeterMode::Exact);
    bool is_circle() const { return kind == CurveKind::Circle; }
};

// Everything the control law needs to know about the curve point selected
// by a heading angle.
struct CurveFrame {
    double t_param = 0.0;  // curve parameter of the projected point
    Vec2 point;            // (a cos t, b sin t)
    double radial = 0.0;   // sqrt(a^2 sin^2(theta) + b^2 cos^2(theta))
    double kappa = 0.0;    // curvature at the projected point
    double sigma = 0.0;    // arc length, zero at the top point (0, b)
    double psi = 0.0;      // curve phase in [0, 2*pi)
};

// Two closed polylines at normal distance delta from the curve, one outward
// and one inward.  The inward offset degenerates (cusps/self-intersection)
// once delta reaches the minimum radius of curvature; that case is flagged
// rather than treated as an error so plots can still be produced.
struct OffsetBoundary {
    std::vector<Vec2> outer;
    std::vector<Vec2> inner;
    bool inner_self_intersects = false;
};

// Parameter t in (-pi, pi] of the curve point whose counterclockwise
// tangent direction equals (cos theta, sin theta).
double project(const CurveSpec& curve, double theta);

// (a cos t, b sin t).
Vec2 point_on_curve(const CurveSpec& curve, double t);

// sqrt(a^2 sin^2(theta) + b^2 cos^2(theta)); the polar radius of the
// ellipse at polar angle theta (reported quantity, not used to place
// curve points).
double radial_distance(const CurveSpec& curve, double theta);

// Curvature at the heading-projected point, expressed directly in the
// heading: (a^2 sin^2(theta) + b^2 cos^2(theta))^(3/2) / (a^2 b^2).
double curvature(const CurveSpec& curve, double theta);

// Parametric curvature a*b / (a^2 sin^2 t + b^2 cos^2 t)^(3/2).
double curvature_at_param(const CurveSpec& curve, double t);

// Signed arc length along the curve from the point (0, b) to the point at
// parameter t, positive counterclockwise.  Valid for any real t; one full
// parameter period adds the exact perimeter.
double arc_length_at_param(const CurveSpec& curve, double t);

// Arc length at the heading-projected point.
double arc_length(const CurveSpec& curve, double theta);

// Local speed |d rho / dt| of the parameterization at t.
double param_speed(const CurveSpec& curve, double t);

// Curve perimeter in the configured mode.  Exact uses the complete
// elliptic integral; Ramanujan uses pi*(3(a+b) - sqrt((3a+b)(a+3b))).
double perimeter(const CurveSpec& curve);

// Curve phase psi = (2*pi/perimeter) * arc_length, wrapped to [0, 2*pi).
double curve_phase(const CurveSpec& curve, double theta);

// Positional error e = agent position minus the heading-projected curve
// point; zero for an agent on the curve with tangent-aligned heading.
Vec2 position_error(const CurveSpec& curve, const AgentState& state);

// Bundle of all heading-derived curve quantities.
CurveFrame curve_frame(const CurveSpec& curve, double theta);

// Smallest radius of curvature anywhere on the curve: min(b^2/a, a^2/b).
double min_curvature_radius(const CurveSpec& curve);

// Sample both parallel curves at distance delta, n points each over one
// closed loop (first and last sample coincide).
OffsetBoundary offset_boundary(const CurveSpec& curve, double delta, int n);

}  // namespace orbitsim
