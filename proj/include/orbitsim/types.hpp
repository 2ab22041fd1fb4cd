#pragma once

#include <cmath>
#include <numbers>

namespace orbitsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }

// Planar unicycle state: position plus heading.  Speed is fixed at 1, so the
// heading alone determines the velocity direction.
struct AgentState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
};

// Wrap an angle into [0, 2*pi).
inline double wrap_two_pi(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

// Wrap an angle into (-pi, pi].
inline double wrap_pm_pi(double a) {
    double w = std::fmod(a + kPi, kTwoPi);
    if (w <= 0.0) w += kTwoPi;
    return w - kPi;
}

}  // namespace orbitsim
