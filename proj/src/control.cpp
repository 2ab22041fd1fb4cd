#include "orbitsim/control.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace orbitsim {
namespace {

std::string violation_message(int agent, double margin, int stage,
                              double time) {
    std::string msg = "boundary violation: agent " + std::to_string(agent) +
                      ", delta^2 - |e|^2 = " + std::to_string(margin);
    if (stage >= 0) {
        msg += " at integrator stage " + std::to_string(stage) + ", t = " +
               std::to_string(time);
    }
    return msg;
}

}  // namespace

BoundaryViolation::BoundaryViolation(int agent_, double margin_)
    : std::runtime_error(violation_message(agent_, margin_, -1, 0.0)),
      agent(agent_),
      margin(margin_),
      stage(-1),
      time(std::numeric_limits<double>::quiet_NaN()) {}

BoundaryViolation::BoundaryViolation(int agent_, double margin_, int stage_,
                                     double time_)
    : std::runtime_error(violation_message(agent_, margin_, stage_, time_)),
      agent(agent_),
      margin(margin_),
      stage(stage_),
      time(time_) {}

double coupling_term(const std::vector<double>& psis, int k,
                     double k_coupling) {
    int n = static_cast<int>(psis.size());
    if (k < 0 || k >= n) {
        throw std::out_of_range("coupling_term: agent index out of range");
    }
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        sum += std::sin(psis[j] - psis[k]);
    }
    return -(k_coupling / n) * sum;
}

ZetaTerms zeta(const CurveSpec& curve, const AgentState& state,
               const std::vector<double>& psis, int k,
               const ControlGains& gains) {
    Vec2 e = position_error(curve, state);
    double denom = gains.delta * gains.delta - norm_sq(e);
    if (denom < kBarrierGuard) {
        throw BoundaryViolation(k, denom);
    }
    ZetaTerms out;
    out.e_norm = norm(e);
    out.barrier_term =
        gains.kc * (e.x * std::cos(state.theta) + e.y * std::sin(state.theta)) /
        denom;
    out.coupling_term = coupling_term(psis, k, gains.k_coupling);
    out.zeta = out.barrier_term + out.coupling_term;
    return out;
}

double zeta_circle(double r, const AgentState& state,
                   const std::vector<double>& thetas, int k,
                   const ControlGains& gains) {
    // On a circle the projected point is orthogonal to the heading, so
    // <e, heading> = <position, heading>, and |e|^2 expands without ever
    // forming the projected point.
    double ct = std::cos(state.theta);
    double st = std::sin(state.theta);
    double e_sq = state.x * state.x + state.y * state.y -
                  2.0 * r * (state.x * st - state.y * ct) + r * r;
    double denom = gains.delta * gains.delta - e_sq;
    if (denom < kBarrierGuard) {
        throw BoundaryViolation(k, denom);
    }
    double barrier = gains.kc * (state.x * ct + state.y * st) / denom;
    return barrier + coupling_term(thetas, k, gains.k_coupling);
}

ControlOutput turn_rate(const CurveSpec& curve,
                        const std::vector<AgentState>& states,
                        const std::vector<double>& psis, int k,
                        const ControlGains& gains) {
    ZetaTerms zt = zeta(curve, states[k], psis, k, gains);
    ControlOutput out;
    out.zeta = zt.zeta;
    out.barrier_term = zt.barrier_term;
    out.coupling_term = zt.coupling_term;
    out.e_norm = zt.e_norm;
    out.psi = psis[k];
    out.u = curvature(curve, states[k].theta) * (1.0 + zt.zeta);
    return out;
}

ControlOutput turn_rate(const CurveSpec& curve,
                        const std::vector<AgentState>& states, int k,
                        const ControlGains& gains) {
    std::vector<double> psis;
    psis.reserve(states.size());
    for (const AgentState& s : states) {
        psis.push_back(curve_phase(curve, s.theta));
    }
    return turn_rate(curve, states, psis, k, gains);
}

}  // namespace orbitsim
