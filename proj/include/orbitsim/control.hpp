#pragma once

#include <stdexcept>
#include <vector>

#include "orbitsim/curve.hpp"
#include "orbitsim/types.hpp"

namespace orbitsim {

// Smallest admissible barrier denominator delta^2 - |e|^2, in m^2.  The
// turn-rate law is singular at the boundary; failing hard before the
// denominator degenerates keeps every produced number finite.
inline constexpr double kBarrierGuard = 1e-9;

struct ControlGains {
    double kc = 1.0;          // barrier gain
    double k_coupling = 2.0;  // phase-coupling gain
    double delta = 1.0;       // boundary half-width, m
};

// Raised when an agent's barrier denominator falls below kBarrierGuard.
// The integrator annotates the throw site with its stage and time.
class BoundaryViolation : public std::runtime_error {
  public:
    BoundaryViolation(int agent, double margin);
    BoundaryViolation(int agent, double margin, int stage, double time);
    int agent;      // offending agent index
    double margin;  // delta^2 - |e|^2 at the failure
    int stage;      // integrator stage 0..3, or -1 outside the integrator
    double time;    // simulation time, NaN outside the integrator
};

// The barrier / coupling decomposition of the turn-rate correction.
struct ZetaTerms {
    double zeta = 0.0;
    double barrier_term = 0.0;
    double coupling_term = 0.0;
    double e_norm = 0.0;
};

// Full per-agent control evaluation.
struct ControlOutput {
    double u = 0.0;     // turn rate, rad/s
    double zeta = 0.0;  // barrier_term + coupling_term
    double barrier_term = 0.0;
    double coupling_term = 0.0;
    double e_norm = 0.0;  // |position error|, m
    double psi = 0.0;     // agent's curve phase
};

// -(K/N) * sum_j sin(psi_j - psi_k).  Invariant to 2*pi wraps and to any
// common shift of all phases.
double coupling_term(const std::vector<double>& psis, int k, double k_coupling);

// Barrier + coupling correction for agent k given everyone's phases.
// The barrier is K_c * <e, heading> / (delta^2 - |e|^2) with e the
// heading-projected position error.
ZetaTerms zeta(const CurveSpec& curve, const AgentState& state,
               const std::vector<double>& psis, int k,
               const ControlGains& gains);

// Circle-only closed form of the same correction: the projected point drops
// out of the inner product, leaving K_c (x cos(theta) + y sin(theta)) over
// the barrier denominator, and phases reduce to headings.
double zeta_circle(double r, const AgentState& state,
                   const std::vector<double>& thetas, int k,
                   const ControlGains& gains);

// u = curvature(theta_k) * (1 + zeta_k), with phases supplied by the
// caller (one evaluation of every agent's phase per control step).
ControlOutput turn_rate(const CurveSpec& curve,
                        const std::vector<AgentState>& states,
                        const std::vector<double>& psis, int k,
                        const ControlGains& gains);

// Convenience overload that derives the phases from the states itself.
ControlOutput turn_rate(const CurveSpec& curve,
                        const std::vector<AgentState>& states, int k,
                        const ControlGains& gains);

}  // namespace orbitsim
