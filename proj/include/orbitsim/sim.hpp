#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitsim/control.hpp"
#include "orbitsim/curve.hpp"
#include "orbitsim/sigma_interpolant.hpp"
#include "orbitsim/types.hpp"

namespace orbitsim {

enum class SigmaMode { Direct, Interpolated };

// Grid used when a scenario asks for interpolated arc length.
inline constexpr int kDefaultSigmaGrid = 512;

// A complete, reproducible description of one simulation.
struct Scenario {
    CurveSpec curve;
    ControlGains gains;
    std::vector<AgentState> agents;
    double dt = 1e-3;        // s
    double t_final = 100.0;  // s
    double speed = 1.0;      // m/s, the model fixes this at 1
    SigmaMode sigma_mode = SigmaMode::Direct;
    int log_decimation = 10;  // log every n-th step
};

// One agent's logged quantities at one logged step.
struct AgentSample {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  // unwrapped
    double u = 0.0;
    double zeta = 0.0;
    double e_norm = 0.0;
    double psi = 0.0;
};

struct ViolationInfo {
    int agent = -1;
    int stage = -1;
    double time = 0.0;
    double margin = 0.0;
    std::string message;
};

// Everything a run produces: decimated per-agent samples, per-step swarm
// metrics, and the failure record if the boundary guard tripped.
struct TrajectoryLog {
    std::vector<double> times;
    std::vector<std::vector<AgentSample>> samples;  // [step][agent]
    std::vector<double> order_param;                // per logged step
    std::vector<double> min_margin;  // min_k (delta^2 - |e_k|^2) per step
    bool completed = true;
    std::optional<ViolationInfo> violation;
    int n_agents = 0;
    double dt = 0.0;
};

// Structural and feasibility checks; one message per violation, empty
// result means the scenario may run.
std::vector<std::string> validate(const Scenario& scenario);

// Right-hand side of the unicycle kinematics, returned as a rate.
AgentState derivative(const AgentState& state, double u, double speed);

// Magnitude of the phase centroid, |1/N sum exp(i psi_k)|: 0 at perfect
// balancing, 1 at synchronization.
double order_parameter(const std::vector<double>& psis);

// Bound scenario state for stepping: caches the perimeter and, when the
// scenario asks for it, the certified arc-length interpolant.
class Simulator {
  public:
    explicit Simulator(const Scenario& scenario);

    // Curve phase of a heading through the configured arc-length path.
    double phase(double theta) const;

    // Full control evaluation for every agent at the given joint state.
    std::vector<ControlOutput> evaluate_controls(
        const std::vector<AgentState>& states) const;

    // Advance all agents one classical Runge-Kutta step.  The control is
    // re-evaluated at every stage from the full stage state; a barrier
    // guard trip is rethrown with stage and time attached.
    std::vector<AgentState> step(const std::vector<AgentState>& states,
                                 double dt, double time) const;

    // Integrate the scenario to t_final, logging every log_decimation-th
    // step (plus the initial and final states).  A boundary violation ends
    // the run early with the partial log marked incomplete.
    TrajectoryLog run() const;

    const Scenario& scenario() const { return scenario_; }
    double gamma() const { return gamma_; }
    const std::optional<SigmaInterpolant>& interpolant() const {
        return interpolant_;
    }

  private:
    std::vector<double> phases(const std::vector<AgentState>& states) const;

    Scenario scenario_;
    double gamma_ = 0.0;
    std::optional<SigmaInterpolant> interpolant_;
};

// One-call convenience wrapper.
TrajectoryLog run(const Scenario& scenario);

}  // namespace orbitsim
