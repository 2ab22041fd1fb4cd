#include "orbitsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace orbitsim {

std::vector<std::string> validate(const Scenario& scenario) {
    std::vector<std::string> findings;
    auto check = [&](bool ok, const std::string& msg) {
        if (!ok) findings.push_back(msg);
    };
    check(scenario.curve.a > 0.0 && scenario.curve.b > 0.0,
          "curve semi-axes must be > 0");
    check(scenario.gains.kc > 0.0, "gains.kc must be > 0");
    check(scenario.gains.k_coupling > 0.0, "gains.k must be > 0");
    check(scenario.gains.delta > 0.0, "gains.delta must be > 0");
    check(scenario.dt > 0.0, "sim.dt must be > 0");
    check(scenario.t_final > scenario.dt, "sim.t_final must exceed sim.dt");
    check(scenario.speed == 1.0, "speed is fixed at 1.0 by the model");
    check(scenario.log_decimation >= 1, "sim.log_decimation must be >= 1");
    check(!scenario.agents.empty(), "at least one agent is required");
    if (!findings.empty()) return findings;

    // Feasibility: every agent must start strictly inside the boundary.
    for (size_t k = 0; k < scenario.agents.size(); ++k) {
        double e0 = norm(position_error(scenario.curve, scenario.agents[k]));
        if (!(e0 < scenario.gains.delta)) {
            findings.push_back("agent " + std::to_string(k) +
                               " infeasible: |e(0)| = " + std::to_string(e0) +
                               " >= delta = " +
                               std::to_string(scenario.gains.delta));
        }
    }
    return findings;
}

AgentState derivative(const AgentState& state, double u, double speed) {
    return {speed * std::cos(state.theta), speed * std::sin(state.theta), u};
}

double order_parameter(const std::vector<double>& psis) {
    if (psis.empty()) {
        throw std::invalid_argument("order_parameter: empty phase array");
    }
    std::complex<double> centroid;
    for (double psi : psis) {
        centroid += std::polar(1.0, psi);
    }
    return std::abs(centroid) / static_cast<double>(psis.size());
}

Simulator::Simulator(const Scenario& scenario) : scenario_(scenario) {
    gamma_ = perimeter(scenario_.curve);
    if (scenario_.sigma_mode == SigmaMode::Interpolated) {
        interpolant_ = build_sigma_interpolant(scenario_.curve,
                                               kDefaultSigmaGrid);
    }
}

double Simulator::phase(double theta) const {
    double sigma = interpolant_
                       ? (*interpolant_)(project(scenario_.curve, theta))
                       : arc_length(scenario_.curve, theta);
    return wrap_two_pi(kTwoPi * sigma / gamma_);
}

std::vector<double> Simulator::phases(
    const std::vector<AgentState>& states) const {
    std::vector<double> psis(states.size());
    for (size_t j = 0; j < states.size(); ++j) {
        psis[j] = phase(states[j].theta);
    }
    return psis;
}

std::vector<ControlOutput> Simulator::evaluate_controls(
    const std::vector<AgentState>& states) const {
    std::vector<double> psis = phases(states);
    std::vector<ControlOutput> outs(states.size());
    for (size_t k = 0; k < states.size(); ++k) {
        outs[k] = turn_rate(scenario_.curve, states, psis,
                            static_cast<int>(k), scenario_.gains);
    }
    return outs;
}

std::vector<AgentState> Simulator::step(const std::vector<AgentState>& states,
                                        double dt, double time) const {
    size_t n = states.size();
    auto eval = [&](const std::vector<AgentState>& s, int stage) {
        std::vector<AgentState> rates(n);
        try {
            std::vector<double> psis = phases(s);
            for (size_t k = 0; k < n; ++k) {
                ZetaTerms zt = zeta(scenario_.curve, s[k], psis,
                                    static_cast<int>(k), scenario_.gains);
                double u = curvature(scenario_.curve, s[k].theta) *
                           (1.0 + zt.zeta);
                rates[k] = derivative(s[k], u, scenario_.speed);
            }
        } catch (const BoundaryViolation& v) {
            throw BoundaryViolation(v.agent, v.margin, stage, time);
        }
        return rates;
    };
    auto advance = [&](const std::vector<AgentState>& s,
                       const std::vector<AgentState>& rate, double scale) {
        std::vector<AgentState> out(n);
        for (size_t k = 0; k < n; ++k) {
            out[k] = {s[k].x + scale * rate[k].x, s[k].y + scale * rate[k].y,
                      s[k].theta + scale * rate[k].theta};
        }
        return out;
    };

    std::vector<AgentState> k1 = eval(states, 0);
    std::vector<AgentState> k2 = eval(advance(states, k1, 0.5 * dt), 1);
    std::vector<AgentState> k3 = eval(advance(states, k2, 0.5 * dt), 2);
    std::vector<AgentState> k4 = eval(advance(states, k3, dt), 3);

    std::vector<AgentState> next(n);
    for (size_t k = 0; k < n; ++k) {
        double w = dt / 6.0;
        next[k] = {
            states[k].x + w * (k1[k].x + 2.0 * k2[k].x + 2.0 * k3[k].x + k4[k].x),
            states[k].y + w * (k1[k].y + 2.0 * k2[k].y + 2.0 * k3[k].y + k4[k].y),
            states[k].theta + w * (k1[k].theta + 2.0 * k2[k].theta +
                                   2.0 * k3[k].theta + k4[k].theta)};
    }
    return next;
}

TrajectoryLog Simulator::run() const {
    TrajectoryLog log;
    log.n_agents = static_cast<int>(scenario_.agents.size());
    log.dt = scenario_.dt;

    long n_steps = std::lround(scenario_.t_final / scenario_.dt);
    std::vector<AgentState> states = scenario_.agents;

    auto record = [&](long step_index, const std::vector<AgentState>& s) {
        // This evaluation can trip the guard too (a state can be legal for
        // logging yet inside the guard band); let the caller handle it.
        std::vector<ControlOutput> controls = evaluate_controls(s);
        double t = static_cast<double>(step_index) * scenario_.dt;
        std::vector<AgentSample> row(s.size());
        std::vector<double> psis(s.size());
        double min_margin = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < s.size(); ++k) {
            const ControlOutput& c = controls[k];
            row[k] = {s[k].x, s[k].y, s[k].theta, c.u,
                      c.zeta, c.e_norm, c.psi};
            psis[k] = c.psi;
            double margin =
                scenario_.gains.delta * scenario_.gains.delta -
                c.e_norm * c.e_norm;
            min_margin = std::min(min_margin, margin);
        }
        log.times.push_back(t);
        log.samples.push_back(std::move(row));
        log.order_param.push_back(order_parameter(psis));
        log.min_margin.push_back(min_margin);
    };

    try {
        record(0, states);
        for (long i = 0; i < n_steps; ++i) {
            double t = static_cast<double>(i) * scenario_.dt;
            states = step(states, scenario_.dt, t);
            long done = i + 1;
            if (done % scenario_.log_decimation == 0 || done == n_steps) {
                record(done, states);
            }
        }
    } catch (const BoundaryViolation& v) {
        log.completed = false;
        log.violation = ViolationInfo{v.agent, v.stage, v.time, v.margin,
                                      v.what()};
    }
    return log;
}

TrajectoryLog run(const Scenario& scenario) {
    return Simulator(scenario).run();
}

}  // namespace orbitsim
