#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "orbitsim/sim.hpp"

namespace orbitsim {

// Raised on malformed scenario documents: JSON syntax errors (with the
// parser's line/column info) and schema violations (with the offending
// key path).
class ScenarioFormatError : public std::runtime_error {
  public:
    explicit ScenarioFormatError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Parse a scenario document.  Unknown keys anywhere are rejected; angles
// accept either a plain number (radians) or the exact-pi convenience form
// {"pi": [num, den]} meaning num*pi/den.
Scenario parse_scenario(const std::string& text);

// Read and parse a scenario file.  Throws std::ios_base::failure if the
// file cannot be read.
Scenario load_scenario(const std::string& path);

// Scenario back to its document form; parse(serialize(s)) == s.
nlohmann::ordered_json serialize_scenario(const Scenario& scenario);

// Aggregates reported after a run, mirrored into summary.json.
struct RunSummary {
    bool completed = true;
    double order_parameter_final = 0.0;
    double max_e_norm_final = 0.0;
    double min_margin = 0.0;  // min over the run of delta^2 - |e|^2
    std::vector<double> mean_u_last10;  // per agent, over the last 10 s
    double wall_clock_s = 0.0;
    ControlGains gains;
    std::string failure;  // violation message when not completed
};

RunSummary summarize(const TrajectoryLog& log, const Scenario& scenario,
                     double wall_clock_s);

// trajectory.csv: header time,agent,x,y,theta,u,zeta,e_norm,psi and one
// row per agent per logged step.  All numbers are shortest round-trip
// decimal, so identical logs serialize to identical bytes.
void write_trajectory_csv(const TrajectoryLog& log, const std::string& path);

void write_summary_json(const RunSummary& summary, const std::string& path);

// curve.csv: t,x,y,kappa,sigma,psi sampled over one full lap starting at
// the arc-length origin.
void write_curve_csv(const CurveSpec& curve, int samples,
                     const std::string& path);

// boundary.csv: side,t,x,y polylines of both offset curves at distance
// delta.
void write_boundary_csv(const CurveSpec& curve, double delta, int samples,
                        const std::string& path);

// Shortest round-trip decimal representation of a double (the CSV/JSON
// number format).
std::string format_double(double v);

}  // namespace orbitsim
