#include "orbitsim/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace orbitsim {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw ScenarioFormatError(msg);
}

void require_object(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) fail(where + " must be an object");
}

// Strict key handling: every listed key must be present unless marked
// optional, and nothing else may appear.
void check_keys(const ordered_json& obj, const std::string& where,
                const std::vector<std::string>& required,
                const std::vector<std::string>& optional = {}) {
    for (const auto& item : obj.items()) {
        const std::string& key = item.key();
        bool known =
            std::find(required.begin(), required.end(), key) != required.end() ||
            std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) fail("unknown key '" + key + "' in " + where);
    }
    for (const std::string& key : required) {
        if (!obj.contains(key)) fail("missing key '" + key + "' in " + where);
    }
}

double get_number(const ordered_json& obj, const std::string& key,
                  const std::string& where) {
    const ordered_json& v = obj.at(key);
    if (!v.is_number()) fail(where + "." + key + " must be a number");
    return v.get<double>();
}

int get_int(const ordered_json& obj, const std::string& key,
            const std::string& where) {
    const ordered_json& v = obj.at(key);
    if (!v.is_number_integer()) fail(where + "." + key + " must be an integer");
    return v.get<int>();
}

// Angles are radians; {"pi": [num, den]} = num*pi/den keeps multiples of
// pi exact in the file.
double get_angle(const ordered_json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_object()) {
        check_keys(v, where, {"pi"});
        const ordered_json& frac = v.at("pi");
        if (!frac.is_array() || frac.size() != 2 || !frac[0].is_number() ||
            !frac[1].is_number()) {
            fail(where + ".pi must be an array [numerator, denominator]");
        }
        double den = frac[1].get<double>();
        if (den == 0.0) fail(where + ".pi denominator must be nonzero");
        return frac[0].get<double>() * kPi / den;
    }
    fail(where + " must be a number or {\"pi\": [num, den]}");
}

CurveSpec parse_curve(const ordered_json& j) {
    require_object(j, "curve");
    if (!j.contains("type") || !j.at("type").is_string()) {
        fail("curve.type must be \"circle\" or \"ellipse\"");
    }
    std::string type = j.at("type").get<std::string>();
    PerimeterMode mode = PerimeterMode::Exact;
    auto read_mode = [&]() {
        if (!j.contains("perimeter_mode")) return;
        const ordered_json& v = j.at("perimeter_mode");
        if (!v.is_string()) fail("curve.perimeter_mode must be a string");
        std::string s = v.get<std::string>();
        if (s == "exact") {
            mode = PerimeterMode::Exact;
        } else if (s == "ramanujan") {
            mode = PerimeterMode::Ramanujan;
        } else {
            fail("curve.perimeter_mode must be \"exact\" or \"ramanujan\"");
        }
    };
    if (type == "circle") {
        check_keys(j, "curve", {"type", "r"}, {"perimeter_mode"});
        read_mode();
        double r = get_number(j, "r", "curve");
        if (!(r > 0.0)) fail("curve.r must be > 0");
        return CurveSpec::circle(r, mode);
    }
    if (type == "ellipse") {
        check_keys(j, "curve", {"type", "a", "b"}, {"perimeter_mode"});
        read_mode();
        double a = get_number(j, "a", "curve");
        double b = get_number(j, "b", "curve");
        if (!(a > 0.0) || !(b > 0.0)) fail("curve semi-axes must be > 0");
        return CurveSpec::ellipse(a, b, mode);
    }
    fail("curve.type must be \"circle\" or \"ellipse\"");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ScenarioFormatError(e.what());
    }
    require_object(doc, "scenario");
    check_keys(doc, "scenario", {"curve", "gains", "agents", "sim"});

    Scenario sc;
    sc.curve = parse_curve(doc.at("curve"));

    const ordered_json& gains = doc.at("gains");
    require_object(gains, "gains");
    check_keys(gains, "gains", {"kc", "k", "delta"});
    sc.gains.kc = get_number(gains, "kc", "gains");
    sc.gains.k_coupling = get_number(gains, "k", "gains");
    sc.gains.delta = get_number(gains, "delta", "gains");

    const ordered_json& agents = doc.at("agents");
    if (!agents.is_array() || agents.empty()) {
        fail("agents must be a non-empty array");
    }
    for (size_t i = 0; i < agents.size(); ++i) {
        std::string where = "agents[" + std::to_string(i) + "]";
        const ordered_json& a = agents[i];
        require_object(a, where);
        check_keys(a, where, {"x", "y", "theta"});
        AgentState state;
        state.x = get_number(a, "x", where);
        state.y = get_number(a, "y", where);
        state.theta = get_angle(a.at("theta"), where + ".theta");
        sc.agents.push_back(state);
    }

    const ordered_json& sim = doc.at("sim");
    require_object(sim, "sim");
    check_keys(sim, "sim", {"dt", "t_final"},
               {"sigma_mode", "log_decimation"});
    sc.dt = get_number(sim, "dt", "sim");
    sc.t_final = get_number(sim, "t_final", "sim");
    if (sim.contains("sigma_mode")) {
        const ordered_json& v = sim.at("sigma_mode");
        if (!v.is_string()) fail("sim.sigma_mode must be a string");
        std::string s = v.get<std::string>();
        if (s == "direct") {
            sc.sigma_mode = SigmaMode::Direct;
        } else if (s == "interpolated") {
            sc.sigma_mode = SigmaMode::Interpolated;
        } else {
            fail("sim.sigma_mode must be \"direct\" or \"interpolated\"");
        }
    }
    if (sim.contains("log_decimation")) {
        sc.log_decimation = get_int(sim, "log_decimation", "sim");
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open scenario file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw std::ios_base::failure("cannot read scenario file: " + path);
    }
    return parse_scenario(buf.str());
}

nlohmann::ordered_json serialize_scenario(const Scenario& scenario) {
    ordered_json curve;
    if (scenario.curve.is_circle()) {
        curve["type"] = "circle";
        curve["r"] = scenario.curve.a;
    } else {
        curve["type"] = "ellipse";
        curve["a"] = scenario.curve.a;
        curve["b"] = scenario.curve.b;
    }
    curve["perimeter_mode"] =
        scenario.curve.perimeter_mode == PerimeterMode::Exact ? "exact"
                                                              : "ramanujan";
    ordered_json agents = ordered_json::array();
    for (const AgentState& a : scenario.agents) {
        agents.push_back({{"x", a.x}, {"y", a.y}, {"theta", a.theta}});
    }
    return ordered_json{
        {"curve", curve},
        {"gains",
         {{"kc", scenario.gains.kc},
          {"k", scenario.gains.k_coupling},
          {"delta", scenario.gains.delta}}},
        {"agents", agents},
        {"sim",
         {{"dt", scenario.dt},
          {"t_final", scenario.t_final},
          {"sigma_mode", scenario.sigma_mode == SigmaMode::Direct
                             ? "direct"
                             : "interpolated"},
          {"log_decimation", scenario.log_decimation}}}};
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

RunSummary summarize(const TrajectoryLog& log, const Scenario& scenario,
                     double wall_clock_s) {
    RunSummary s;
    s.completed = log.completed;
    s.gains = scenario.gains;
    s.wall_clock_s = wall_clock_s;
    if (log.violation) s.failure = log.violation->message;
    if (log.times.empty()) return s;

    s.order_parameter_final = log.order_param.back();
    s.min_margin =
        *std::min_element(log.min_margin.begin(), log.min_margin.end());
    const std::vector<AgentSample>& last = log.samples.back();
    for (const AgentSample& a : last) {
        s.max_e_norm_final = std::max(s.max_e_norm_final, a.e_norm);
    }

    double t_cut = log.times.back() - 10.0;
    s.mean_u_last10.assign(log.n_agents, 0.0);
    long count = 0;
    for (size_t i = 0; i < log.times.size(); ++i) {
        if (log.times[i] < t_cut) continue;
        for (int k = 0; k < log.n_agents; ++k) {
            s.mean_u_last10[k] += log.samples[i][k].u;
        }
        ++count;
    }
    if (count > 0) {
        for (double& u : s.mean_u_last10) u /= static_cast<double>(count);
    }
    return s;
}

void write_trajectory_csv(const TrajectoryLog& log, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open for write: " + path);
    out << "time,agent,x,y,theta,u,zeta,e_norm,psi\n";
    for (size_t i = 0; i < log.times.size(); ++i) {
        for (int k = 0; k < log.n_agents; ++k) {
            const AgentSample& a = log.samples[i][k];
            out << format_double(log.times[i]) << ',' << k << ','
                << format_double(a.x) << ',' << format_double(a.y) << ','
                << format_double(a.theta) << ',' << format_double(a.u) << ','
                << format_double(a.zeta) << ',' << format_double(a.e_norm)
                << ',' << format_double(a.psi) << '\n';
        }
    }
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

void write_summary_json(const RunSummary& summary, const std::string& path) {
    ordered_json j{
        {"completed", summary.completed},
        {"order_parameter_final", summary.order_parameter_final},
        {"max_e_norm_final", summary.max_e_norm_final},
        {"min_margin", summary.min_margin},
        {"mean_u_last10", summary.mean_u_last10},
        {"wall_clock_s", summary.wall_clock_s},
        {"gains",
         {{"kc", summary.gains.kc},
          {"k", summary.gains.k_coupling},
          {"delta", summary.gains.delta}}}};
    if (!summary.completed) j["failure"] = summary.failure;
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open for write: " + path);
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

void write_curve_csv(const CurveSpec& curve, int samples,
                     const std::string& path) {
    if (samples < 2) throw std::invalid_argument("curve samples must be >= 2");
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open for write: " + path);
    out << "t,x,y,kappa,sigma,psi\n";
    double gamma = perimeter(curve);
    // One full lap from the arc-length origin, sigma accumulating to the
    // full perimeter at the last sample.
    for (int i = 0; i < samples; ++i) {
        double t = kPi / 2.0 + kTwoPi * static_cast<double>(i) / (samples - 1);
        Vec2 p = point_on_curve(curve, t);
        double sigma = arc_length_at_param(curve, t);
        double psi = wrap_two_pi(kTwoPi * sigma / gamma);
        out << format_double(t) << ',' << format_double(p.x) << ','
            << format_double(p.y) << ','
            << format_double(curvature_at_param(curve, t)) << ','
            << format_double(sigma) << ',' << format_double(psi) << '\n';
    }
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

void write_boundary_csv(const CurveSpec& curve, double delta, int samples,
                        const std::string& path) {
    OffsetBoundary boundary = offset_boundary(curve, delta, samples);
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open for write: " + path);
    out << "side,t,x,y\n";
    auto emit = [&](const char* side, const std::vector<Vec2>& line) {
        for (size_t i = 0; i < line.size(); ++i) {
            // Same parameter grid offset_boundary sampled on.
            double t = -kPi + kTwoPi * static_cast<double>(i) / (samples - 1);
            out << side << ',' << format_double(t) << ','
                << format_double(line[i].x) << ',' << format_double(line[i].y)
                << '\n';
        }
    };
    emit("outer", boundary.outer);
    emit("inner", boundary.inner);
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace orbitsim
