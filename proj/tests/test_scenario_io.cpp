#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "orbitsim/scenario_io.hpp"

using namespace orbitsim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string minimal_scenario(const std::string& gains_block) {
    return R"({
  "curve": {"type": "circle", "r": 1.0},
  "gains": )" +
           gains_block + R"(,
  "agents": [{"x": 1.5, "y": 0.0, "theta": {"pi": [1, 2]}}],
  "sim": {"dt": 0.001, "t_final": 1.0}
})";
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("the shipped scenario files parse and validate") {
    for (const char* name :
         {"fig1a.json", "fig1b.json", "exp-circle.json", "exp-ellipse.json"}) {
        std::string path = std::string(SCENARIO_DIR) + "/" + name;
        Scenario sc = load_scenario(path);
        CHECK(validate(sc).empty());
        CHECK(sc.agents.size() == 3);
        CHECK(sc.gains.delta == 1.0);
        CHECK(sc.dt == 0.001);
        CHECK(sc.t_final == 100.0);
    }
    // Spot checks: exact pi fractions and per-file settings.
    Scenario circle =
        load_scenario(std::string(SCENARIO_DIR) + "/exp-circle.json");
    CHECK(circle.curve.is_circle());
    CHECK(circle.agents[0].theta == kPi / 2);
    CHECK(circle.agents[1].theta == kPi);
    CHECK(circle.agents[2].theta == -kPi / 4);

    Scenario wide = load_scenario(std::string(SCENARIO_DIR) + "/fig1b.json");
    CHECK_FALSE(wide.curve.is_circle());
    CHECK(wide.curve.a == 2.0);
    CHECK(wide.curve.b == 1.0);
    CHECK(wide.sigma_mode == SigmaMode::Interpolated);

    Scenario small =
        load_scenario(std::string(SCENARIO_DIR) + "/exp-ellipse.json");
    CHECK(small.curve.a == 1.25);
    CHECK(small.agents[1].theta == 0.0);
}

TEST_CASE("round trip preserves every field") {
    for (const char* name :
         {"fig1a.json", "fig1b.json", "exp-circle.json", "exp-ellipse.json"}) {
        Scenario sc = load_scenario(std::string(SCENARIO_DIR) + "/" + name);
        Scenario back = parse_scenario(serialize_scenario(sc).dump());
        CHECK(back.curve.kind == sc.curve.kind);
        CHECK(back.curve.a == sc.curve.a);
        CHECK(back.curve.b == sc.curve.b);
        CHECK(back.curve.perimeter_mode == sc.curve.perimeter_mode);
        CHECK(back.gains.kc == sc.gains.kc);
        CHECK(back.gains.k_coupling == sc.gains.k_coupling);
        CHECK(back.gains.delta == sc.gains.delta);
        REQUIRE(back.agents.size() == sc.agents.size());
        for (size_t i = 0; i < sc.agents.size(); ++i) {
            CHECK(back.agents[i].x == sc.agents[i].x);
            CHECK(back.agents[i].y == sc.agents[i].y);
            CHECK(back.agents[i].theta == sc.agents[i].theta);
        }
        CHECK(back.dt == sc.dt);
        CHECK(back.t_final == sc.t_final);
        CHECK(back.sigma_mode == sc.sigma_mode);
        CHECK(back.log_decimation == sc.log_decimation);
    }
}

TEST_CASE("unknown keys are rejected") {
    std::string text =
        minimal_scenario(R"({"kc": 1.0, "k": 2.0, "delta": 1.0, "kq": 3.0})");
    CHECK_THROWS_AS(parse_scenario(text), ScenarioFormatError);
    try {
        parse_scenario(text);
    } catch (const ScenarioFormatError& e) {
        CHECK(std::string(e.what()).find("unknown key 'kq'") !=
              std::string::npos);
    }
}

TEST_CASE("missing keys are rejected") {
    std::string text = minimal_scenario(R"({"kc": 1.0, "k": 2.0})");
    try {
        parse_scenario(text);
        FAIL("expected a format error");
    } catch (const ScenarioFormatError& e) {
        CHECK(std::string(e.what()).find("missing key 'delta'") !=
              std::string::npos);
    }
}

TEST_CASE("syntax errors carry the parser's line position") {
    try {
        parse_scenario("{\n  \"curve\": {\n");
        FAIL("expected a format error");
    } catch (const ScenarioFormatError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("pi fractions are exact") {
    Scenario sc = parse_scenario(R"({
      "curve": {"type": "ellipse", "a": 2.0, "b": 1.0},
      "gains": {"kc": 1.0, "k": 2.0, "delta": 1.0},
      "agents": [
        {"x": 0.3, "y": 1.4, "theta": {"pi": [-3, 4]}},
        {"x": 0.2, "y": -1.4, "theta": 1.25}
      ],
      "sim": {"dt": 0.001, "t_final": 1.0}
    })");
    CHECK(sc.agents[0].theta == -3.0 * kPi / 4.0);
    CHECK(sc.agents[1].theta == 1.25);
}

TEST_CASE("malformed pi fractions are rejected") {
    CHECK_THROWS_AS(parse_scenario(R"({
      "curve": {"type": "circle", "r": 1.0},
      "gains": {"kc": 1.0, "k": 2.0, "delta": 1.0},
      "agents": [{"x": 0.0, "y": 0.5, "theta": {"pi": [1, 0]}}],
      "sim": {"dt": 0.001, "t_final": 1.0}
    })"),
                    ScenarioFormatError);
    CHECK_THROWS_AS(parse_scenario(R"({
      "curve": {"type": "circle", "r": 1.0},
      "gains": {"kc": 1.0, "k": 2.0, "delta": 1.0},
      "agents": [{"x": 0.0, "y": 0.5, "theta": {"pi": [1]}}],
      "sim": {"dt": 0.001, "t_final": 1.0}
    })"),
                    ScenarioFormatError);
}

TEST_CASE("enum strings are strict") {
    CHECK_THROWS_AS(parse_scenario(R"({
      "curve": {"type": "square", "r": 1.0},
      "gains": {"kc": 1.0, "k": 2.0, "delta": 1.0},
      "agents": [{"x": 0.0, "y": 0.5, "theta": 0.0}],
      "sim": {"dt": 0.001, "t_final": 1.0}
    })"),
                    ScenarioFormatError);
    CHECK_THROWS_AS(parse_scenario(R"({
      "curve": {"type": "circle", "r": 1.0},
      "gains": {"kc": 1.0, "k": 2.0, "delta": 1.0},
      "agents": [{"x": 0.0, "y": 0.5, "theta": 0.0}],
      "sim": {"dt": 0.001, "t_final": 1.0, "sigma_mode": "fast"}
    })"),
                    ScenarioFormatError);
}

TEST_CASE("structural violations pass parsing but fail validation") {
    Scenario sc = parse_scenario(
        minimal_scenario(R"({"kc": 1.0, "k": 2.0, "delta": 0.0})"));
    std::vector<std::string> findings = validate(sc);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0] == "gains.delta must be > 0");
}

TEST_CASE("format_double round trips") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    for (double v : {0.3333333333333333, 9.68844822054768, -2.5e-9, 1e300}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("trajectory csv layout") {
    TrajectoryLog log;
    log.n_agents = 2;
    log.dt = 0.5;
    log.times = {0.0, 0.5};
    log.samples = {
        {{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}, {1, 2, 3, 4, 5, 6, 7}},
        {{0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75}, {1, 2, 3, 4, 5, 6, 7}}};
    log.order_param = {0.5, 0.5};
    log.min_margin = {0.9, 0.9};

    auto path = temp_file("orbitsim_test_traj.csv");
    write_trajectory_csv(log, path.string());
    std::string text = slurp(path.string());
    CHECK(text.rfind("time,agent,x,y,theta,u,zeta,e_norm,psi\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);  // header + 4 rows
    CHECK(text.find("0.5,0,0.15,0.25,0.35,0.45,0.55,0.65,0.75") !=
          std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("summary json carries the run aggregates") {
    Scenario sc;
    sc.curve = CurveSpec::circle(1.0);
    sc.gains = {1.0, 2.0, 1.0};
    sc.agents = {{1.5, 0.0, kPi / 2}, {0.0, 1.2, kPi}, {-1.0, -1.0, -kPi / 4}};
    sc.dt = 1e-3;
    sc.t_final = 2.0;
    TrajectoryLog log = run(sc);
    REQUIRE(log.completed);
    RunSummary summary = summarize(log, sc, 0.25);
    CHECK(summary.completed);
    CHECK(summary.mean_u_last10.size() == 3);
    CHECK(summary.min_margin > 0.0);

    auto path = temp_file("orbitsim_test_summary.json");
    write_summary_json(summary, path.string());
    nlohmann::json parsed = nlohmann::json::parse(slurp(path.string()));
    CHECK(parsed.at("completed").get<bool>());
    CHECK(parsed.at("order_parameter_final").get<double>() ==
          summary.order_parameter_final);
    CHECK(parsed.at("gains").at("delta").get<double>() == 1.0);
    CHECK(parsed.at("mean_u_last10").size() == 3);
    CHECK(!parsed.contains("failure"));
    std::filesystem::remove(path);
}

TEST_CASE("curve csv sweeps one lap of arc length") {
    auto path = temp_file("orbitsim_test_curve.csv");
    write_curve_csv(CurveSpec::ellipse(2.0, 1.0), 9, path.string());
    std::string text = slurp(path.string());
    REQUIRE(text.rfind("t,x,y,kappa,sigma,psi\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 10);
    // Last sample closes the lap: sigma equals the exact perimeter.
    size_t last_line = text.rfind('\n', text.size() - 2);
    std::string line = text.substr(last_line + 1);
    std::stringstream ss(line);
    std::string field;
    for (int i = 0; i < 5; ++i) std::getline(ss, field, ',');
    CHECK(std::stod(field) == doctest::Approx(9.68844822054768).epsilon(1e-9));
    std::filesystem::remove(path);
}

TEST_CASE("boundary csv emits both offset polylines") {
    auto path = temp_file("orbitsim_test_boundary.csv");
    write_boundary_csv(CurveSpec::circle(1.0), 1.0, 32, path.string());
    std::string text = slurp(path.string());
    REQUIRE(text.rfind("side,t,x,y\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 65);
    CHECK(text.find("outer,") != std::string::npos);
    CHECK(text.find("inner,") != std::string::npos);
    std::filesystem::remove(path);
}
