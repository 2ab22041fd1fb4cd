#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbitsim/bench.hpp"
#include "orbitsim/scenario_io.hpp"
#include "orbitsim/sim.hpp"

namespace {

// Exit codes: 0 success, 1 I/O failure, 2 invalid config, 3 boundary
// violation, 4 interpolant certification failure.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBoundary = 3;
constexpr int kExitCertification = 4;

int cmd_validate(const std::string& config) {
    orbitsim::Scenario scenario = orbitsim::load_scenario(config);
    std::vector<std::string> findings = orbitsim::validate(scenario);
    for (size_t k = 0; k < scenario.agents.size(); ++k) {
        double e0 = orbitsim::norm(
            orbitsim::position_error(scenario.curve, scenario.agents[k]));
        std::printf("agent %zu: |e(0)| = %.9f, delta = %.9f -> %s\n", k, e0,
                    scenario.gains.delta,
                    e0 < scenario.gains.delta ? "ok" : "INFEASIBLE");
    }
    if (findings.empty()) {
        std::printf("scenario valid\n");
        return kExitOk;
    }
    for (const std::string& f : findings) {
        std::fprintf(stderr, "invalid: %s\n", f.c_str());
    }
    return kExitConfig;
}

int cmd_run(const std::string& config, const std::string& out_dir,
            int decimation_override) {
    orbitsim::Scenario scenario = orbitsim::load_scenario(config);
    if (decimation_override > 0) scenario.log_decimation = decimation_override;
    std::vector<std::string> findings = orbitsim::validate(scenario);
    if (!findings.empty()) {
        for (const std::string& f : findings) {
            std::fprintf(stderr, "invalid: %s\n", f.c_str());
        }
        return kExitConfig;
    }

    std::filesystem::create_directories(out_dir);
    orbitsim::Simulator sim(scenario);
    auto t0 = std::chrono::steady_clock::now();
    orbitsim::TrajectoryLog log = sim.run();
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    orbitsim::RunSummary summary = orbitsim::summarize(log, scenario, wall);
    orbitsim::write_trajectory_csv(log, out_dir + "/trajectory.csv");
    orbitsim::write_summary_json(summary, out_dir + "/summary.json");

    if (!log.completed) {
        std::fprintf(stderr, "%s\n", log.violation->message.c_str());
        std::fprintf(stderr, "partial log written to %s\n", out_dir.c_str());
        return kExitBoundary;
    }
    std::printf("run complete: %zu logged steps, %d agents\n",
                log.times.size(), log.n_agents);
    std::printf("final order parameter %.6f, max |e| %.6f, wall %.2f s\n",
                summary.order_parameter_final, summary.max_e_norm_final, wall);
    return kExitOk;
}

int cmd_curve(const std::string& config, int samples,
              const std::string& out_dir) {
    orbitsim::Scenario scenario = orbitsim::load_scenario(config);
    std::filesystem::create_directories(out_dir);
    orbitsim::write_curve_csv(scenario.curve, samples, out_dir + "/curve.csv");
    orbitsim::write_boundary_csv(scenario.curve, scenario.gains.delta, samples,
                                 out_dir + "/boundary.csv");
    if (!(scenario.gains.delta <
          orbitsim::min_curvature_radius(scenario.curve))) {
        std::fprintf(stderr,
                     "warning: inner offset self-intersects (delta %.4f >= "
                     "min curvature radius %.4f)\n",
                     scenario.gains.delta,
                     orbitsim::min_curvature_radius(scenario.curve));
    }
    std::printf("wrote curve.csv and boundary.csv (%d samples) to %s\n",
                samples, out_dir.c_str());
    return kExitOk;
}

int cmd_bench(const std::string& config, int grid, long calls) {
    orbitsim::Scenario scenario = orbitsim::load_scenario(config);
    orbitsim::BenchResult r =
        orbitsim::benchmark_sigma(scenario.curve, grid, calls);
    if (r.is_circle) {
        std::printf(
            "circle: arc length is closed form; interpolation unnecessary\n");
        std::printf("certified interpolant error %.3e (grid %d)\n",
                    r.certified_error, grid);
    } else {
        std::printf("arc-length benchmark over %ld calls per path (grid %d)\n",
                    r.calls, grid);
        std::printf("  direct:       %8.2f ns/call (%.3e calls/s)\n",
                    r.direct_ns_per_call, 1e9 / r.direct_ns_per_call);
        std::printf("  interpolated: %8.2f ns/call (%.3e calls/s)\n",
                    r.interp_ns_per_call, 1e9 / r.interp_ns_per_call);
        std::printf("  speedup:      %.1fx, certified error %.3e\n", r.speedup,
                    r.certified_error);
    }
    nlohmann::ordered_json j{{"is_circle", r.is_circle},
                             {"calls", r.calls},
                             {"direct_ns_per_call", r.direct_ns_per_call},
                             {"interp_ns_per_call", r.interp_ns_per_call},
                             {"speedup", r.speedup},
                             {"certified_error", r.certified_error}};
    std::printf("%s\n", j.dump().c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic multi-agent orbit-tracking simulator"};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir = "out";
    int decimation = 0;
    int samples = 512;
    int grid = 512;
    long calls = 2000000;

    CLI::App* validate =
        app.add_subcommand("validate", "check a scenario file");
    validate->add_option("--config", config, "scenario file")->required();

    CLI::App* run = app.add_subcommand("run", "integrate a scenario");
    run->add_option("--config", config, "scenario file")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--decimation", decimation,
                    "override log decimation (1 = every step)");

    CLI::App* curve =
        app.add_subcommand("curve", "export curve and boundary samples");
    curve->add_option("--config", config, "scenario file")->required();
    curve->add_option("--samples", samples, "samples per polyline");
    curve->add_option("--out", out_dir, "output directory");

    CLI::App* bench =
        app.add_subcommand("bench", "time direct vs interpolated arc length");
    bench->add_option("--config", config, "scenario file")->required();
    bench->add_option("--grid", grid, "interpolant grid size");
    bench->add_option("--calls", calls, "timed calls per path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (validate->parsed()) return cmd_validate(config);
        if (run->parsed()) return cmd_run(config, out_dir, decimation);
        if (curve->parsed()) return cmd_curve(config, samples, out_dir);
        if (bench->parsed()) return cmd_bench(config, grid, calls);
    } catch (const orbitsim::ScenarioFormatError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const orbitsim::CertificationFailure& e) {
        std::fprintf(stderr, "certification failure: %s\n", e.what());
        return kExitCertification;
    } catch (const orbitsim::BoundaryViolation& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitBoundary;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}
