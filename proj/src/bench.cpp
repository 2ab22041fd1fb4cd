#include "orbitsim/bench.hpp"

#include <chrono>
#include <random>
#include <vector>

#include "orbitsim/sigma_interpolant.hpp"

namespace orbitsim {

BenchResult benchmark_sigma(const CurveSpec& curve, int grid_size,
                            long calls) {
    BenchResult result;
    result.is_circle = curve.is_circle();
    result.calls = calls;

    SigmaInterpolant interp = build_sigma_interpolant(curve, grid_size);
    result.certified_error = interp.max_abs_error();
    if (result.is_circle) return result;

    // A fixed pool of parameters, revisited cyclically: identical workload
    // for both paths, too large to be trivially cached.
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> dist(-kPi, kPi);
    std::vector<double> points(4096);
    for (double& t : points) t = dist(rng);

    using clock = std::chrono::steady_clock;
    double sink = 0.0;

    auto t0 = clock::now();
    for (long i = 0; i < calls; ++i) {
        sink += arc_length_at_param(curve, points[i & 4095]);
    }
    auto t1 = clock::now();
    for (long i = 0; i < calls; ++i) {
        sink -= interp(points[i & 4095]);
    }
    auto t2 = clock::now();

    double direct_ns =
        std::chrono::duration<double, std::nano>(t1 - t0).count();
    double interp_ns =
        std::chrono::duration<double, std::nano>(t2 - t1).count();
    result.direct_ns_per_call = direct_ns / static_cast<double>(calls);
    result.interp_ns_per_call = interp_ns / static_cast<double>(calls);
    result.speedup = result.interp_ns_per_call > 0.0
                         ? result.direct_ns_per_call / result.interp_ns_per_call
                         : 0.0;
    result.checksum = sink;
    return result;
}

}  // namespace orbitsim
