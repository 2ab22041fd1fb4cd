#pragma once

#include "orbitsim/curve.hpp"

namespace orbitsim {

// Timing comparison of the direct elliptic-integral arc-length path against
// the certified interpolant, over the same pseudo-random parameter points.
struct BenchResult {
    bool is_circle = false;  // circle arc length is closed form; no contest
    long calls = 0;          // per path
    double direct_ns_per_call = 0.0;
    double interp_ns_per_call = 0.0;
    double speedup = 0.0;          // direct / interpolated
    double certified_error = 0.0;  // interpolant's certification sweep
    double checksum = 0.0;         // accumulated sigma, defeats dead-code
};

// Build an interpolant (CertificationFailure propagates) and time both
// paths.  The evaluation points come from a fixed-seed generator so the
// workload is reproducible.
BenchResult benchmark_sigma(const CurveSpec& curve, int grid_size, long calls);

}  // namespace orbitsim
