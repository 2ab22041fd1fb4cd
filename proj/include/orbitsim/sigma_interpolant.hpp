#pragma once

#include <stdexcept>
#include <vector>

#include "orbitsim/curve.hpp"

namespace orbitsim {

// Largest certified interpolation error (in length units) accepted when
// building a SigmaInterpolant.
inline constexpr double kSigmaCertBound = 1e-9;

// Thrown when a freshly built interpolant fails its certification sweep.
class CertificationFailure : public std::runtime_error {
  public:
    CertificationFailure(double achieved, double bound);
    double achieved_error;
    double bound;
};

// Tabulated arc length over one parameter period with piecewise-quintic
// Hermite reconstruction.  The first and second derivatives of arc length
// have closed forms, so each grid node carries value, slope and curvature
// and each cell interpolates all six boundary conditions.  Immutable after
// construction.
class SigmaInterpolant {
  public:
    // Evaluate arc length at any real t; outside [-pi, pi] the value is
    // extended by whole perimeters.
    double operator()(double t) const;

    int grid_size() const { return static_cast<int>(sigma_.size()) - 1; }
    double max_abs_error() const { return max_abs_error_; }
    double period_length() const { return period_length_; }

  private:
    friend SigmaInterpolant build_sigma_interpolant(const CurveSpec& curve,
                                                    int grid_size);
    double h_ = 0.0;              // uniform node spacing
    double period_length_ = 0.0;  // exact perimeter, added per period
    double max_abs_error_ = 0.0;  // certified against direct evaluation
    std::vector<double> sigma_;   // arc length at nodes -pi + i*h
    std::vector<double> dsigma_;  // d(sigma)/dt at nodes
    std::vector<double> d2sigma_; // d2(sigma)/dt2 at nodes
};

// Tabulate arc length on grid_size uniform cells over t in [-pi, pi] and
// certify the reconstruction against direct evaluation on a 10x denser
// sweep.  Throws CertificationFailure if the sweep error exceeds
// kSigmaCertBound.
SigmaInterpolant build_sigma_interpolant(const CurveSpec& curve, int grid_size);

}  // namespace orbitsim
