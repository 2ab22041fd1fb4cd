#include <cmath>
#include <random>

#include "doctest.h"
#include "orbitsim/sigma_interpolant.hpp"

using namespace orbitsim;

TEST_CASE("circle interpolation is exact up to rounding") {
    SigmaInterpolant interp =
        build_sigma_interpolant(CurveSpec::circle(1.0), 256);
    CHECK(interp.max_abs_error() <= 1e-12);
    CHECK(interp.period_length() == doctest::Approx(kTwoPi).epsilon(1e-14));
}

TEST_CASE("wide ellipse certifies within the bound") {
    CurveSpec c = CurveSpec::ellipse(2.0, 1.0);
    SigmaInterpolant interp = build_sigma_interpolant(c, 512);
    CHECK(interp.max_abs_error() <= kSigmaCertBound);
    CHECK(interp.period_length() ==
          doctest::Approx(perimeter(c)).epsilon(1e-13));
}

TEST_CASE("interpolant matches direct evaluation at random points") {
    CurveSpec c = CurveSpec::ellipse(1.25, 1.0);
    SigmaInterpolant interp = build_sigma_interpolant(c, 512);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-kPi, kPi);
    for (int i = 0; i < 10000; ++i) {
        double t = dist(rng);
        CHECK(std::abs(interp(t) - arc_length_at_param(c, t)) <= 1e-9);
    }
}

TEST_CASE("periodic extension adds whole perimeters") {
    CurveSpec c = CurveSpec::ellipse(2.0, 1.0);
    SigmaInterpolant interp = build_sigma_interpolant(c, 512);
    for (double t : {-2.2, 0.4, 2.9}) {
        CHECK(interp(t + kTwoPi) - interp(t) ==
              doctest::Approx(interp.period_length()).epsilon(1e-12));
        CHECK(std::abs(interp(t - 2.0 * kTwoPi) -
                       (interp(t) - 2.0 * interp.period_length())) <= 1e-9);
        // Extended values still track direct evaluation.
        CHECK(std::abs(interp(t + kTwoPi) -
                       arc_length_at_param(c, t + kTwoPi)) <= 2e-9);
    }
}

TEST_CASE("interpolated arc length is strictly increasing") {
    CurveSpec c = CurveSpec::ellipse(1.25, 1.0);
    SigmaInterpolant interp = build_sigma_interpolant(c, 512);
    double prev = interp(-kPi);
    for (int i = 1; i <= 4096; ++i) {
        double t = -kPi + kTwoPi * i / 4096.0;
        double cur = interp(t);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("a too-coarse grid fails certification") {
    CurveSpec c = CurveSpec::ellipse(3.0, 1.0);
    CHECK_THROWS_AS(build_sigma_interpolant(c, 64), CertificationFailure);
    try {
        build_sigma_interpolant(c, 64);
    } catch (const CertificationFailure& e) {
        CHECK(e.achieved_error > kSigmaCertBound);
        CHECK(e.bound == kSigmaCertBound);
        CHECK(std::string(e.what()).find("certification") !=
              std::string::npos);
    }
}

TEST_CASE("grid size floor") {
    CHECK_THROWS_AS(build_sigma_interpolant(CurveSpec::circle(1.0), 32),
                    std::invalid_argument);
}
