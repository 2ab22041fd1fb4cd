#pragma once

namespace orbitsim {

// Carlson symmetric elliptic integral of the first kind,
//   R_F(x, y, z) = (1/2) Int_0^inf dt / sqrt((t+x)(t+y)(t+z)),
// for non-negative arguments with at most one of x, y, z equal to zero.
double carlson_rf(double x, double y, double z);

// Carlson symmetric elliptic integral of the second kind (degenerate),
//   R_D(x, y, z) = (3/2) Int_0^inf dt / ((t+z) sqrt((t+x)(t+y)(t+z))),
// for z > 0, x,y >= 0, at most one of x,y zero.
double carlson_rd(double x, double y, double z);

// Incomplete elliptic integral of the second kind in the parameter
// convention:
//   E(u | m) = Int_0^u sqrt(1 - m sin^2 t) dt.
// Valid for any real u and any m <= 1 (negative m included).
double ellint_e_incomplete(double u, double m);

// Complete elliptic integral of the second kind, E(pi/2 | m), m <= 1.
double ellint_e_complete(double m);

// Direct adaptive-quadrature evaluation of E(u | m).  Slow but entirely
// independent of the Carlson-based path; used for cross-checks.
double oracle_e(double u, double m, double tol = 1e-12);

}  // namespace orbitsim
