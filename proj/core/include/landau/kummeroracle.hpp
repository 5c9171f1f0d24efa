#ifndef LANDAU_KUMMERORACLE_HPP
#define LANDAU_KUMMERORACLE_HPP

#include "landau/trialstate.hpp"

namespace landau::kummeroracle {

/// Boundary determinant data for one reduced fiber (m >= 0).
struct DeterminantSpec {
  int m = 0;
  double b = 0.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet();
};

/// Value whose zeros in lambda are exactly the fiber eigenvalues.
///
/// The regular solution of the fiber ODE is
///   u(r) = r^m e^{-b r^2/4} M(a, m+1, b r^2/2),  a = (1 - lambda/b) / 2,
/// so with M = M(a, m+1, b/2) and M' = dM/dz at the same point:
///   Dirichlet:  M
///   Neumann:    2 b M' - (b - 2m) M
///   Robin:      2 b M' - (b - 2m + 2 gamma) M
/// Requires m >= 0 and b >= 1.
double boundary_determinant(const DeterminantSpec& spec, double lambda);

/// n-th eigenvalue of the reduced fiber, as the n-th determinant root.
///
/// Roots are isolated by scanning the windows [(2k-1)b - b/2, (2k-1)b + b/2]
/// for k = 1..n with 64 samples each; every window must contain exactly one
/// sign change (otherwise RootNotIsolated carries the scan profile), and the
/// n-th is polished by bisection to absolute width tol. Requires m >= 0,
/// 10 <= b <= 40 (the double-precision series range), tol >= 1e-12.
/// Negative-m callers reduce first and add 2|m|b to the result.
double eigenvalue(const DeterminantSpec& spec, int n, double tol = 1e-10);

}  // namespace landau::kummeroracle

#endif
