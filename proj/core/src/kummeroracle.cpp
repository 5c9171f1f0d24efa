#include "landau/kummeroracle.hpp"

#include <cmath>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/specfun.hpp"

namespace landau::kummeroracle {

namespace specfun = landau::specfun;

double boundary_determinant(const DeterminantSpec& spec, double lambda) {
  if (spec.m < 0) throw InvalidArgument("boundary_determinant: m must be reduced to >= 0");
  if (!(spec.b >= 1.0)) throw InvalidArgument("boundary_determinant: requires b >= 1");
  const double a = 0.5 * (1.0 - lambda / spec.b);
  const double c = spec.m + 1.0;
  const double z = 0.5 * spec.b;
  if (spec.bc.kind == BoundaryCondition::Kind::Dirichlet) return specfun::kummer_m(a, c, z);
  const double gamma = (spec.bc.kind == BoundaryCondition::Kind::Robin) ? spec.bc.gamma : 0.0;
  return 2.0 * spec.b * specfun::kummer_m_dz(a, c, z) -
         (spec.b - 2.0 * spec.m + 2.0 * gamma) * specfun::kummer_m(a, c, z);
}

double eigenvalue(const DeterminantSpec& spec, int n, double tol) {
  if (n < 1) throw InvalidArgument("eigenvalue: n must be >= 1");
  if (!(spec.b >= 10.0 && spec.b <= 40.0))
    throw InvalidArgument("eigenvalue: requires 10 <= b <= 40");
  if (!(tol >= 1e-12)) throw InvalidArgument("eigenvalue: requires tol >= 1e-12");

  constexpr int kSamples = 64;
  double root_lo = 0.0, root_hi = 0.0, det_lo = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double center = (2.0 * k - 1.0) * spec.b;
    const double lo = center - 0.5 * spec.b;
    const double hi = center + 0.5 * spec.b;
    double samples[kSamples];
    int changes = 0;
    int change_at = -1;
    for (int i = 0; i < kSamples; ++i) {
      const double lam = lo + (hi - lo) * i / (kSamples - 1);
      samples[i] = boundary_determinant(spec, lam);
      if (i > 0 && ((samples[i - 1] < 0.0) != (samples[i] < 0.0))) {
        ++changes;
        change_at = i;
      }
    }
    if (changes != 1) {
      std::ostringstream profile;
      profile << "window k=" << k << " [" << lo << ", " << hi << "], m=" << spec.m
              << ", b=" << spec.b << ": " << changes << " sign changes; endpoint values "
              << samples[0] << " / " << samples[kSamples - 1];
      throw RootNotIsolated("eigenvalue: root not isolated in scan window", profile.str());
    }
    if (k == n) {
      root_hi = lo + (hi - lo) * change_at / (kSamples - 1);
      root_lo = lo + (hi - lo) * (change_at - 1) / (kSamples - 1);
      det_lo = samples[change_at - 1];
    }
  }

  for (int it = 0; it < 200 && (root_hi - root_lo) > tol; ++it) {
    const double mid = 0.5 * (root_lo + root_hi);
    const double dm = boundary_determinant(spec, mid);
    if (dm == 0.0) return mid;
    if ((dm < 0.0) == (det_lo < 0.0)) {
      root_lo = mid;
      det_lo = dm;
    } else {
      root_hi = mid;
    }
  }
  return 0.5 * (root_lo + root_hi);
}

}  // namespace landau::kummeroracle
