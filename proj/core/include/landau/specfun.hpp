#ifndef LANDAU_SPECFUN_HPP
#define LANDAU_SPECFUN_HPP

#include <vector>

namespace landau::specfun {

/// Parameters of an associated Laguerre polynomial L^m_deg.
struct LaguerreSpec {
  int order_m = 0;  ///< upper index m >= 0
  int deg = 0;      ///< polynomial degree (n - 1 in branch labelling)
};

/// k! as a double; exact integer arithmetic through 20!, log-gamma above.
double factorial(int k);

/// Binomial coefficient C(n, k) as a double (0 when k < 0 or k > n).
double binomial(int n, int k);

/// Associated Laguerre polynomial L^m_deg(s).
///
/// Evaluated with the three-term degree recurrence
///   (k+1) L^m_{k+1} = (2k + m + 1 - s) L^m_k - (k + m) L^m_{k-1},
/// which is stable in this parameter range; the explicit monomial sum
///   sum_l (-1)^l / l! C(deg+m, deg-l) s^l
/// is kept test-side as an oracle for low degrees.
double laguerre(const LaguerreSpec& spec, double s);
double laguerre(int order_m, int deg, double s);

/// d/ds L^m_deg(s), via the shifted-index identity (L^m_k)' = -L^{m+1}_{k-1}.
double laguerre_deriv(const LaguerreSpec& spec, double s);
double laguerre_deriv(int order_m, int deg, double s);

/// Monomial coefficients of L^m_deg: c[l] multiplies s^l, l = 0..deg.
std::vector<double> laguerre_coeffs(int order_m, int deg);

/// Upper incomplete gamma at integer shape:
///   Gamma(k+1, z) = int_z^inf s^k e^{-s} ds = k! e^{-z} sum_{t=0}^{k} z^t/t!.
/// Requires k >= 0, z >= 0.
double gamma_upper_int(int k, double z);

/// int_0^z e^s s^k ds, summed as sum_j z^{k+1+j} / (j! (k+1+j)).
/// All terms are positive, so the value is accurate to a few ulp for every
/// admissible (k, z); the textbook alternating closed form and the forward
/// recurrence in k both cancel badly in parts of the range. Requires
/// k >= 0, z >= 0.
double exp_lower_int(int k, double z);

/// Kummer confluent hypergeometric function M(a, c, z) by direct series.
///
/// Terms are accumulated until |term| < 1e-17 * |partial sum| (or the series
/// terminates exactly, a a non-positive integer). Throws InvalidArgument when
/// c is a non-positive integer, NonConvergence past 10^6 terms.
double kummer_m(double a, double c, double z);

/// dM/dz (a, c, z) = (a/c) M(a+1, c+1, z).
double kummer_m_dz(double a, double c, double z);

}  // namespace landau::specfun

#endif
