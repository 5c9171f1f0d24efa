#include "landau/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "landau/errors.hpp"

namespace landau::specfun {

namespace {

// 0! .. 20! are exactly representable in both uint64 and double.
constexpr int kMaxExactFactorial = 20;

const double* exact_factorials() {
  static double table[kMaxExactFactorial + 1];
  static const bool init = [] {
    std::uint64_t f = 1;
    table[0] = 1.0;
    for (int k = 1; k <= kMaxExactFactorial; ++k) {
      f *= static_cast<std::uint64_t>(k);
      table[k] = static_cast<double>(f);
    }
    return true;
  }();
  (void)init;
  return table;
}

}  // namespace

double factorial(int k) {
  if (k < 0) throw InvalidArgument("factorial: negative argument");
  if (k <= kMaxExactFactorial) return exact_factorials()[k];
  return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (n <= kMaxExactFactorial)
    return exact_factorials()[n] / (exact_factorials()[k] * exact_factorials()[n - k]);
  // Multiplicative form; exact in double until the value passes 2^53, which
  // the m, n ranges used here never approach.
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double laguerre(const LaguerreSpec& spec, double s) {
  const int m = spec.order_m;
  const int deg = spec.deg;
  if (m < 0 || deg < 0) throw InvalidArgument("laguerre: order_m and deg must be >= 0");
  if (deg == 0) return 1.0;
  double lkm1 = 1.0;                                    // L^m_0
  double lk = 1.0 + static_cast<double>(m) - s;         // L^m_1
  for (int k = 1; k < deg; ++k) {
    const double lkp1 =
        ((2.0 * k + m + 1.0 - s) * lk - (static_cast<double>(k) + m) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double laguerre(int order_m, int deg, double s) { return laguerre({order_m, deg}, s); }

double laguerre_deriv(const LaguerreSpec& spec, double s) {
  if (spec.order_m < 0 || spec.deg < 0)
    throw InvalidArgument("laguerre_deriv: order_m and deg must be >= 0");
  if (spec.deg == 0) return 0.0;
  return -laguerre({spec.order_m + 1, spec.deg - 1}, s);
}

double laguerre_deriv(int order_m, int deg, double s) {
  return laguerre_deriv({order_m, deg}, s);
}

std::vector<double> laguerre_coeffs(int order_m, int deg) {
  if (order_m < 0 || deg < 0)
    throw InvalidArgument("laguerre_coeffs: order_m and deg must be >= 0");
  std::vector<double> c(static_cast<std::size_t>(deg) + 1);
  double sign = 1.0;
  for (int l = 0; l <= deg; ++l) {
    c[static_cast<std::size_t>(l)] = sign / factorial(l) * binomial(deg + order_m, deg - l);
    sign = -sign;
  }
  return c;
}

double gamma_upper_int(int k, double z) {
  if (k < 0) throw InvalidArgument("gamma_upper_int: k must be >= 0");
  if (z < 0.0) throw InvalidArgument("gamma_upper_int: z must be >= 0");
  // k! e^{-z} sum_{t=0}^{k} z^t / t!, all terms positive.
  double term = 1.0;
  double sum = 1.0;
  for (int t = 1; t <= k; ++t) {
    term *= z / static_cast<double>(t);
    sum += term;
  }
  return factorial(k) * std::exp(-z) * sum;
}

double exp_lower_int(int k, double z) {
  if (k < 0) throw InvalidArgument("exp_lower_int: k must be >= 0");
  if (z < 0.0) throw InvalidArgument("exp_lower_int: z must be >= 0");
  if (z == 0.0) return 0.0;
  // Expanding e^s termwise gives sum_j z^{k+1+j} / (j! (k+1+j)); every term
  // is positive, so unlike the forward recurrence I_k = z^k e^z - k I_{k-1}
  // there is no cancellation anywhere in (k, z). The recurrence loses about
  // a factor (k+1)/z of accuracy per step once z < k.
  double term = std::pow(z, k + 1) / static_cast<double>(k + 1);
  double sum = term;
  for (int j = 1; j <= 600; ++j) {
    term *= z / static_cast<double>(j) * (static_cast<double>(k + j) / static_cast<double>(k + j + 1));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double kummer_m(double a, double c, double z) {
  if (c <= 0.0 && c == std::floor(c))
    throw InvalidArgument("kummer_m: c is a non-positive integer (c = " + std::to_string(c) + ")");
  constexpr double kRelTol = 1e-17;
  constexpr long kMaxTerms = 1000000;
  double term = 1.0;
  double sum = 1.0;
  for (long k = 0; k < kMaxTerms; ++k) {
    const double dk = static_cast<double>(k);
    term *= (a + dk) / (c + dk) * z / (dk + 1.0);
    if (term == 0.0) return sum;  // series terminated (a a non-positive integer)
    sum += term;
    if (std::abs(term) < kRelTol * std::abs(sum)) return sum;
  }
  throw NonConvergence("kummer_m: series did not converge within 1e6 terms", std::abs(term));
}

double kummer_m_dz(double a, double c, double z) {
  return a / c * kummer_m(a + 1.0, c + 1.0, z);
}

}  // namespace landau::specfun
