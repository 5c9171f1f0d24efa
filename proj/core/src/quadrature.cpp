#include "landau/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "landau/errors.hpp"

namespace landau::quadrature {

namespace {

// P_n(x) and P_n'(x) by the Legendre three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double pm1 = 1.0, pc = x;
  for (int k = 1; k < n; ++k) {
    const double pp = ((2.0 * k + 1.0) * x * pc - k * pm1) / (k + 1.0);
    pm1 = pc;
    pc = pp;
  }
  p = pc;
  dp = n * (x * pc - pm1) / (x * x - 1.0);
}

Rule build(int n) {
  Rule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: need n >= 1");
  if (n == 1) {
    static const Rule r1{{0.0}, {2.0}};
    return r1;
  }
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace landau::quadrature
