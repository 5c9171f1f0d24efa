#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {
namespace {

// Symmetric tridiagonal QL with implicit shifts; d = diagonal, e = subdiagonal
// (size n-1 on entry). z must come in as the identity; its columns leave as
// eigenvectors.
void tqli(std::vector<double>& d, std::vector<double>& e,
          std::vector<std::vector<double>>& z) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tqli: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (auto& row : z) {
            f = row[i + 1];
            row[i + 1] = s * row[i] + c * f;
            row[i] = c * row[i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

GaussRule gauss(int npts) {
  if (npts < 1) throw std::invalid_argument("gauss: npts must be >= 1");
  const int n = npts;
  std::vector<double> d(n, 0.0), e;
  for (int k = 1; k < n; ++k) e.push_back(k / std::sqrt(4.0 * k * k - 1.0));
  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) z[i][i] = 1.0;
  tqli(d, e, z);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  GaussRule rule;
  rule.x.reserve(n);
  rule.w.reserve(n);
  for (int idx : order) {
    rule.x.push_back(d[idx]);
    rule.w.push_back(2.0 * z[0][idx] * z[0][idx]);
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int npts) {
  const GaussRule rule = gauss(npts);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    double acc = 0.0;
    for (int i = 0; i < npts; ++i) acc += rule.w[i] * f(mid + 0.5 * h * rule.x[i]);
    total += 0.5 * h * acc;
  }
  return total;
}

double bessel_j0(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int j = 1; j < 200; ++j) {
    term *= -q / (static_cast<double>(j) * j);
    sum += term;
    if (std::fabs(term) < 1e-18 * (1.0 + std::fabs(sum))) break;
  }
  return sum;
}

double bessel_j1(double x) {
  const double q = 0.25 * x * x;
  double term = 0.5 * x, sum = term;
  for (int j = 1; j < 200; ++j) {
    term *= -q / (static_cast<double>(j) * (j + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-18 * (1.0 + std::fabs(sum))) break;
  }
  return sum;
}

double bessel_j0_zero(int k) {
  double x = (k - 0.25) * M_PI;
  for (int it = 0; it < 60; ++it) {
    const double f = bessel_j0(x);
    const double fp = -bessel_j1(x);
    const double step = f / fp;
    x -= step;
    if (std::fabs(step) < 1e-15 * x) break;
  }
  return x;
}

double bessel_j1_zero(int k) {
  double x = (k + 0.25) * M_PI;
  for (int it = 0; it < 60; ++it) {
    const double f = bessel_j1(x);
    const double fp = bessel_j0(x) - bessel_j1(x) / x;
    const double step = f / fp;
    x -= step;
    if (std::fabs(step) < 1e-15 * x) break;
  }
  return x;
}

double laguerre_monomial(int m, int deg, double x) {
  // C(deg+m, deg-i) built as a product of rationals; exact at this size.
  double sum = 0.0, xpow = 1.0, ifact = 1.0;
  for (int i = 0; i <= deg; ++i) {
    if (i > 0) {
      xpow *= x;
      ifact *= i;
    }
    double binom = 1.0;
    for (int t = 1; t <= deg - i; ++t)
      binom *= static_cast<double>(m + i + t) / static_cast<double>(t);
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * xpow / ifact;
  }
  return sum;
}

double deriv_central(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double second_deriv_central(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracle
