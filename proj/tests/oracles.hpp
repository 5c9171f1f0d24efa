#ifndef LANDAU_TESTS_ORACLES_HPP
#define LANDAU_TESTS_ORACLES_HPP

// Reference-value generators for the test suite. Everything here is
// implemented independently of the library under test: the quadrature rule
// comes from Golub-Welsch (tridiagonal QL) rather than Newton on the
// recurrence, Bessel zeros from Newton on the defining series, Laguerre
// values from the explicit binomial sum.

#include <functional>
#include <vector>

namespace oracle {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1], ascending
  std::vector<double> w;
};

GaussRule gauss(int npts);

// Composite Gauss-Legendre on [a, b]: `panels` equal subintervals with an
// `npts`-point rule on each.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int npts);

double bessel_j0(double x);
double bessel_j1(double x);

// k-th positive zero (k >= 1).
double bessel_j0_zero(int k);
double bessel_j1_zero(int k);

// Associated Laguerre L^m_deg(x) as the explicit sum
// sum_{i=0}^{deg} (-1)^i C(deg+m, deg-i) x^i / i!.
double laguerre_monomial(int m, int deg, double x);

double deriv_central(const std::function<double(double)>& f, double x, double h);
double second_deriv_central(const std::function<double(double)>& f, double x, double h);

}  // namespace oracle

#endif
