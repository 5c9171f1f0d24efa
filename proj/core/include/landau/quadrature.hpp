#ifndef LANDAU_QUADRATURE_HPP
#define LANDAU_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace landau::quadrature {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes ascending. Computed once per n by
/// Newton iteration on P_n and cached.
const Rule& gauss_legendre(int n);

/// Integrate f over [a, b] with an n-point Gauss-Legendre rule.
template <class F>
double integrate(F&& f, double a, double b, int n) {
  const Rule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

/// Composite rule: [a, b] split into `panels` equal panels, n points each.
template <class F>
double integrate_composite(F&& f, double a, double b, int n, int panels) {
  double acc = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) acc += integrate(f, a + p * h, a + (p + 1) * h, n);
  return acc;
}

}  // namespace landau::quadrature

#endif
