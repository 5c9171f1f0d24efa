#include "landau/fibersolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"

namespace landau::fibersolver {

using banded::BandedLdl;
using banded::SymBanded;

Mesh Mesh::uniform(int elements) {
  if (elements < 16) throw InvalidArgument("Mesh: need at least 16 elements");
  Mesh mesh;
  mesh.nodes.resize(static_cast<std::size_t>(elements) + 1);
  for (int i = 0; i <= elements; ++i)
    mesh.nodes[static_cast<std::size_t>(i)] = static_cast<double>(i) / elements;
  mesh.nodes.back() = 1.0;
  return mesh;
}

Mesh Mesh::boundary_layer(int elements, double layer_width) {
  if (elements < 16) throw InvalidArgument("Mesh: need at least 16 elements");
  if (!(layer_width > 0.0 && layer_width < 1.0))
    throw InvalidArgument("Mesh: layer_width must be in (0, 1)");
  const int inner = elements / 2;       // elements on [0, 1-w]
  const int outer = elements - inner;   // elements on [1-w, 1]
  const double split = 1.0 - layer_width;
  Mesh mesh;
  mesh.nodes.reserve(static_cast<std::size_t>(elements) + 1);
  for (int i = 0; i < inner; ++i) mesh.nodes.push_back(split * i / inner);
  for (int i = 0; i <= outer; ++i) mesh.nodes.push_back(split + layer_width * i / outer);
  mesh.nodes.back() = 1.0;
  return mesh;
}

Mesh policy_mesh(double b, int elements) {
  const double w = (b > 256.0) ? 8.0 / std::sqrt(b) : 0.5;
  return Mesh::boundary_layer(elements, w);
}

namespace {

struct ShapeSet {
  // values and reference-derivative of each local shape function at a point
  double val[3];
  double der[3];
  int count;
};

ShapeSet shapes(int order, double xi) {
  ShapeSet s{};
  if (order == 1) {
    s.count = 2;
    s.val[0] = 0.5 * (1.0 - xi);
    s.val[1] = 0.5 * (1.0 + xi);
    s.der[0] = -0.5;
    s.der[1] = 0.5;
  } else {
    // nodes: left vertex, midpoint, right vertex
    s.count = 3;
    s.val[0] = 0.5 * xi * (xi - 1.0);
    s.val[1] = 1.0 - xi * xi;
    s.val[2] = 0.5 * xi * (xi + 1.0);
    s.der[0] = xi - 0.5;
    s.der[1] = -2.0 * xi;
    s.der[2] = xi + 0.5;
  }
  return s;
}

DiscreteOperator assemble_impl(const FiberSpec& spec, const Mesh& mesh, int order,
                               double radius) {
  validate(spec);
  if (order != 1 && order != 2) throw InvalidArgument("assemble: order must be 1 or 2");
  if (!(radius > 0.0)) throw InvalidArgument("assemble: radius must be > 0");
  if (mesh.elements() < 16) throw InvalidArgument("assemble: mesh too coarse");

  const ReducedFiber red = reduce(spec);
  const int m = red.spec.m;
  const double b = red.spec.b;
  const int ne = mesh.elements();
  const int n_full = (order == 2) ? 2 * ne + 1 : ne + 1;
  const int hbw = order;
  if (n_full > 4001) throw InvalidArgument("assemble: more than 4000 dof");

  SymBanded k_full(n_full, hbw), m_full(n_full, hbw);
  // quadrature degree 2*order + 2 needs ceil((2*order+3)/2) points; use a
  // couple extra for the 1/r and r^3 coefficient terms
  const int nq = order + 4;
  const auto& rule = quadrature::gauss_legendre(nq);

  for (int e = 0; e < ne; ++e) {
    const double xl = radius * mesh.nodes[static_cast<std::size_t>(e)];
    const double xr = radius * mesh.nodes[static_cast<std::size_t>(e) + 1];
    const double h = xr - xl;
    const double mid = 0.5 * (xl + xr);
    double kloc[3][3] = {};
    double mloc[3][3] = {};
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double xi = rule.nodes[q];
      const double r = mid + 0.5 * h * xi;
      const double w = 0.5 * h * rule.weights[q];
      const ShapeSet s = shapes(order, xi);
      const double mr = (m != 0) ? m / r : 0.0;
      const double pot = (mr - 0.5 * b * r) * (mr - 0.5 * b * r);
      for (int a = 0; a < s.count; ++a) {
        const double da = s.der[a] * 2.0 / h;
        for (int c = a; c < s.count; ++c) {
          const double dc = s.der[c] * 2.0 / h;
          kloc[a][c] += w * r * (da * dc + pot * s.val[a] * s.val[c]);
          mloc[a][c] += w * r * s.val[a] * s.val[c];
        }
      }
    }
    for (int a = 0; a < (order == 2 ? 3 : 2); ++a)
      for (int c = a; c < (order == 2 ? 3 : 2); ++c)
        if (!std::isfinite(kloc[a][c]) || !std::isfinite(mloc[a][c]))
          throw QuadratureBreakdown("assemble: non-finite element integral at element " +
                                    std::to_string(e));
    const int base = (order == 2) ? 2 * e : e;
    for (int a = 0; a < (order == 2 ? 3 : 2); ++a)
      for (int c = a; c < (order == 2 ? 3 : 2); ++c) {
        k_full.add(base + a, base + c, kloc[a][c]);
        m_full.add(base + a, base + c, mloc[a][c]);
      }
  }

  DiscreteOperator op;
  op.spec = spec;
  op.order = order;
  op.reduced_m = m;
  op.shift = red.shift;
  op.origin_pinned = (m != 0);
  op.boundary_eliminated = (spec.bc.kind == BoundaryCondition::Kind::Dirichlet);

  const int lo = op.origin_pinned ? 1 : 0;
  const int hi = n_full - (op.boundary_eliminated ? 1 : 0);
  const int n = hi - lo;
  op.n_dof = n;
  op.stiffness = SymBanded(n, hbw);
  op.mass = SymBanded(n, hbw);
  for (int i = lo; i < hi; ++i)
    for (int k = 0; k <= hbw && i + k < hi; ++k) {
      op.stiffness.at(i - lo, k) = k_full.at(i, k);
      op.mass.at(i - lo, k) = m_full.at(i, k);
    }

  if (spec.bc.kind == BoundaryCondition::Kind::Robin)
    op.stiffness.at(n - 1, 0) -= spec.bc.gamma * radius;

  if (op.shift != 0.0) op.stiffness.axpy(op.shift, op.mass);
  return op;
}

// Inertia count with jitter retries around LDL^T breakdowns.
int inertia_below(const DiscreteOperator& op, double sigma, double jitter_scale) {
  double s = sigma;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const BandedLdl f = banded::ldl_factor(op.stiffness, op.mass, s);
    if (f.ok) return f.negative_pivots;
    s = sigma + jitter_scale * 1e-11 * (attempt + 1.0);
  }
  // Forced count at the final jittered shift; bisection tolerates the bias.
  return banded::ldl_factor(op.stiffness, op.mass, s).negative_pivots;
}

}  // namespace

DiscreteOperator assemble(const FiberSpec& spec, const Mesh& mesh, int order) {
  return assemble_impl(spec, mesh, order, 1.0);
}

DiscreteOperator assemble_scaled(const FiberSpec& spec, const Mesh& mesh, int order,
                                 double radius) {
  return assemble_impl(spec, mesh, order, radius);
}

EigResult solve_lowest(const DiscreteOperator& op, int k) {
  const int n = op.n_dof;
  if (k < 1) throw InvalidArgument("solve_lowest: k must be >= 1");
  if (4 * k > n) throw InvalidArgument("solve_lowest: need 4k <= n_dof");

  const SymBanded& kk = op.stiffness;
  const SymBanded& mm = op.mass;

  double diag_scale = 1.0;
  for (int i = 0; i < n; ++i)
    diag_scale = std::max(diag_scale, std::abs(kk.at(i, 0)) / std::max(mm.at(i, 0), 1e-300));

  // Bracket the k lowest pencil eigenvalues with inertia counts.
  double lo = 0.0;
  if (inertia_below(op, lo, diag_scale) > 0) {
    lo = -1.0;
    while (inertia_below(op, lo, diag_scale) > 0) {
      lo *= 4.0;
      if (lo < -1e12) throw ConvergenceFailure("solve_lowest: no lower spectral bound", 0.0);
    }
  }
  double hi = std::max(1.0, diag_scale);
  while (inertia_below(op, hi, diag_scale) < k) {
    hi *= 4.0;
    if (hi > 1e15) throw ConvergenceFailure("solve_lowest: upper bracket search failed", 0.0);
  }

  EigResult result;
  std::vector<std::vector<double>> basis;  // converged, M-orthonormal
  std::vector<double> tmp(static_cast<std::size_t>(n));

  auto m_dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
    return banded::quad_form(mm, x, y);
  };
  auto deflate = [&](std::vector<double>& x) {
    for (const auto& v : basis) {
      const double c = m_dot(v, x);
      for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] -= c * v[static_cast<std::size_t>(i)];
    }
  };

  for (int j = 1; j <= k; ++j) {
    // Isolate the j-th eigenvalue by bisection on the inertia count.
    double a = lo, bnd = hi;
    int ca = 0;
    for (int it = 0; it < 200; ++it) {
      const double midpoint = 0.5 * (a + bnd);
      const double width = bnd - a;
      if (width <= 1e-7 * (1.0 + std::abs(midpoint))) break;
      const int c = inertia_below(op, midpoint, diag_scale);
      if (c >= j)
        bnd = midpoint;
      else {
        a = midpoint;
        ca = c;
      }
    }
    const int cb = inertia_below(op, bnd, diag_scale);
    if (cb - ca > 1 && (bnd - a) <= 1e-6 * (1.0 + std::abs(bnd)))
      throw ConvergenceFailure(
          "solve_lowest: near-degenerate cluster around lambda = " + std::to_string(0.5 * (a + bnd)),
          bnd - a);

    // Shift-invert iteration at the isolated shift, deflating converged pairs.
    double sigma = 0.5 * (a + bnd);
    BandedLdl fact = banded::ldl_factor(kk, mm, sigma);
    for (int attempt = 1; !fact.ok && attempt < 8; ++attempt) {
      sigma = 0.5 * (a + bnd) + attempt * 1e-10 * (1.0 + std::abs(bnd));
      fact = banded::ldl_factor(kk, mm, sigma);
    }

    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    deflate(x);
    double rho = sigma, resid = 1e300;
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      mm.matvec(x, tmp);
      fact.solve(tmp);
      deflate(tmp);
      const double nrm = std::sqrt(std::max(m_dot(tmp, tmp), 1e-300));
      for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = tmp[static_cast<std::size_t>(i)] / nrm;
      rho = banded::quad_form(kk, x, x) / m_dot(x, x);

      // residual ||K x - rho M x|| / ||M x||
      std::vector<double> kx, mx;
      kk.matvec(x, kx);
      mm.matvec(x, mx);
      double rnum = 0.0, rden = 0.0;
      for (int i = 0; i < n; ++i) {
        const double ri = kx[static_cast<std::size_t>(i)] - rho * mx[static_cast<std::size_t>(i)];
        rnum += ri * ri;
        rden += mx[static_cast<std::size_t>(i)] * mx[static_cast<std::size_t>(i)];
      }
      resid = std::sqrt(rnum) / std::max(std::sqrt(rden), 1e-300);
      if (resid <= 1e-10) {
        converged = true;
        break;
      }
      if ((it + 1) % 6 == 0) {  // re-center the shift
        sigma = rho;
        fact = banded::ldl_factor(kk, mm, sigma);
        for (int attempt = 1; !fact.ok && attempt < 8; ++attempt) {
          sigma = rho + attempt * 1e-10 * (1.0 + std::abs(rho));
          fact = banded::ldl_factor(kk, mm, sigma);
        }
      }
    }
    if (!converged && resid > 1e-9)
      throw ConvergenceFailure("solve_lowest: residual stalled for eigenvalue " +
                                   std::to_string(j),
                               resid);

    // Deterministic sign: largest-magnitude component positive.
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(x[static_cast<std::size_t>(i)]) > std::abs(x[static_cast<std::size_t>(imax)])) imax = i;
    if (x[static_cast<std::size_t>(imax)] < 0.0)
      for (auto& v : x) v = -v;

    result.eigenvalues.push_back(rho);
    result.residuals.push_back(resid);
    result.eigenvectors.push_back(x);
    basis.push_back(std::move(x));
  }
  return result;
}

BranchSweep branch(int m, const std::vector<double>& b_grid, const BoundaryCondition& bc,
                   int n_max, int elements, int order) {
  if (n_max < 1) throw InvalidArgument("branch: n_max must be >= 1");
  BranchSweep sweep;
  for (double b : b_grid) {
    try {
      const Mesh mesh = policy_mesh(b, elements);
      const DiscreteOperator op = assemble({m, b, bc}, mesh, order);
      const EigResult eig = solve_lowest(op, n_max);
      for (int n = 1; n <= n_max; ++n)
        sweep.points.push_back({b, n, eig.eigenvalues[static_cast<std::size_t>(n - 1)]});
    } catch (const Error& e) {
      sweep.failures.push_back({b, e.what()});
    }
  }
  return sweep;
}

}  // namespace landau::fibersolver
