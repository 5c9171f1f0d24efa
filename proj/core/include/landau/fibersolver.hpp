#ifndef LANDAU_FIBERSOLVER_HPP
#define LANDAU_FIBERSOLVER_HPP

#include <string>
#include <vector>

#include "landau/banded.hpp"
#include "landau/trialstate.hpp"

namespace landau::fibersolver {

/// 1D mesh of [0, 1] by element end nodes; first node 0, last node 1.
struct Mesh {
  std::vector<double> nodes;

  int elements() const { return static_cast<int>(nodes.size()) - 1; }

  /// Uniform mesh with `elements` >= 16 elements.
  static Mesh uniform(int elements);

  /// Mesh refined toward r = 1: at least a third of the elements lie in
  /// [1 - layer_width, 1] (half, in this construction). 0 < layer_width < 1.
  static Mesh boundary_layer(int elements, double layer_width);
};

/// Standard mesh for field strength b: boundary layer of width
/// min(1/2, 8/sqrt(b)), uniform when b is so small the layer fills the disc.
Mesh policy_mesh(double b, int elements = 320);

/// Assembled stiffness/mass pencil for one fiber.
///
/// Dirichlet eliminates the r = 1 dof; m != 0 pins the r = 0 dof (the m = 0
/// fiber keeps it, its natural boundary condition at the origin). Robin
/// subtracts gamma at the (r = 1, r = 1) entry. Negative m is reduced to
/// |m| and the 2|m|b shift materialized into the stiffness matrix.
struct DiscreteOperator {
  banded::SymBanded stiffness;
  banded::SymBanded mass;
  int n_dof = 0;
  int order = 2;
  FiberSpec spec;           ///< as given (m may be negative)
  int reduced_m = 0;
  double shift = 0.0;       ///< 2|m|b already added into stiffness
  bool origin_pinned = false;
  bool boundary_eliminated = false;
};

/// Assembles the weak form of H_{m,b} with Lagrange elements of the given
/// order (1 or 2) and Gauss-Legendre quadrature of degree >= 2*order + 2.
/// Throws QuadratureBreakdown if any element integral is non-finite.
DiscreteOperator assemble(const FiberSpec& spec, const Mesh& mesh, int order = 2);

/// Same assembly on the disc of the given radius (nodes scaled by `radius`),
/// for the field-rescaling equivalence check. radius > 0.
DiscreteOperator assemble_scaled(const FiberSpec& spec, const Mesh& mesh, int order,
                                 double radius);

/// Lowest eigenpairs of the generalized pencil (stiffness, mass).
struct EigResult {
  std::vector<double> eigenvalues;               ///< ascending
  std::vector<std::vector<double>> eigenvectors; ///< M-normalized dof vectors
  std::vector<double> residuals;                 ///< ||(K - lambda M) x||_2 / ||M x||_2
};

/// Shift-invert inverse iteration with deflation. Eigenvalue ordering is
/// certified by LDL^T inertia counts; candidate shifts come from bisection
/// on those counts, and each pair is polished until its residual is below
/// 1e-10 (throws ConvergenceFailure past the iteration cap, or when a
/// near-degenerate cluster defeats the bisection). Deterministic: all-ones
/// starts, orthogonalized against the converged set. Requires 4k <= n_dof.
EigResult solve_lowest(const DiscreteOperator& op, int k);

/// One swept eigenvalue branch point.
struct BranchPoint {
  double b = 0.0;
  int n = 1;
  double lambda = 0.0;
};
struct BranchFailure {
  double b = 0.0;
  std::string reason;
};
struct BranchSweep {
  std::vector<BranchPoint> points;    ///< grouped by b ascending, then n
  std::vector<BranchFailure> failures;
};

/// Sweeps branches n = 1..n_max over a b grid with the policy mesh.
/// Per-point solver failures are recorded, not thrown.
BranchSweep branch(int m, const std::vector<double>& b_grid, const BoundaryCondition& bc,
                   int n_max, int elements = 320, int order = 2);

}  // namespace landau::fibersolver

#endif
