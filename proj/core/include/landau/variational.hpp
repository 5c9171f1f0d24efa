#ifndef LANDAU_VARIATIONAL_HPP
#define LANDAU_VARIATIONAL_HPP

#include <vector>

#include "landau/trialstate.hpp"

namespace landau::variational {

/// Small dense symmetric matrix (full row-major storage; n <= 4 in practice).
struct DenseSym {
  int n = 0;
  std::vector<double> a;

  DenseSym() = default;
  explicit DenseSym(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Gram and H-Gram matrices of the trial family u_{m,1}, ..., u_{m,n_max}.
struct GramPair {
  DenseSym gram;
  DenseSym hgram;
};

/// ||u_{m,n}||^2 on L^2((0,1), r dr), in closed form.
///
/// The substitution s = b r^2 / 2 turns every entry into integrals of
/// s^{m+k} against e^{-s}, e^{+s} and 1 on [0, b/2]; those are evaluated
/// through gamma_upper_int, exp_lower_int and plain power integrals. The
/// e^{b/2}-scale piece enters through the full-line Laguerre orthogonality
/// value, so no term mixes exponential and polynomial scales.
double norm_sq_closed(int m, int n, double b, const trialstate::TrialCoeffs& c);

/// <u_{m,i}, u_{m,j}> with independently supplied branch coefficients.
double u_inner_closed(int m, int i, int j, double b, const trialstate::TrialCoeffs& ci,
                      const trialstate::TrialCoeffs& cj);

/// <R_{m,i}, u_{m,j}>, the residual-trial cross term.
double residual_u_inner_closed(int m, int i, int j, double b, const trialstate::TrialCoeffs& ci,
                               const trialstate::TrialCoeffs& cj);

/// ||R_{m,n}||^2.
double residual_norm_sq_closed(int m, int n, double b, const trialstate::TrialCoeffs& c);

/// Assembles gram(i,j) = <u_i, u_j> and hgram(i,j) = <H u_i, u_j> for the
/// first n_max branches, using <H u_i, u_j> = (2i-1) b <u_i, u_j> + <R_i, u_j>.
/// hgram is asserted symmetric to relative 1e-8 and then symmetrized; a
/// Cholesky pass on gram throws NotPositiveDefinite (with the offending
/// leading minor) when the family is numerically dependent.
GramPair gram_pair(int m, int n_max, double b, const BoundaryCondition& bc);

/// Ascending Ritz values of the pencil (hgram, gram); entry k-1 is an upper
/// bound for the k-th fiber eigenvalue. Requires 1 <= n <= 4.
std::vector<double> rayleigh_ritz_upper(int m, double b, int n, const BoundaryCondition& bc);

/// Uniform lower bound (2n-1) b - floor_c for the n-th fiber eigenvalue,
/// valid across m for the Neumann (hence also Dirichlet) problem.
double landau_floor(int n, double b, double floor_c = 2.0);

/// One certified two-sided bracket for branch n.
struct BracketResult {
  int m = 0;
  int n = 1;
  double b = 0.0;
  BoundaryCondition bc;
  double lower = 0.0;  ///< Temple lower bound
  double upper = 0.0;  ///< Rayleigh-Ritz upper bound
  double rho = 0.0;    ///< Rayleigh quotient of the single trial state
  double mu = 0.0;     ///< spectral floor used below (−inf for n = 1)
  double nu = 0.0;     ///< spectral floor used above, (2n+1) b − floor_c
  bool preconditions_ok = false;  ///< true on any successful return
};

/// Temple lower bound from the single trial state u_{m,n}:
///   lower = (nu <Hu,u> − <Hu,Hu>) / (nu ||u||^2 − <Hu,u>),
/// evaluated through the algebraically identical form
///   (2n−1) b + <R, (2b−C) u − R> / <u, (2b−C) u − R>,
/// which keeps full precision at the exponentially small correction scale.
/// The trial quotient rho must sit strictly inside (mu, nu); outside that
/// window the quotient is meaningless and PreconditionViolated is thrown,
/// naming the failing side. That happens when b is too small for the
/// asymptotic regime at (m, n), or when floor_c pushes nu below rho.
BracketResult temple_lower(int m, double b, int n, const BoundaryCondition& bc,
                           double floor_c = 2.0);

/// Asymptotic eigenvalue with the exponentially small boundary correction:
///   (2n−1+|m|−m) b ± e^{−b/2} b^{2n+|m|} / ((n−1)! (|m|+n−1)! 2^{2(n−1)+|m|}),
/// plus for Dirichlet, minus for Neumann; negative m evaluates the correction
/// at |m| after the 2|m|b shift. Throws InvalidArgument for Robin.
double asymptotic_eig(int m, int n, double b, const BoundaryCondition& bc);

}  // namespace landau::variational

#endif
