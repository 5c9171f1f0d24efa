#ifndef LANDAU_TRIALSTATE_HPP
#define LANDAU_TRIALSTATE_HPP

namespace landau {

/// Boundary condition at r = 1 for the radial fiber operator.
///
/// Robin means u'(1) = gamma * u(1); Neumann is gamma = 0, Dirichlet u(1) = 0.
struct BoundaryCondition {
  enum class Kind { Dirichlet, Neumann, Robin };
  Kind kind = Kind::Dirichlet;
  double gamma = 0.0;

  static BoundaryCondition dirichlet() { return {Kind::Dirichlet, 0.0}; }
  static BoundaryCondition neumann() { return {Kind::Neumann, 0.0}; }
  static BoundaryCondition robin(double gamma) { return {Kind::Robin, gamma}; }
};

/// One angular-momentum fiber of the magnetic Laplacian on the unit disc:
///   H_{m,b} = -d^2/dr^2 - (1/r) d/dr + (m/r - b r/2)^2  on  L^2((0,1), r dr).
struct FiberSpec {
  int m = 0;
  double b = 0.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet();
};

/// Throws InvalidArgument unless b >= 0 and finite, |m| <= 64, gamma finite.
void validate(const FiberSpec& spec);

/// m < 0 fibers reduce once through H_{m,b} = H_{-m,b} + 2|m| b.
struct ReducedFiber {
  FiberSpec spec;      ///< same fiber with m >= 0
  double shift = 0.0;  ///< 2|m|b, to be added back to every eigenvalue
};
ReducedFiber reduce(const FiberSpec& spec);

namespace trialstate {

/// Coefficients of the two exponential branches of a trial state,
///   u_{m,n}(r) = r^m L^m_{n-1}(b r^2/2) (c1 e^{b(1-r^2)/4} + c2 e^{-b(1-r^2)/4}),
/// normalised to c1 = 1 except in the Dirichlet case's fixed (1, -1).
struct TrialCoeffs {
  double c1 = 1.0;
  double c2 = 0.0;
};

/// Coefficients matching the boundary condition at r = 1.
///
/// Dirichlet: (1, -1). Neumann and Robin solve the linear matching condition;
/// throws DegenerateDenominator when the denominator vanishes. Requires
/// m >= 0, n >= 1, b > 0.
TrialCoeffs coefficients(int m, int n, double b, const BoundaryCondition& bc);

/// A fully assembled trial state for branch n of a reduced (m >= 0) fiber.
struct TrialState {
  int m = 0;
  int n = 1;
  double b = 0.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet();
  TrialCoeffs coeffs;
};

/// Builds the trial state for branch n; negative-m fibers are reduced first
/// (the caller adds the reported shift back onto eigenvalue-level results).
TrialState make_trial_state(const FiberSpec& spec, int n);

double eval_trial(const TrialState& ts, double r);
double eval_trial_deriv(const TrialState& ts, double r);

/// Residual against the Landau level:  H_{m,b} u = (2n-1) b u + R_{m,n},
///   R_{m,n}(r) = -2 b c2 r^m e^{-b(1-r^2)/4}
///                  (b r^2 (L^m_{n-1})'(b r^2/2) + (m+1) L^m_{n-1}(b r^2/2)).
double residual_R(const TrialState& ts, double r);

/// (H_{m,b} u)(r) = (2n-1) b u(r) + R_{m,n}(r). This closed form is the
/// definition used downstream (quadratic forms, quadrature cross-checks).
double apply_fiber_operator(const TrialState& ts, double r);

/// The exact ODE identities behind the trial-state construction, for
/// pointwise verification.
enum class OdeIdentity {
  DecayingEigen,       ///< f = r^m e^{-br^2/4} L: H f - (2n-1) b f
  PolynomialFactor,    ///< v = L(br^2/2): -r v'' + (br^2-2m-1) v' - (2n-2) b r v
  LaguerreEquation,    ///< w = L^m_{n-1}(s): s w'' + (m+1-s) w' + (n-1) w
  GrowingCounterpart,  ///< g = r^m e^{+br^2/4} L: H g - (2n-2m-3) b g + 2 b r v' phi
};

/// Left-minus-right value of the named identity. `point` is the radius r for
/// the radial identities and the Laguerre variable s for LaguerreEquation;
/// radial identities require 0 < point < 1 (away from the 1/r singularity).
double ode_residual(OdeIdentity kind, int m, int n, double b, double point);

}  // namespace trialstate
}  // namespace landau

#endif
