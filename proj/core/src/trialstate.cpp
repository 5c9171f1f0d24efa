#include "landau/trialstate.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"
#include "landau/specfun.hpp"

namespace landau {

void validate(const FiberSpec& spec) {
  if (!std::isfinite(spec.b) || spec.b < 0.0)
    throw InvalidArgument("FiberSpec: b must be finite and >= 0");
  if (spec.m < -64 || spec.m > 64) throw InvalidArgument("FiberSpec: |m| must be <= 64");
  if (!std::isfinite(spec.bc.gamma)) throw InvalidArgument("FiberSpec: gamma must be finite");
}

ReducedFiber reduce(const FiberSpec& spec) {
  validate(spec);
  ReducedFiber red{spec, 0.0};
  if (spec.m < 0) {
    red.spec.m = -spec.m;
    red.shift = 2.0 * static_cast<double>(-spec.m) * spec.b;
  }
  return red;
}

namespace trialstate {

namespace specfun = landau::specfun;

TrialCoeffs coefficients(int m, int n, double b, const BoundaryCondition& bc) {
  if (m < 0) throw InvalidArgument("coefficients: m must be reduced to >= 0 first");
  if (n < 1) throw InvalidArgument("coefficients: n must be >= 1");
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidArgument("coefficients: b must be > 0");

  if (bc.kind == BoundaryCondition::Kind::Dirichlet) return {1.0, -1.0};

  const double gamma = (bc.kind == BoundaryCondition::Kind::Robin) ? bc.gamma : 0.0;
  const double z = 0.5 * b;
  const double lag = specfun::laguerre(m, n - 1, z);
  const double dlag = specfun::laguerre_deriv(m, n - 1, z);
  const double num = (z - m + gamma) * lag - b * dlag;
  const double den = (z + m - gamma) * lag + b * dlag;
  const double scale = std::abs((z + m - gamma) * lag) + std::abs(b * dlag);
  if (std::abs(den) <= 1e-14 * std::max(scale, 1.0))
    throw DegenerateDenominator("coefficients: boundary matching denominator vanished (m=" +
                                std::to_string(m) + ", n=" + std::to_string(n) +
                                ", b=" + std::to_string(b) + ")");
  return {1.0, num / den};
}

TrialState make_trial_state(const FiberSpec& spec, int n) {
  const ReducedFiber red = reduce(spec);
  TrialState ts;
  ts.m = red.spec.m;
  ts.n = n;
  ts.b = red.spec.b;
  ts.bc = red.spec.bc;
  ts.coeffs = coefficients(ts.m, n, ts.b, ts.bc);
  return ts;
}

double eval_trial(const TrialState& ts, double r) {
  const double s = 0.5 * ts.b * r * r;
  const double lag = specfun::laguerre(ts.m, ts.n - 1, s);
  const double q = 0.25 * ts.b * (1.0 - r * r);
  const double env = ts.coeffs.c1 * std::exp(q) + ts.coeffs.c2 * std::exp(-q);
  return std::pow(r, ts.m) * lag * env;
}

double eval_trial_deriv(const TrialState& ts, double r) {
  const double b = ts.b;
  const double s = 0.5 * b * r * r;
  const double lag = specfun::laguerre(ts.m, ts.n - 1, s);
  const double dlag = specfun::laguerre_deriv(ts.m, ts.n - 1, s);
  const double q = 0.25 * b * (1.0 - r * r);
  const double ep = std::exp(q), em = std::exp(-q);
  const double env = ts.coeffs.c1 * ep + ts.coeffs.c2 * em;
  const double denv = 0.5 * b * r * (-ts.coeffs.c1 * ep + ts.coeffs.c2 * em);
  const double rm = std::pow(r, ts.m);
  double d = rm * (dlag * b * r * env + lag * denv);
  if (ts.m > 0) d += static_cast<double>(ts.m) * std::pow(r, ts.m - 1) * lag * env;
  return d;
}

double residual_R(const TrialState& ts, double r) {
  const double b = ts.b;
  const double s = 0.5 * b * r * r;
  const double lag = specfun::laguerre(ts.m, ts.n - 1, s);
  const double dlag = specfun::laguerre_deriv(ts.m, ts.n - 1, s);
  const double em = std::exp(-0.25 * b * (1.0 - r * r));
  return -2.0 * b * ts.coeffs.c2 * std::pow(r, ts.m) * em *
         (b * r * r * dlag + (ts.m + 1.0) * lag);
}

double apply_fiber_operator(const TrialState& ts, double r) {
  return (2.0 * ts.n - 1.0) * ts.b * eval_trial(ts, r) + residual_R(ts, r);
}

namespace {

// Value and first two derivatives of v(r) = L^m_{n-1}(b r^2 / 2).
struct Poly3 {
  double v, dv, d2v;
};

Poly3 polynomial_factor(int m, int n, double b, double r) {
  const double s = 0.5 * b * r * r;
  const double lag = specfun::laguerre(m, n - 1, s);
  const double dlag = specfun::laguerre_deriv(m, n - 1, s);
  const double d2lag = (n >= 3) ? specfun::laguerre(m + 2, n - 3, s) : 0.0;
  Poly3 p;
  p.v = lag;
  p.dv = b * r * dlag;
  p.d2v = b * dlag + b * b * r * r * d2lag;
  return p;
}

}  // namespace

double ode_residual(OdeIdentity kind, int m, int n, double b, double point) {
  if (m < 0 || n < 1) throw InvalidArgument("ode_residual: need m >= 0 and n >= 1");
  if (!(b > 0.0)) throw InvalidArgument("ode_residual: need b > 0");

  if (kind == OdeIdentity::LaguerreEquation) {
    const double s = point;
    const double w = specfun::laguerre(m, n - 1, s);
    const double dw = specfun::laguerre_deriv(m, n - 1, s);
    const double d2w = (n >= 3) ? specfun::laguerre(m + 2, n - 3, s) : 0.0;
    return s * d2w + (m + 1.0 - s) * dw + (n - 1.0) * w;
  }

  const double r = point;
  if (!(r > 0.0 && r < 1.0))
    throw InvalidArgument("ode_residual: radial identities need 0 < point < 1");
  const Poly3 p = polynomial_factor(m, n, b, r);

  if (kind == OdeIdentity::PolynomialFactor)
    return -r * p.d2v + (b * r * r - 2.0 * m - 1.0) * p.dv - (2.0 * n - 2.0) * b * r * p.v;

  const double w = (kind == OdeIdentity::DecayingEigen) ? -1.0 : 1.0;  // exponent sign
  // psi = r^m e^{w b r^2/4}; psi'/psi and psi''/psi in closed form.
  const double rm = std::pow(r, m);
  const double psi = rm * std::exp(w * 0.25 * b * r * r);
  const double lp = m / r + w * 0.5 * b * r;                  // psi'/psi
  const double lpp = lp * lp - m / (r * r) + w * 0.5 * b;     // psi''/psi
  const double f = psi * p.v;
  const double df = psi * (lp * p.v + p.dv);
  const double d2f = psi * (lpp * p.v + 2.0 * lp * p.dv + p.d2v);
  const double pot = std::pow(m / r - 0.5 * b * r, 2);
  const double hf = -d2f - df / r + pot * f;

  if (kind == OdeIdentity::DecayingEigen) return hf - (2.0 * n - 1.0) * b * f;
  return hf - (2.0 * n - 2.0 * m - 3.0) * b * f + 2.0 * b * r * p.dv * psi;
}

}  // namespace trialstate
}  // namespace landau
