#include "landau/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "landau/errors.hpp"
#include "landau/specfun.hpp"

namespace landau::variational {

namespace specfun = landau::specfun;
using trialstate::TrialCoeffs;

namespace {

// ---- compensated summation --------------------------------------------------

// Neumaier variant; terms are sorted by descending magnitude first since the
// closed forms mix scales from e^{b/2} down to unit size.
double stable_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](double x, double y) { return std::abs(x) > std::abs(y); });
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - next) + t;
    else
      comp += (t - next) + sum;
    sum = next;
  }
  return sum + comp;
}

// ---- monomial polynomial helpers (coefficient vectors over s) ---------------

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// P(s) = 2 s L'(s) + (m+1) L(s) for L with monomial coefficients `lag`:
// coefficient t picks up the factor (2t + m + 1).
std::vector<double> residual_poly(int m, const std::vector<double>& lag) {
  std::vector<double> p(lag.size());
  for (std::size_t t = 0; t < lag.size(); ++t)
    p[t] = (2.0 * static_cast<double>(t) + m + 1.0) * lag[t];
  return p;
}

// ---- elementary integrals on [0, b/2] ---------------------------------------

// M! * sum_{t<=M} z^t/t!  =  e^z * Gamma(M+1, z); subtracting this from the
// full-line moment is how the e^{b/2} piece stays polynomial.
double truncated_moment(int bigm, double z) {
  return std::exp(z) * specfun::gamma_upper_int(bigm, z);
}

// e^{-z} * int_0^z s^M e^s ds
double reflected_moment(int bigm, double z) {
  return std::exp(-z) * specfun::exp_lower_int(bigm, z);
}

// int_0^z s^M ds
double power_moment(int bigm, double z) { return std::pow(z, bigm + 1) / (bigm + 1.0); }

// sum_K q_K * moment(m + K, z) with compensated accumulation
template <class Moment>
double weighted_sum(const std::vector<double>& q, int m, double z, Moment&& moment) {
  std::vector<double> terms;
  terms.reserve(q.size());
  for (std::size_t k = 0; k < q.size(); ++k)
    if (q[k] != 0.0) terms.push_back(q[k] * moment(m + static_cast<int>(k), z));
  return stable_sum(terms);
}

void check_closed_form_args(int m, int i, int j, double b) {
  if (m < 0) throw InvalidArgument("closed forms: m must be reduced to >= 0 first");
  if (i < 1 || j < 1) throw InvalidArgument("closed forms: branch indices must be >= 1");
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidArgument("closed forms: b must be > 0");
}

// ---- small dense pencil solver ----------------------------------------------

// Cholesky factor of B (lower); throws NotPositiveDefinite with the index of
// the first failing leading minor.
DenseSym cholesky(const DenseSym& b) {
  const int n = b.n;
  DenseSym l(n);
  for (int j = 0; j < n; ++j) {
    double d = b.at(j, j);
    for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
    if (!(d > 0.0))
      throw NotPositiveDefinite("gram matrix is not positive definite", j);
    l.at(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = b.at(i, j);
      for (int k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k);
      l.at(i, j) = v / l.at(j, j);
    }
  }
  return l;
}

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(DenseSym a) {
  const int n = a.n;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int p = 0; p < n; ++p) {
      diag = std::max(diag, std::abs(a.at(p, p)));
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a.at(p, q)));
    }
    if (off <= 1e-15 * std::max(diag, 1e-300)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double theta = 0.5 * (a.at(q, q) - a.at(p, p)) / apq;
        const double t = ((theta >= 0.0) ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) ev[static_cast<std::size_t>(p)] = a.at(p, p);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Ascending eigenvalues of the pencil (A, B) with B positive definite:
// Cholesky-reduce to standard form, then Jacobi.
std::vector<double> pencil_eigenvalues(const DenseSym& a, const DenseSym& b) {
  const int n = a.n;
  const DenseSym l = cholesky(b);
  // W = L^{-1} A (forward substitution by columns)
  DenseSym w(n);
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      double v = a.at(i, col);
      for (int k = 0; k < i; ++k) v -= l.at(i, k) * w.at(k, col);
      w.at(i, col) = v / l.at(i, i);
    }
  }
  // C = W L^{-T}: solve C L^T = W, i.e. rows of C from forward substitution.
  DenseSym c(n);
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j < n; ++j) {
      double v = w.at(row, j);
      for (int k = 0; k < j; ++k) v -= c.at(row, k) * l.at(j, k);
      c.at(row, j) = v / l.at(j, j);
    }
  }
  return jacobi_eigenvalues(c);
}

}  // namespace

double u_inner_closed(int m, int i, int j, double b, const TrialCoeffs& ci,
                      const TrialCoeffs& cj) {
  check_closed_form_args(m, i, j, b);
  const double z = 0.5 * b;
  const auto li = specfun::laguerre_coeffs(m, i - 1);
  const auto lj = specfun::laguerre_coeffs(m, j - 1);
  const auto prod = poly_mul(li, lj);

  // c1*c1 branch: e^{b/2} int_0^{b/2} s^m L_i L_j e^{-s} ds, split through the
  // full-line orthogonality value so the e^{b/2} factor multiplies an exact
  // Kronecker delta instead of a rounded alternating sum.
  const double ortho = (i == j) ? specfun::factorial(m + i - 1) / specfun::factorial(i - 1) : 0.0;
  std::vector<double> head;
  if (i == j) head.push_back(std::exp(z) * ortho);
  for (std::size_t k = 0; k < prod.size(); ++k)
    if (prod[k] != 0.0) head.push_back(-prod[k] * truncated_moment(m + static_cast<int>(k), z));
  const double g1 = stable_sum(head);

  const double g2 = weighted_sum(prod, m, z, reflected_moment);
  const double g3 = weighted_sum(prod, m, z, power_moment);

  const double pref = std::pow(2.0, m) / std::pow(b, m + 1);
  std::vector<double> parts = {ci.c1 * cj.c1 * g1, ci.c2 * cj.c2 * g2,
                               (ci.c1 * cj.c2 + ci.c2 * cj.c1) * g3};
  return pref * stable_sum(parts);
}

double norm_sq_closed(int m, int n, double b, const TrialCoeffs& c) {
  return u_inner_closed(m, n, n, b, c, c);
}

double residual_u_inner_closed(int m, int i, int j, double b, const TrialCoeffs& ci,
                               const TrialCoeffs& cj) {
  check_closed_form_args(m, i, j, b);
  const double z = 0.5 * b;
  const auto li = specfun::laguerre_coeffs(m, i - 1);
  const auto lj = specfun::laguerre_coeffs(m, j - 1);
  const auto q = poly_mul(residual_poly(m, li), lj);
  const double t_power = weighted_sum(q, m, z, power_moment);
  const double t_refl = weighted_sum(q, m, z, reflected_moment);
  const double pref = std::pow(2.0, m) / std::pow(b, m + 1);
  std::vector<double> parts = {cj.c1 * t_power, cj.c2 * t_refl};
  return -2.0 * b * ci.c2 * pref * stable_sum(parts);
}

double residual_norm_sq_closed(int m, int n, double b, const TrialCoeffs& c) {
  check_closed_form_args(m, n, n, b);
  const double z = 0.5 * b;
  const auto lag = specfun::laguerre_coeffs(m, n - 1);
  const auto p = residual_poly(m, lag);
  const auto q = poly_mul(p, p);
  const double pref = std::pow(2.0, m) / std::pow(b, m + 1);
  return 4.0 * b * b * c.c2 * c.c2 * pref * weighted_sum(q, m, z, reflected_moment);
}

GramPair gram_pair(int m, int n_max, double b, const BoundaryCondition& bc) {
  if (n_max < 1) throw InvalidArgument("gram_pair: n_max must be >= 1");
  check_closed_form_args(m, 1, 1, b);

  std::vector<TrialCoeffs> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) coeffs.push_back(trialstate::coefficients(m, n, b, bc));

  GramPair gp;
  gp.gram = DenseSym(n_max);
  gp.hgram = DenseSym(n_max);
  for (int i = 1; i <= n_max; ++i) {
    for (int j = 1; j <= n_max; ++j) {
      const auto& ci = coeffs[static_cast<std::size_t>(i - 1)];
      const auto& cj = coeffs[static_cast<std::size_t>(j - 1)];
      const double uij = (j >= i) ? u_inner_closed(m, i, j, b, ci, cj)
                                  : gp.gram.at(j - 1, i - 1);
      gp.gram.at(i - 1, j - 1) = uij;
      gp.hgram.at(i - 1, j - 1) =
          (2.0 * i - 1.0) * b * uij + residual_u_inner_closed(m, i, j, b, ci, cj);
    }
  }

  // H is symmetric on the trial span (all members satisfy the boundary
  // condition), so the one-sided entries must agree; assert, then average.
  for (int i = 0; i < n_max; ++i) {
    for (int j = i + 1; j < n_max; ++j) {
      const double hij = gp.hgram.at(i, j), hji = gp.hgram.at(j, i);
      const double scale = std::max({std::abs(hij), std::abs(hji),
                                     1e-3 * std::abs(gp.hgram.at(i, i))});
      if (std::abs(hij - hji) > 1e-8 * std::max(scale, 1e-300))
        throw Error("gram_pair: H-Gram symmetry violated at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + "): " + std::to_string(hij) + " vs " +
                    std::to_string(hji));
      const double avg = 0.5 * (hij + hji);
      gp.hgram.at(i, j) = avg;
      gp.hgram.at(j, i) = avg;
    }
  }

  cholesky(gp.gram);  // positivity gate; throws NotPositiveDefinite
  return gp;
}

std::vector<double> rayleigh_ritz_upper(int m, double b, int n, const BoundaryCondition& bc) {
  if (n < 1 || n > 4) throw InvalidArgument("rayleigh_ritz_upper: need 1 <= n <= 4");
  const GramPair gp = gram_pair(m, n, b, bc);
  return pencil_eigenvalues(gp.hgram, gp.gram);
}

double landau_floor(int n, double b, double floor_c) {
  if (n < 1) throw InvalidArgument("landau_floor: n must be >= 1");
  if (!(b >= 0.0)) throw InvalidArgument("landau_floor: b must be >= 0");
  return (2.0 * n - 1.0) * b - floor_c;
}

BracketResult temple_lower(int m, double b, int n, const BoundaryCondition& bc, double floor_c) {
  check_closed_form_args(m, n, n, b);
  BracketResult res;
  res.m = m;
  res.n = n;
  res.b = b;
  res.bc = bc;

  const TrialCoeffs c = trialstate::coefficients(m, n, b, bc);
  const double nsq = norm_sq_closed(m, n, b, c);
  const double ru = residual_u_inner_closed(m, n, n, b, c, c);
  const double rr = residual_norm_sq_closed(m, n, b, c);
  const double level = (2.0 * n - 1.0) * b;

  res.rho = level + ru / nsq;
  res.mu = (n >= 2) ? (2.0 * n - 3.0) * b + 1.0 : -std::numeric_limits<double>::infinity();
  res.nu = landau_floor(n + 1, b, floor_c);
  res.upper = rayleigh_ritz_upper(m, b, n, bc)[static_cast<std::size_t>(n - 1)];

  const double gap = 2.0 * b - floor_c;  // nu - level
  const double denom = gap * nsq - ru;   // <u, (2b-C) u - R> = (nu - rho) ||u||^2
  if (!(res.rho > res.mu)) {
    std::ostringstream os;
    os << "temple_lower: trial quotient " << res.rho << " not above mu = " << res.mu
       << " (m=" << m << ", n=" << n << ", b=" << b << ")";
    throw PreconditionViolated(os.str());
  }
  if (!(res.rho < res.nu) || !(denom > 0.0)) {
    std::ostringstream os;
    os << "temple_lower: trial quotient " << res.rho << " not below nu = " << res.nu
       << " (m=" << m << ", n=" << n << ", b=" << b << ", floor_c=" << floor_c << ")";
    throw PreconditionViolated(os.str());
  }
  res.preconditions_ok = true;
  res.lower = level + (gap * ru - rr) / denom;
  return res;
}

double asymptotic_eig(int m, int n, double b, const BoundaryCondition& bc) {
  if (n < 1) throw InvalidArgument("asymptotic_eig: n must be >= 1");
  if (!(b > 0.0)) throw InvalidArgument("asymptotic_eig: b must be > 0");
  double sign = 0.0;
  switch (bc.kind) {
    case BoundaryCondition::Kind::Dirichlet: sign = 1.0; break;
    case BoundaryCondition::Kind::Neumann: sign = -1.0; break;
    default:
      throw InvalidArgument("asymptotic_eig: only Dirichlet and Neumann have this expansion");
  }
  const int ma = std::abs(m);
  const double base = (2.0 * n - 1.0 + ma - m) * b;
  const double corr = std::exp(-0.5 * b) * std::pow(b, 2 * n + ma) /
                      (specfun::factorial(n - 1) * specfun::factorial(ma + n - 1) *
                       std::pow(2.0, 2 * (n - 1) + ma));
  return base + sign * corr;
}

}  // namespace variational
