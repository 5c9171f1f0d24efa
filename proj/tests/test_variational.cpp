#include <doctest.h>

#include <landau/errors.hpp>
#include <landau/trialstate.hpp>
#include <landau/variational.hpp>

#include <cmath>
#include <limits>

#include "oracles.hpp"

using namespace landau;
using namespace landau::trialstate;
namespace var = landau::variational;

namespace {

double quad_inner(const TrialState& a, const TrialState& b) {
  return oracle::integrate(
      [&](double r) { return eval_trial(a, r) * eval_trial(b, r) * r; }, 0.0, 1.0, 64, 10);
}

double quad_h_inner(const TrialState& a, const TrialState& b) {
  return oracle::integrate(
      [&](double r) { return apply_fiber_operator(a, r) * eval_trial(b, r) * r; }, 0.0, 1.0,
      64, 10);
}

}  // namespace

TEST_SUITE("variational") {

TEST_CASE("norm_sq_closed against direct quadrature") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (double b : {10.0, 20.0, 30.0})
        for (auto bc : {BoundaryCondition::dirichlet(), BoundaryCondition::neumann()}) {
          const TrialState ts = make_trial_state({m, b, bc}, n);
          const double closed = var::norm_sq_closed(m, n, b, ts.coeffs);
          const double quad = quad_inner(ts, ts);
          CHECK(closed == doctest::Approx(quad).epsilon(1e-10));
          CHECK(closed > 0.0);
        }
}

TEST_CASE("norm_sq_closed zero coefficients") {
  CHECK(var::norm_sq_closed(1, 2, 18.0, {0.0, 0.0}) == 0.0);
}

TEST_CASE("norm_sq_closed leading behavior at large b") {
  // Dirichlet m=0, n=1: the closed value approaches e^{b/2}/b
  for (double b : {35.0, 45.0}) {
    const TrialCoeffs c = coefficients(0, 1, b, BoundaryCondition::dirichlet());
    const double ratio = var::norm_sq_closed(0, 1, b, c) * b * std::exp(-0.5 * b);
    CHECK(std::fabs(ratio - 1.0) <= 8.0 / b);
  }
}

TEST_CASE("u_inner_closed symmetry and quadrature agreement") {
  const double b = 22.0;
  for (int m : {0, 2}) {
    const auto bc = BoundaryCondition::neumann();
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const TrialState ui = make_trial_state({m, b, bc}, i);
        const TrialState uj = make_trial_state({m, b, bc}, j);
        const double closed = var::u_inner_closed(m, i, j, b, ui.coeffs, uj.coeffs);
        const double closed_t = var::u_inner_closed(m, j, i, b, uj.coeffs, ui.coeffs);
        CHECK(closed == doctest::Approx(closed_t).epsilon(1e-13));
        CHECK(closed == doctest::Approx(quad_inner(ui, uj))
                            .epsilon(1e-9)
                            .scale(std::sqrt(quad_inner(ui, ui) * quad_inner(uj, uj))));
      }
  }
}

TEST_CASE("residual inner products against quadrature") {
  for (int m : {0, 1, 3})
    for (double b : {12.0, 28.0})
      for (auto bc : {BoundaryCondition::neumann(), BoundaryCondition::robin(1.0)}) {
        for (int i = 1; i <= 3; ++i) {
          const TrialState ui = make_trial_state({m, b, bc}, i);
          const double rr = var::residual_norm_sq_closed(m, i, b, ui.coeffs);
          const double rr_quad = oracle::integrate(
              [&](double r) { return residual_R(ui, r) * residual_R(ui, r) * r; }, 0.0, 1.0,
              64, 10);
          CHECK(rr == doctest::Approx(rr_quad).epsilon(1e-10));
          for (int j = 1; j <= 3; ++j) {
            const TrialState uj = make_trial_state({m, b, bc}, j);
            const double ru = var::residual_u_inner_closed(m, i, j, b, ui.coeffs, uj.coeffs);
            const double ru_quad = oracle::integrate(
                [&](double r) { return residual_R(ui, r) * eval_trial(uj, r) * r; }, 0.0, 1.0,
                64, 10);
            const double scale = std::sqrt(rr_quad * quad_inner(uj, uj)) + 1e-30;
            CHECK(ru == doctest::Approx(ru_quad).epsilon(1e-9).scale(scale));
          }
        }
      }
}

TEST_CASE("gram_pair: entries, symmetry, positivity") {
  for (int m : {0, 2})
    for (double b : {15.0, 25.0})
      for (auto bc : {BoundaryCondition::dirichlet(), BoundaryCondition::neumann()}) {
        const var::GramPair gp = var::gram_pair(m, 3, b, bc);
        // 1x1 block consistent with norm_sq_closed
        const TrialState u1 = make_trial_state({m, b, bc}, 1);
        CHECK(gp.gram.at(0, 0) ==
              doctest::Approx(var::norm_sq_closed(m, 1, b, u1.coeffs)).epsilon(1e-13));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            CHECK(gp.gram.at(i, j) == gp.gram.at(j, i));
            CHECK(gp.hgram.at(i, j) == gp.hgram.at(j, i));
          }
        // H-gram entries against quadrature of the applied operator
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) {
            const TrialState ui = make_trial_state({m, b, bc}, i);
            const TrialState uj = make_trial_state({m, b, bc}, j);
            const double ref = quad_h_inner(ui, uj);
            const double scale =
                std::sqrt(quad_inner(ui, ui) * quad_inner(uj, uj)) * (2 * j - 1) * b;
            CHECK(gp.hgram.at(i - 1, j - 1) ==
                  doctest::Approx(ref).epsilon(1e-9).scale(scale));
          }
      }
}

TEST_CASE("gram_pair rejects a numerically dependent family") {
  // at b = 0.01 the three trial functions collapse onto one another and the
  // positivity gate trips on the third row
  CHECK_THROWS_AS(var::gram_pair(0, 3, 0.01, BoundaryCondition::neumann()),
                  NotPositiveDefinite);
  try {
    var::gram_pair(0, 3, 0.01, BoundaryCondition::neumann());
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.minor >= 1);
    CHECK(e.minor <= 2);
  }
}

TEST_CASE("gram off-diagonal decay") {
  // the 1-2 overlap is exponentially small against the diagonal; measured
  // ratios sit a factor ~5 under b^2 e^{-b/2} across the working range
  for (double b : {20.0, 25.0, 30.0}) {
    const var::GramPair gp = var::gram_pair(0, 2, b, BoundaryCondition::dirichlet());
    const double ratio =
        std::fabs(gp.gram.at(0, 1)) / std::sqrt(gp.gram.at(0, 0) * gp.gram.at(1, 1));
    CHECK(ratio <= b * b * std::exp(-0.5 * b));
    CHECK(ratio > 0.0);
  }
}

TEST_CASE("rayleigh_ritz_upper basics") {
  const double b = 25.0;
  // n = 1 is the plain Rayleigh quotient
  for (auto bc : {BoundaryCondition::dirichlet(), BoundaryCondition::neumann()}) {
    const var::GramPair gp = var::gram_pair(0, 1, b, bc);
    const auto up = var::rayleigh_ritz_upper(0, b, 1, bc);
    REQUIRE(up.size() == 1);
    CHECK(up[0] == doctest::Approx(gp.hgram.at(0, 0) / gp.gram.at(0, 0)).epsilon(1e-12));
  }
  // Neumann sits below the Landau level, Dirichlet above, by the predicted margin
  const auto upn = var::rayleigh_ritz_upper(0, b, 1, BoundaryCondition::neumann());
  CHECK(b - upn[0] > 0.0);
  CHECK(b - upn[0] < 2.0 * b * b * std::exp(-0.5 * b));
  const auto upd = var::rayleigh_ritz_upper(0, b, 2, BoundaryCondition::dirichlet());
  REQUIRE(upd.size() == 2);
  CHECK(upd[0] < upd[1]);
  CHECK(upd[1] - 3.0 * b > 0.0);
  CHECK(upd[1] - 3.0 * b <= 0.5 * std::exp(-0.5 * b) * std::pow(b, 4));
}

TEST_CASE("temple_lower brackets and guards") {
  const double b = 25.0;
  const auto res = var::temple_lower(0, b, 1, BoundaryCondition::neumann(), 2.0);
  CHECK(res.preconditions_ok);
  CHECK(res.lower <= res.upper);
  CHECK(res.mu == -std::numeric_limits<double>::infinity());
  CHECK(res.nu == doctest::Approx(3.0 * b - 2.0));
  CHECK(res.rho > res.mu);
  CHECK(res.rho < res.nu);
  // predicted one-sided deficit: b - lower <= 1.5 b^2 e^{-b/2}
  CHECK(b - res.lower > 0.0);
  CHECK(b - res.lower <= 1.5 * b * b * std::exp(-0.5 * b));

  const auto res2 = var::temple_lower(1, 30.0, 2, BoundaryCondition::dirichlet(), 2.0);
  CHECK(res2.preconditions_ok);
  CHECK(res2.lower <= res2.upper);
  CHECK(res2.mu == doctest::Approx(30.0 + 1.0));

  CHECK_THROWS_AS(var::temple_lower(0, b, 1, BoundaryCondition::neumann(), 1000.0),
                  PreconditionViolated);
}

TEST_CASE("landau_floor") {
  CHECK(var::landau_floor(1, 30.0, 2.0) == 28.0);
  CHECK(var::landau_floor(3, 20.0, 0.0) == 100.0);
}

TEST_CASE("asymptotic_eig") {
  for (double b : {18.0, 30.0}) {
    const double corr = std::exp(-0.5 * b) * b * b;
    CHECK(var::asymptotic_eig(0, 1, b, BoundaryCondition::dirichlet()) ==
          doctest::Approx(b + corr).epsilon(1e-14));
    CHECK(var::asymptotic_eig(0, 1, b, BoundaryCondition::neumann()) ==
          doctest::Approx(b - corr).epsilon(1e-14));
  }
  // negative m shifts by 2|m|b with the |m| correction
  const double b = 24.0;
  CHECK(var::asymptotic_eig(-2, 1, b, BoundaryCondition::neumann()) ==
        doctest::Approx(var::asymptotic_eig(2, 1, b, BoundaryCondition::neumann()) + 4.0 * b)
            .epsilon(1e-14));
  CHECK_THROWS_AS(var::asymptotic_eig(0, 1, 20.0, BoundaryCondition::robin(1.0)),
                  InvalidArgument);
  CHECK_THROWS_AS(var::asymptotic_eig(0, 0, 20.0, BoundaryCondition::neumann()),
                  InvalidArgument);
}

}  // TEST_SUITE
