#ifndef LANDAU_BANDED_HPP
#define LANDAU_BANDED_HPP

#include <cstddef>
#include <vector>

namespace landau::banded {

/// Symmetric banded matrix; stores the upper band row-wise:
/// entry(i, i+k) for k = 0..hbw lives at d[i*(hbw+1) + k].
struct SymBanded {
  int n = 0;
  int hbw = 0;
  std::vector<double> d;

  SymBanded() = default;
  SymBanded(int n_, int hbw_)
      : n(n_), hbw(hbw_), d(static_cast<std::size_t>(n_) * (hbw_ + 1), 0.0) {}

  double& at(int i, int k) { return d[static_cast<std::size_t>(i) * (hbw + 1) + k]; }
  double at(int i, int k) const { return d[static_cast<std::size_t>(i) * (hbw + 1) + k]; }

  /// Full-matrix accessor (0 outside the band).
  double get(int i, int j) const;
  /// Symmetric set/add through full-matrix indices; (i, j) must be in band.
  void add(int i, int j, double v);

  void matvec(const std::vector<double>& x, std::vector<double>& y) const;
  /// this += alpha * other; shapes must match.
  void axpy(double alpha, const SymBanded& other);
};

/// x^T A y for a symmetric banded A.
double quad_form(const SymBanded& a, const std::vector<double>& x, const std::vector<double>& y);

/// Unpivoted LDL^T factorization of A - sigma * B.
///
/// For symmetric pencils with B positive definite the number of negative
/// pivots equals the number of pencil eigenvalues below sigma (Sylvester),
/// which drives both the bisection counts and the shift-invert solves.
/// `ok` is false when a pivot fell below the breakdown threshold; callers
/// retry with a jittered sigma.
struct BandedLdl {
  int n = 0;
  int hbw = 0;
  std::vector<double> lower;  // L below diagonal, same band layout (k = 1..hbw)
  std::vector<double> diag;   // D
  int negative_pivots = 0;
  bool ok = false;

  /// Solves (L D L^T) x = rhs in place.
  void solve(std::vector<double>& x) const;
};

BandedLdl ldl_factor(const SymBanded& a, const SymBanded& b, double sigma);

}  // namespace landau::banded

#endif
