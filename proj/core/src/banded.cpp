#include "landau/banded.hpp"

#include <algorithm>
#include <cmath>

#include "landau/errors.hpp"

namespace landau::banded {

double SymBanded::get(int i, int j) const {
  if (j < i) std::swap(i, j);
  const int k = j - i;
  if (k > hbw) return 0.0;
  return at(i, k);
}

void SymBanded::add(int i, int j, double v) {
  if (j < i) std::swap(i, j);
  const int k = j - i;
  if (k > hbw) throw InvalidArgument("SymBanded::add: entry outside band");
  at(i, k) += v;
}

void SymBanded::matvec(const std::vector<double>& x, std::vector<double>& y) const {
  y.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = at(i, 0) * x[static_cast<std::size_t>(i)];
    const int kmax = std::min(hbw, n - 1 - i);
    for (int k = 1; k <= kmax; ++k) {
      const double v = at(i, k);
      acc += v * x[static_cast<std::size_t>(i + k)];
      y[static_cast<std::size_t>(i + k)] += v * x[static_cast<std::size_t>(i)];
    }
    y[static_cast<std::size_t>(i)] += acc;
  }
}

void SymBanded::axpy(double alpha, const SymBanded& other) {
  if (other.n != n || other.hbw != hbw) throw InvalidArgument("SymBanded::axpy: shape mismatch");
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += alpha * other.d[i];
}

double quad_form(const SymBanded& a, const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> tmp;
  a.matvec(y, tmp);
  double acc = 0.0;
  for (int i = 0; i < a.n; ++i) acc += x[static_cast<std::size_t>(i)] * tmp[static_cast<std::size_t>(i)];
  return acc;
}

BandedLdl ldl_factor(const SymBanded& a, const SymBanded& b, double sigma) {
  const int n = a.n;
  const int hbw = a.hbw;
  BandedLdl f;
  f.n = n;
  f.hbw = hbw;
  f.lower.assign(static_cast<std::size_t>(n) * (hbw + 1), 0.0);
  f.diag.assign(static_cast<std::size_t>(n), 0.0);
  f.ok = true;
  f.negative_pivots = 0;

  // Breakdown threshold relative to the pencil scale.
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(a.at(i, 0)) + std::abs(sigma) * std::abs(b.at(i, 0)));
  const double tiny = 1e-14 * std::max(scale, 1e-300);

  auto lo = [&f, hbw](int i, int k) -> double& {
    return f.lower[static_cast<std::size_t>(i) * (hbw + 1) + k];
  };

  // Column-by-column LDL^T on the banded profile. Row i of L reaches back at
  // most hbw columns, so every dot product below is over a short window.
  for (int j = 0; j < n; ++j) {
    double dj = a.at(j, 0) - sigma * b.at(j, 0);
    const int back = std::min(hbw, j);
    for (int t = 1; t <= back; ++t) {
      const double ljt = lo(j, t);  // L(j, j-t)
      dj -= ljt * ljt * f.diag[static_cast<std::size_t>(j - t)];
    }
    f.diag[static_cast<std::size_t>(j)] = dj;
    if (std::abs(dj) <= tiny) f.ok = false;
    if (dj < 0.0) ++f.negative_pivots;

    const int imax = std::min(n - 1, j + hbw);
    for (int i = j + 1; i <= imax; ++i) {
      const int k = i - j;
      double v = (k <= hbw) ? (a.at(j, k) - sigma * b.at(j, k)) : 0.0;
      // subtract sum over common columns c with j-hbw <= c < j and i-c <= hbw
      const int cmin = std::max(0, i - hbw);
      for (int c = std::max(cmin, j - hbw); c < j; ++c)
        v -= lo(i, i - c) * lo(j, j - c) * f.diag[static_cast<std::size_t>(c)];
      lo(i, k) = (dj != 0.0) ? v / dj : 0.0;
    }
  }
  return f;
}

void BandedLdl::solve(std::vector<double>& x) const {
  auto lo = [this](int i, int k) {
    return lower[static_cast<std::size_t>(i) * (hbw + 1) + k];
  };
  // forward: L z = x
  for (int i = 0; i < n; ++i) {
    double v = x[static_cast<std::size_t>(i)];
    const int back = std::min(hbw, i);
    for (int t = 1; t <= back; ++t) v -= lo(i, t) * x[static_cast<std::size_t>(i - t)];
    x[static_cast<std::size_t>(i)] = v;
  }
  // diagonal
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] /= diag[static_cast<std::size_t>(i)];
  // backward: L^T y = z
  for (int i = n - 1; i >= 0; --i) {
    double v = x[static_cast<std::size_t>(i)];
    const int fwd = std::min(hbw, n - 1 - i);
    for (int t = 1; t <= fwd; ++t) v -= lo(i + t, t) * x[static_cast<std::size_t>(i + t)];
    x[static_cast<std::size_t>(i)] = v;
  }
}

}  // namespace landau::banded
