#include "skewsim/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "skewsim/errors.hpp"

namespace skewsim {

namespace {

// Householder reduction of a (row-major, symmetric) matrix to tridiagonal
// form, eigenvalues-only variant: the orthogonal transform is not
// accumulated and the matrix is used as scratch. On return d holds the
// diagonal and e[1..n-1] the subdiagonal (e[0] = 0).
void tridiagonalize(double* a, int n, double* d, double* e) {
  auto at = [a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          double gg = 0.0;
          for (int k = 0; k <= j; ++k) gg += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) gg += at(k, j) * at(i, k);
          e[j] = gg / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          const double gg = e[j] - hh * f;
          e[j] = gg;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + gg * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix,
// eigenvalues only. Throws NumericError past the per-eigenvalue sweep
// budget.
void ql_implicit(double* d, double* e, int n, int budget) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd || std::fabs(e[m]) < std::numeric_limits<double>::min())
          break;
      }
      if (m != l) {
        if (iter++ == budget)
          throw NumericError("QL iteration did not converge within " + std::to_string(budget) +
                             " sweeps (matrix order " + std::to_string(n) + ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            // Deflate: a rotation annihilated early.
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, int iteration_budget) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ParameterError("matrix buffer size does not match order n");
  if (iteration_budget < 1) throw ParameterError("iteration budget must be positive");
  if (n == 0) return {};
  if (n == 1) return {a[0]};

  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
  tridiagonalize(a.data(), n, d.data(), e.data());
  ql_implicit(d.data(), e.data(), n, iteration_budget);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace skewsim
