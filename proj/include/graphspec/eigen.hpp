#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace graphspec {

struct eigen_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real symmetric matrix, lower triangle stored (symmetry exact by storage).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), a_((std::size_t)n * (n + 1) / 2, 0.0) {
    if (n < 1) throw eigen_error("SymmetricMatrix: n >= 1");
  }

  int dim() const { return n_; }

  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v) { a_[idx(i, j)] = v; }

  double inf_norm() const {
    double best = 0;
    for (int i = 0; i < n_; ++i) {
      double row = 0;
      for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
      best = std::max(best, row);
    }
    return best;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < j) std::swap(i, j);
    return (std::size_t)i * (i + 1) / 2 + j;
  }
  int n_;
  std::vector<double> a_;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;                 // ascending
  std::vector<std::vector<double>> eigenvectors;   // eigenvectors[k] pairs with eigenvalues[k]
  std::optional<double> residual;                  // max ||M v - lambda v||_inf, when vectors computed
};

namespace detail {

// Householder reduction to tridiagonal form (tred2). If accumulate, z ends up
// holding the orthogonal transform; otherwise only d, e are meaningful.
inline void tridiagonalize(std::vector<std::vector<double>>& z, std::vector<double>& d,
                           std::vector<double>& e, bool accumulate) {
  int n = (int)z.size();
  for (int i = n - 1; i > 0; --i) {
    int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(z[i][k]);
      if (scale == 0.0) {
        e[i] = z[i][l];
      } else {
        for (int k = 0; k <= l; ++k) {
          z[i][k] /= scale;
          h += z[i][k] * z[i][k];
        }
        double f = z[i][l];
        double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
        e[i] = scale * g;
        h -= f * g;
        z[i][l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (accumulate) z[j][i] = z[i][j] / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += z[j][k] * z[i][k];
          for (int k = j + 1; k <= l; ++k) g += z[k][j] * z[i][k];
          e[j] = g / h;
          f += e[j] * z[i][j];
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = z[i][j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) z[j][k] -= f * e[k] + g * z[i][k];
        }
      }
    } else {
      e[i] = z[i][l];
    }
    d[i] = h;
  }
  if (accumulate) d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (accumulate) {
      int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += z[i][k] * z[k][j];
          for (int k = 0; k <= l; ++k) z[k][j] -= g * z[k][i];
        }
      }
      d[i] = z[i][i];
      z[i][i] = 1.0;
      for (int j = 0; j <= l; ++j) z[j][i] = z[i][j] = 0.0;
    } else {
      d[i] = z[i][i];
    }
  }
}

inline double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Implicit-shift QL with deflation (tqli). Iteration cap per eigenvalue: 60.
inline void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                        std::vector<std::vector<double>>* z) {
  int n = (int)d.size();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter > 60)
          throw eigen_error("eigen_spectrum: QL failed to converge after 60 iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
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
          if (z) {
            for (int k = 0; k < n; ++k) {
              f = (*z)[k][i + 1];
              (*z)[k][i + 1] = s * (*z)[k][i] + c * f;
              (*z)[k][i] = c * (*z)[k][i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

// Full spectrum of a real symmetric matrix, ascending. Deterministic for fixed
// input; throws on non-convergence, never returns silently wrong values.
inline SpectrumResult eigen_spectrum(const SymmetricMatrix& m, bool want_vectors) {
  int n = m.dim();
  std::vector<std::vector<double>> z(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z[i][j] = m(i, j);
  std::vector<double> d(n), e(n);
  if (n == 1) {
    SpectrumResult r;
    r.eigenvalues = {m(0, 0)};
    if (want_vectors) {
      r.eigenvectors = {{1.0}};
      r.residual = 0.0;
    }
    return r;
  }
  detail::tridiagonalize(z, d, e, want_vectors);
  detail::ql_implicit(d, e, want_vectors ? &z : nullptr);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return d[a] < d[b]; });

  SpectrumResult r;
  r.eigenvalues.resize(n);
  for (int k = 0; k < n; ++k) r.eigenvalues[k] = d[perm[k]];
  if (want_vectors) {
    r.eigenvectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) r.eigenvectors[k][i] = z[i][perm[k]];
    double res = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += m(i, j) * r.eigenvectors[k][j];
        res = std::max(res, std::abs(acc - r.eigenvalues[k] * r.eigenvectors[k][i]));
      }
    }
    r.residual = res;
  }
  return r;
}

}  // namespace graphspec
