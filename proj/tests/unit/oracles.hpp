#pragma once

// Independent reference computations used by the unit tests. Nothing here
// calls into the production arithmetic beyond element access.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "ncp4/ring/series.hpp"

namespace oracle {

using ncp4::Mat;
using ncp4::Rational;
using ncp4::Series;

template <class T>
using Grid = std::vector<std::vector<T>>;

template <class T>
Grid<T> grid(const Mat<T>& m) {
  Grid<T> g(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

template <class T>
Grid<T> matmul(const Grid<T>& a, const Grid<T>& b) {
  Grid<T> r(a.size(), std::vector<T>(b.front().size(), T(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

/// Coefficient k of x*y computed entry by entry from the definition.
template <class T>
T product_coeff(const Series<T>& x, const Series<T>& y, int k, std::size_t i, std::size_t j) {
  T s(0);
  for (int p = 0; p <= k; ++p)
    for (std::size_t l = 0; l < x.dim(); ++l) s += x.coeff(p)(i, l) * y.coeff(k - p)(l, j);
  return s;
}

/// Determinant by permutation expansion (exponential, fine for n <= 5).
template <class T>
T leibniz_det(const Grid<T>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Gauss-Jordan with full search for a nonzero pivot; nullopt when singular.
inline std::optional<std::vector<Rational>> gauss_solve(Grid<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

inline std::optional<std::vector<double>> gauss_solve(Grid<double> a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

/// n-th derivative of a series, coefficient by coefficient: k!/(k-n)! C_k.
template <class T>
Series<T> nth_derivative(const Series<T>& x, int n) {
  std::vector<Mat<T>> out;
  for (int k = n; k <= x.order(); ++k) {
    T f(1);
    for (int j = 0; j < n; ++j) f *= T(k - j);
    out.push_back(x.coeff(k) * f);
  }
  return Series<T>(x.dim(), out);
}

/// Determinant of a grid of commuting (d = 1) series by cofactor expansion
/// along the first row.
template <class T>
Series<T> cofactor_det(const Grid<Series<T>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Series<T> total = Series<T>::zero(1, a[0][0].order());
  for (std::size_t c = 0; c < n; ++c) {
    Grid<Series<T>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Series<T>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(row);
    }
    const Series<T> term = a[0][c] * cofactor_det(sub);
    if (c % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

}  // namespace oracle
