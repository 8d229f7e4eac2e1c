#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <vector>

#include "ncp4/ring/series.hpp"

namespace ncp4 {

/// Minimum separation min |lambda_i(A) + mu_j(B)| between spec(A) and spec(-B).
struct SpectralGap {
  double value = 0.0;
};

/// Computes the gap from row-major double copies of two d x d matrices.
SpectralGap spectral_gap(const std::vector<double>& a, const std::vector<double>& b, std::size_t d);

/// Gap below which order-by-order Sylvester solving is refused.
inline std::atomic<double>& spectral_gap_threshold() {
  static std::atomic<double> threshold{1e-9};
  return threshold;
}

template <Scalar T>
SpectralGap spectral_gap(const Mat<T>& a, const Mat<T>& b) {
  auto to_double = [](const Mat<T>& m) {
    std::vector<double> out;
    out.reserve(m.data().size());
    for (const auto& x : m.data()) {
      if constexpr (ScalarTraits<T>::exact)
        out.push_back(x.get_d());
      else
        out.push_back(x);
    }
    return out;
  };
  return spectral_gap(to_double(a), to_double(b), a.rows());
}

/// Solves a*x + x*b = s order by order. The constant order is a matrix
/// Sylvester equation A0 X0 + X0 B0 = S0; order k has the same operator with
/// the right side corrected by the lower-order convolution terms. The
/// operator is vectorised row-major as A0 (x) I + I (x) B0^T and factored once.
template <Scalar T>
Series<T> sylvester_solve(const Series<T>& a, const Series<T>& b, const Series<T>& s) {
  const std::size_t d = a.dim();
  if (b.dim() != d || s.dim() != d) throw DimensionMismatch("sylvester_solve: dimension mismatch");
  const int order = std::min({a.order(), b.order(), s.order()});

  const SpectralGap gap = spectral_gap(a.coeff(0), b.coeff(0));
  if (gap.value < spectral_gap_threshold().load())
    throw SpectralCollision("spectra of a(0) and -b(0) collide (gap " + std::to_string(gap.value) +
                            ")");

  const Mat<T> id = Mat<T>::identity(d);
  LuDecomposition<T> lu(kronecker(a.coeff(0), id) + kronecker(id, b.coeff(0).transpose()));
  if (lu.singular()) throw SpectralCollision("Sylvester operator is singular");

  auto vec = [d](const Mat<T>& m) {
    Mat<T> v(d * d, 1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) v(i * d + j, 0) = m(i, j);
    return v;
  };
  auto unvec = [d](const Mat<T>& v) {
    Mat<T> m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = v(i * d + j, 0);
    return m;
  };

  std::vector<Mat<T>> x;
  x.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Mat<T> rhs = s.coeff(k);
    for (int j = 1; j <= k; ++j) {
      rhs -= a.coeff(j) * x[k - j];
      rhs -= x[k - j] * b.coeff(j);
    }
    x.push_back(unvec(lu.solve(vec(rhs))));
  }
  return Series<T>(d, std::move(x));
}

}  // namespace ncp4
