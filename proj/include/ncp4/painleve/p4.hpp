#pragma once

#include <array>
#include <string>

#include "ncp4/ring/series.hpp"

namespace ncp4 {

template <Scalar T>
struct AlphaParams {
  std::array<T, 3> v{T(0), T(0), T(0)};

  AlphaParams() = default;
  AlphaParams(T a0, T a1, T a2) : v{std::move(a0), std::move(a1), std::move(a2)} {}

  const T& operator[](std::size_t i) const { return v[i % 3]; }
  T& operator[](std::size_t i) { return v[i % 3]; }
  T sum() const { return v[0] + v[1] + v[2]; }

  /// Sum 0 is the Lotka-Volterra variant; anything else but 1 is rejected by callers.
  bool lotka_volterra() const { return ScalarTraits<T>::is_zero(sum()); }

  friend bool operator==(const AlphaParams& a, const AlphaParams& b) { return a.v == b.v; }
  friend AlphaParams operator+(const AlphaParams& a, const AlphaParams& b) {
    return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]};
  }

  std::string str() const {
    return "(" + ScalarTraits<T>::str(v[0]) + ", " + ScalarTraits<T>::str(v[1]) + ", " +
           ScalarTraits<T>::str(v[2]) + ")";
  }
};

/// (f0, f1, f2) together with the parameters of the system they are meant to solve.
template <Scalar T>
struct P4State {
  std::array<Series<T>, 3> f;
  AlphaParams<T> alpha;
  T a = T(1);

  std::size_t dim() const { return f[0].dim(); }
  int order() const { return std::min({f[0].order(), f[1].order(), f[2].order()}); }

  /// Same alphas and a, and the f's agree over their common certified range.
  bool same_as(const P4State& o, double tol = 0.0) const {
    if (!(alpha == o.alpha) || a != o.a) {
      if constexpr (ScalarTraits<T>::exact) return false;
      for (std::size_t i = 0; i < 3; ++i)
        if (!ScalarTraits<T>::is_zero(alpha[i] - o.alpha[i], tol)) return false;
      if (!ScalarTraits<T>::is_zero(a - o.a, tol)) return false;
    }
    for (std::size_t i = 0; i < 3; ++i)
      if (!f[i].agrees_with(o.f[i], tol)) return false;
    return true;
  }
};

/// Right-hand sides of the symmetric system in the one-parameter family
///   f_i' = a f_i f_{i+1} + (1-a) f_{i+1} f_i - a f_{i+2} f_i - (1-a) f_i f_{i+2} + alpha_i.
/// a = 1 is f_i' = f_i f_{i+1} - f_{i+2} f_i + alpha_i.
template <Scalar T>
std::array<Series<T>, 3> p4_rhs(const P4State<T>& s) {
  std::array<Series<T>, 3> r;
  const T& a = s.a;
  const T b = T(1) - a;
  for (std::size_t i = 0; i < 3; ++i) {
    const Series<T>& fi = s.f[i];
    const Series<T>& fj = s.f[(i + 1) % 3];
    const Series<T>& fk = s.f[(i + 2) % 3];
    Series<T> x = (fi * fj - fk * fi) * a;
    if (!ScalarTraits<T>::is_zero(b)) x += (fj * fi - fi * fk) * b;
    r[i] = x + s.alpha[i];
  }
  return r;
}

/// f_i' - rhs_i, certified one order less than the state.
template <Scalar T>
std::array<Series<T>, 3> p4_residual(const P4State<T>& s) {
  const auto rhs = p4_rhs(s);
  return {deriv(s.f[0]) - rhs[0], deriv(s.f[1]) - rhs[1], deriv(s.f[2]) - rhs[2]};
}

/// I = f0 + f1 + f2 - t.
template <Scalar T>
Series<T> first_integral(const P4State<T>& s) {
  return s.f[0] + s.f[1] + s.f[2] - Series<T>::variable_t(s.dim(), s.order());
}

/// Order-by-order integration: (k+1) C_{k+1}(f_i) = [t^k] rhs_i. Only the
/// t^k coefficient of each product is formed at step k, so the whole solve
/// is quadratic in N.
template <Scalar T>
P4State<T> p4_solve_series(const std::array<Mat<T>, 3>& f0, const AlphaParams<T>& alpha, const T& a,
                           int order) {
  const std::size_t d = f0[0].rows();
  for (const auto& m : f0)
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("initial matrices differ in shape");
  if (order < 1) throw TruncationExhausted("solver order must be at least 1");

  std::array<std::vector<Mat<T>>, 3> c;
  for (std::size_t i = 0; i < 3; ++i) c[i].push_back(f0[i]);
  const T b = T(1) - a;

  // [t^k] of x*y for coefficient lists known up to k
  auto conv = [d](const std::vector<Mat<T>>& x, const std::vector<Mat<T>>& y, int k) {
    Mat<T> r = Mat<T>::zero(d);
    for (int j = 0; j <= k; ++j) Mat<T>::multiply_add(r, x[j], y[k - j]);
    return r;
  };

  for (int k = 0; k < order; ++k) {
    std::array<Mat<T>, 3> next;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& fi = c[i];
      const auto& fj = c[(i + 1) % 3];
      const auto& fk = c[(i + 2) % 3];
      Mat<T> r = (conv(fi, fj, k) - conv(fk, fi, k)) * a;
      if (!ScalarTraits<T>::is_zero(b)) r += (conv(fj, fi, k) - conv(fi, fk, k)) * b;
      if (k == 0)
        for (std::size_t q = 0; q < d; ++q) r(q, q) += alpha[i];
      next[i] = r * (T(1) / T(k + 1));
    }
    for (std::size_t i = 0; i < 3; ++i) c[i].push_back(std::move(next[i]));
  }

  P4State<T> s;
  for (std::size_t i = 0; i < 3; ++i) s.f[i] = Series<T>(d, std::move(c[i]));
  s.alpha = alpha;
  s.a = a;
  return s;
}

/// Transposes every coefficient; maps an a-solution to a (1-a)-solution.
template <Scalar T>
P4State<T> transpose_state(const P4State<T>& s) {
  P4State<T> r = s;
  for (auto& fi : r.f) fi = fi.transpose();
  r.a = T(1) - s.a;
  return r;
}

}  // namespace ncp4
