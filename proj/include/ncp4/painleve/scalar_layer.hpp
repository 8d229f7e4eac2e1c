#pragma once

#include "ncp4/painleve/p4.hpp"
#include "ncp4/toda/toda.hpp"

namespace ncp4 {

/// Residual of the scalar second-order equation at lattice index n:
///   y'' - [ 1/2 y^{-1} (y')^2 + 3/2 y^3 - 2 t y^2 + (1/2 t^2 + alpha0 - alpha1 + 2n) y - 1/2 alpha2^2 y^{-1} ].
template <Scalar T>
Series<T> scalar_p4_residual(const Series<T>& y, int n, const AlphaParams<T>& al) {
  if (y.dim() != 1) throw DimensionMismatch("scalar P4 residual needs d = 1");
  const T half = ScalarTraits<T>::from_fraction(1, 2);
  const Series<T> t = Series<T>::variable_t(1, y.order());
  const Series<T> yi = inv(y);
  const Series<T> y1 = deriv(y);
  const Series<T> y2 = y * y;
  const Series<T> coef = t * t * half + (al[0] - al[1] + T(2 * n));
  const Series<T> rhs = yi * y1 * y1 * half + y2 * y * ScalarTraits<T>::from_fraction(3, 2) - t * y2 * T(2) +
                        coef * y - yi * (al[2] * al[2] * half);
  return deriv(y1) - rhs;
}

/// y_n = kappa_{n+1}' kappa_{n+1}^{-1} - kappa_n' kappa_n^{-1} + t.
template <Scalar T>
Series<T> scalar_yn(const ScalarKappaChain<T>& kc, int n) {
  const Series<T>& a = kc.kappa(n + 1);
  const Series<T>& b = kc.kappa(n);
  const Series<T> r = deriv(a) * inv(a) - deriv(b) * inv(b);
  return r + Series<T>::variable_t(1, r.order());
}

template <Scalar T>
struct ScalarP4Data {
  int n = 0;
  Series<T> y;  ///< y_n in case (a), y_{n-1} in case (b)
  Series<T> z;
  Series<T> z_condition;
  Series<T> y_equation;
  /// Lattice index of the second-order equation y satisfies.
  int p4_index = 0;
};

/// z_n = kappa_{n-1} kappa_n^{-2} kappa_{n+1} - (alpha1 + alpha2 - n), paired with
/// y_n for n >= 0 (case a) or y_{n-1} for n <= 0 (case b, chosen by `negative`).
///   (a)  -z' = y^{-1} z^2 + (alpha2 - y^2) y^{-1} z - (alpha1 + alpha2 - n) y,  -y' = y^2 + 2z - t y + alpha2
///   (b)   z' = same right side,                                                y' = y^2 + 2z - t y + alpha2
template <Scalar T>
ScalarP4Data<T> scalar_zn(const ScalarKappaChain<T>& kc, int n, const AlphaParams<T>& al, bool negative) {
  ScalarP4Data<T> out;
  out.n = n;
  const Series<T> kn_inv = inv(kc.kappa(n));
  out.z = kc.kappa(n - 1) * kn_inv * kn_inv * kc.kappa(n + 1) - (al[1] + al[2] - T(n));
  out.y = scalar_yn(kc, negative ? n - 1 : n);
  out.p4_index = negative ? n - 1 : n;

  const Series<T>& y = out.y;
  const Series<T>& z = out.z;
  const Series<T> yi = inv(y);
  const Series<T> t = Series<T>::variable_t(1, y.order());
  const Series<T> zrhs = yi * z * z + (al[2] - y * y) * yi * z - y * (al[1] + al[2] - T(n));
  const Series<T> yrhs = y * y + z * T(2) - t * y + al[2];
  const T sign = negative ? T(1) : T(-1);
  out.z_condition = deriv(z) * sign - zrhs;
  out.y_equation = deriv(y) * sign - yrhs;
  return out;
}

/// kappa_-1' kappa_1' + t (kappa_-1' kappa_1 - kappa_-1 kappa_1')
///   + kappa_-1^2 kappa_1^2 - (t^2 - alpha0 + alpha1 + 1) kappa_-1 kappa_1 - alpha1 (alpha0 - 1).
template <Scalar T>
Series<T> third_condition_residual(const Series<T>& k1, const Series<T>& km1, const AlphaParams<T>& al) {
  if (k1.dim() != 1) throw DimensionMismatch("third condition is a d = 1 relation");
  const Series<T> t = Series<T>::variable_t(1, k1.order());
  const Series<T> d1 = deriv(k1), dm1 = deriv(km1);
  const Series<T> p = km1 * k1;
  return dm1 * d1 + t * (dm1 * k1 - km1 * d1) + p * p - (t * t + (T(1) - al[0] + al[1])) * p -
         al[1] * (al[0] - T(1));
}

/// kappa_-1'(0) solving the third condition at t = 0 (needs kappa_1'(0) != 0):
///   [alpha1 (alpha0 - 1) - kappa_-1^2 kappa_1^2 + (1 + alpha1 - alpha0) kappa_-1 kappa_1] / kappa_1'.
template <Scalar T>
T third_condition_kappa_m1_prime(const T& k1, const T& k1_prime, const T& km1, const AlphaParams<T>& al) {
  if (ScalarTraits<T>::is_zero(k1_prime)) throw NonInvertibleConstantTerm("kappa_1'(0) = 0");
  const T p = km1 * k1;
  return (al[1] * (al[0] - T(1)) - p * p + (T(1) + al[1] - al[0]) * p) / k1_prime;
}

}  // namespace ncp4
