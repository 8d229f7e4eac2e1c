#pragma once

#include <array>

#include "ncp4/ham/hamiltonian.hpp"
#include "ncp4/toda/toda.hpp"

namespace ncp4 {

/// D^n f.g = sum_k (-1)^k C(n,k) f^(n-k) g^(k) for scalar series.
template <Scalar T>
Series<T> hirota(int n, const Series<T>& f, const Series<T>& g) {
  if (f.dim() != 1 || g.dim() != 1) throw DimensionMismatch("Hirota operator is scalar");
  if (n < 0) throw InsufficientSequence("Hirota order must be non-negative");
  std::vector<Series<T>> df{f}, dg{g};
  for (int k = 0; k < n; ++k) {
    df.push_back(deriv(df.back()));
    dg.push_back(deriv(dg.back()));
  }
  Series<T> r = Series<T>::zero(1, std::min(f.order(), g.order()) - n);
  long binom = 1;
  for (int k = 0; k <= n; ++k) {
    const T c = T(k % 2 == 0 ? binom : -binom);
    r += df[n - k] * dg[k] * c;
    binom = binom * (n - k) / (k + 1);
  }
  return r;
}

/// (1/2 D^2 + kappa_-1 kappa_1) kappa_n . kappa_n - kappa_{n-1} kappa_{n+1}.
template <Scalar T>
Series<T> kappa_toda_bilinear_residual(const ScalarKappaChain<T>& kc, int n) {
  const Series<T>& k = kc.kappa(n);
  return hirota(2, k, k) * ScalarTraits<T>::from_fraction(1, 2) + kc.kappa(-1) * kc.kappa(1) * k * k -
         kc.kappa(n - 1) * kc.kappa(n + 1);
}

/// (D^2 - t D + 2 kappa_-1 kappa_1 + alpha0 - alpha1 + 2n) kappa_n . kappa_{n+1}.
template <Scalar T>
Series<T> bilkap_residual(const ScalarKappaChain<T>& kc, int n, const AlphaParams<T>& al) {
  const Series<T>& f = kc.kappa(n);
  const Series<T>& g = kc.kappa(n + 1);
  const Series<T> t = Series<T>::variable_t(1, f.order());
  const Series<T> pot = kc.kappa(-1) * kc.kappa(1) * T(2) + (al[0] - al[1] + T(2 * n));
  return hirota(2, f, g) - t * hirota(1, f, g) + pot * f * g;
}

/// (D^2 + t D / 3 - 2 t^2 / 9 + (alpha_i - alpha_j) / 3) tau_i . tau_j divided by
/// tau_i tau_j, for (i, j) = (0, 1), (1, 2), (2, 0). With h = tau' / tau,
///   D^2 tau_i . tau_j / (tau_i tau_j) = h_i' + h_i^2 - 2 h_i h_j + h_j' + h_j^2,
///   D tau_i . tau_j / (tau_i tau_j)   = h_i - h_j,
/// and the h_i are the scalar Hamiltonians evaluated on the state. The
/// state is expected to have f0 + f1 + f2 = t.
template <Scalar T>
std::array<Series<T>, 3> tau_bilinear_residual_via_logderivs(const P4State<T>& s) {
  if (s.dim() != 1) throw DimensionMismatch("tau bilinear equations are scalar");
  const Assignment<T> as{{"f0", s.f[0]}, {"f1", s.f[1]}, {"f2", s.f[2]}};
  std::array<Series<T>, 3> h;
  for (int i = 0; i < 3; ++i) h[i] = eval(scalar_hamiltonian(s.alpha, i), as);
  const Series<T> t = Series<T>::variable_t(1, s.order());
  const T third = ScalarTraits<T>::from_fraction(1, 3);
  const T two_ninths = ScalarTraits<T>::from_fraction(2, 9);
  std::array<Series<T>, 3> r;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const Series<T>& a = h[i];
    const Series<T>& b = h[j];
    r[i] = deriv(a) + a * a - a * b * T(2) + deriv(b) + b * b + t * (a - b) * third - t * t * two_ninths +
           (s.alpha[i] - s.alpha[j]) * third;
  }
  return r;
}

}  // namespace ncp4
