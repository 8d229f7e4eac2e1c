#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncp4/qdet/hankel.hpp"

namespace ncp4 {

namespace detail {

/// x_0 = seed, x_n = x_{n-1}' + sum_{i+j=n-2} x_i * middle * x_j.
template <Scalar T>
std::vector<Series<T>> moment_sequence(const Series<T>& seed, const Series<T>& middle, int count) {
  if (count < 0) throw InsufficientSequence("negative sequence length");
  std::vector<Series<T>> x{seed};
  for (int n = 1; n <= count; ++n) {
    Series<T> next = deriv(x[n - 1]);
    for (int i = 0; i <= n - 2; ++i) next += x[i] * middle * x[n - 2 - i];
    x.push_back(std::move(next));
  }
  return x;
}

}  // namespace detail

/// a_0..a_count with a_0 = kappa_1 and kappa_{-1} in the middle of the sum.
template <Scalar T>
std::vector<Series<T>> build_a_seq(const Series<T>& kappa1, const Series<T>& kappa_m1, int count) {
  return detail::moment_sequence(kappa1, kappa_m1, count);
}

/// b_0..b_count, the mirror of build_a_seq.
template <Scalar T>
std::vector<Series<T>> build_b_seq(const Series<T>& kappa1, const Series<T>& kappa_m1, int count) {
  return detail::moment_sequence(kappa_m1, kappa1, count);
}

/// Quasideterminant solutions of both noncommutative Toda chains generated
/// from kappa_1, kappa_{-1}.
///
///   theta_0 = kappa_{-1}^{-1},  theta_{p+1} = |A_p|_pp,  A_p = (a_{i+j})_{0..p}
///   eta_0   = kappa_1^{-1},     eta_{-p-1}  = |B_p|_pp,  B_p = (b_{i+j})_{0..p}
///
/// Each step of the a/b recursion costs one derivative, so theta_{p+1} is
/// certified two orders less per p; the truncation tracking in Series does
/// the bookkeeping.
template <Scalar T>
class TodaChain {
 public:
  TodaChain(Series<T> kappa1, Series<T> kappa_m1, int nmax, int mmax)
      : kappa1_(std::move(kappa1)), kappa_m1_(std::move(kappa_m1)), nmax_(nmax), mmax_(mmax) {
    if (kappa1_.dim() != kappa_m1_.dim()) throw DimensionMismatch("kappa_1 and kappa_-1 differ in d");
    if (nmax < 1 || mmax < 1) throw InsufficientSequence("chain needs nmax, mmax >= 1");
    a_ = build_a_seq(kappa1_, kappa_m1_, 2 * nmax - 2);
    b_ = build_b_seq(kappa1_, kappa_m1_, 2 * mmax - 2);

    theta_.push_back(checked(inv(kappa_m1_), "theta_0"));
    for (int p = 0; p + 1 <= nmax; ++p)
      theta_.push_back(checked(almost_hankel_qdet(HankelSpec<T>{a_, std::size_t(p), {}}),
                               "theta_" + std::to_string(p + 1)));
    eta_.push_back(checked(inv(kappa1_), "eta_0"));
    for (int p = 0; p + 1 <= mmax; ++p)
      eta_.push_back(checked(almost_hankel_qdet(HankelSpec<T>{b_, std::size_t(p), {}}),
                             "eta_-" + std::to_string(p + 1)));
  }

  const Series<T>& kappa1() const noexcept { return kappa1_; }
  const Series<T>& kappa_m1() const noexcept { return kappa_m1_; }
  int nmax() const noexcept { return nmax_; }
  int mmax() const noexcept { return mmax_; }
  std::size_t dim() const { return kappa1_.dim(); }
  const std::vector<Series<T>>& a_seq() const noexcept { return a_; }
  const std::vector<Series<T>>& b_seq() const noexcept { return b_; }

  /// theta_n for 0 <= n <= nmax.
  const Series<T>& theta(int n) const {
    if (n < 0 || n > nmax_) throw InsufficientSequence("theta index " + std::to_string(n) + " outside chain");
    return theta_[n];
  }

  /// eta_m for -mmax <= m <= 0; eta_1 is taken as theta_2^{-1}, the value
  /// that continues the identity eta_0 = theta_1^{-1}.
  Series<T> eta(int m) const {
    if (m == 1) return inv(theta(2));
    if (m > 0 || -m > mmax_) throw InsufficientSequence("eta index " + std::to_string(m) + " outside chain");
    return eta_[-m];
  }

  /// (theta_n' theta_n^{-1})' - theta_{n+1} theta_n^{-1} + theta_n theta_{n-1}^{-1}, 1 <= n < nmax.
  Series<T> residual_theta(int n) const {
    if (n < 1 || n >= nmax_) throw InsufficientSequence("theta residual needs 1 <= n < nmax");
    const Series<T> ti = inv(theta(n));
    return deriv(deriv(theta(n)) * ti) - theta(n + 1) * ti + theta(n) * inv(theta(n - 1));
  }

  /// (eta_m^{-1} eta_m')' - eta_m^{-1} eta_{m-1} + eta_{m+1}^{-1} eta_m, -mmax < m <= 0.
  Series<T> residual_eta(int m) const {
    if (m > 0 || -m >= mmax_) throw InsufficientSequence("eta residual needs -mmax < m <= 0");
    const Series<T> em = eta(m);
    const Series<T> ei = inv(em);
    return deriv(ei * deriv(em)) - ei * eta(m - 1) + inv(eta(m + 1)) * em;
  }

 private:
  static Series<T> checked(Series<T> x, const std::string& name) {
    if (!has_invertible_constant_term(x))
      throw NonInvertibleConstantTerm(name + " has a singular constant term");
    return x;
  }

  Series<T> kappa1_, kappa_m1_;
  int nmax_, mmax_;
  std::vector<Series<T>> a_, b_, theta_, eta_;
};

/// d = 1 tau-side data: kappa_n is the |n| x |n| Hankel determinant of the
/// a-sequence (n > 0) or b-sequence (n < 0), kappa_0 = 1.
template <Scalar T>
class ScalarKappaChain {
 public:
  ScalarKappaChain(const Series<T>& kappa1, const Series<T>& kappa_m1, int nmax) : nmax_(nmax) {
    if (kappa1.dim() != 1 || kappa_m1.dim() != 1)
      throw DimensionMismatch("scalar kappa chain needs d = 1");
    if (nmax < 1) throw InsufficientSequence("scalar kappa chain needs nmax >= 1");
    const auto a = build_a_seq(kappa1, kappa_m1, 2 * nmax - 2);
    const auto b = build_b_seq(kappa1, kappa_m1, 2 * nmax - 2);
    const int order = std::min(kappa1.order(), kappa_m1.order());
    kappa_.emplace(0, Series<T>::identity(1, order));
    for (int n = 1; n <= nmax; ++n) {
      kappa_.emplace(n, commutative_determinant(hankel(HankelSpec<T>{a, std::size_t(n - 1), {}})));
      kappa_.emplace(-n, commutative_determinant(hankel(HankelSpec<T>{b, std::size_t(n - 1), {}})));
    }
  }

  int nmax() const noexcept { return nmax_; }

  const Series<T>& kappa(int n) const {
    auto it = kappa_.find(n);
    if (it == kappa_.end()) throw InsufficientSequence("kappa index " + std::to_string(n) + " outside chain");
    return it->second;
  }

  /// kappa_{n+1} kappa_{n-1} - kappa_n'' kappa_n + (kappa_n')^2 - kappa_{-1} kappa_1 kappa_n^2.
  Series<T> toda_residual(int n) const {
    const Series<T>& k = kappa(n);
    const Series<T> k1 = deriv(k);
    return kappa(n + 1) * kappa(n - 1) - deriv(k1) * k + k1 * k1 - kappa(-1) * kappa(1) * k * k;
  }

 private:
  int nmax_;
  std::map<int, Series<T>> kappa_;
};

}  // namespace ncp4
