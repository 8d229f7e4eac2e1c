#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncp4/painleve/p4.hpp"
#include "ncp4/ring/sylvester.hpp"
#include "ncp4/toda/toda.hpp"

namespace ncp4 {

/// Initial data for the two second-order conditions on kappa_{+-1}.
template <Scalar T>
struct KappaInitial {
  Mat<T> k1, k1_prime, km1, km1_prime;
};

/// Solves
///   kappa_1''  = -t kappa_1'  - 2 kappa_1 kappa_-1 kappa_1  - (alpha0 - alpha1) kappa_1
///   kappa_-1'' =  kappa_-1' t - 2 kappa_-1 kappa_1 kappa_-1 - (alpha0 - alpha1 - 2) kappa_-1
/// order by order: C_{k+2} = [t^k] rhs / ((k+2)(k+1)), where [t^k](t x') = k C_k.
template <Scalar T>
std::pair<Series<T>, Series<T>> solve_kappa_conditions(const KappaInitial<T>& init, const AlphaParams<T>& al,
                                                       int order) {
  const std::size_t d = init.k1.rows();
  if (order < 2) throw TruncationExhausted("kappa conditions need order >= 2");
  if (!try_inverse(init.k1) || !try_inverse(init.km1))
    throw NonInvertibleConstantTerm("kappa_1(0) and kappa_-1(0) must be invertible");

  std::vector<Mat<T>> k{init.k1, init.k1_prime}, l{init.km1, init.km1_prime};
  // [t^k] of x y x
  auto triple = [d](const std::vector<Mat<T>>& x, const std::vector<Mat<T>>& y, int n) {
    Mat<T> r = Mat<T>::zero(d);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r += x[i] * y[j] * x[n - i - j];
    return r;
  };
  const T c1 = al[0] - al[1];
  const T cm1 = al[0] - al[1] - T(2);
  for (int n = 0; n + 2 <= order; ++n) {
    const T scale = T(1) / T((n + 2) * (n + 1));
    Mat<T> rk = k[n] * T(-n) - triple(k, l, n) * T(2) - k[n] * c1;
    Mat<T> rl = l[n] * T(n) - triple(l, k, n) * T(2) - l[n] * cm1;
    k.push_back(rk * scale);
    l.push_back(rl * scale);
  }
  return {Series<T>(d, std::move(k)), Series<T>(d, std::move(l))};
}

/// theta'' + t theta' + 2 theta theta_prev^{-1} theta + (alpha0 - alpha1 + 2n) theta.
template <Scalar T>
Series<T> theta_condition_residual(const Series<T>& th, const Series<T>& th_prev, const AlphaParams<T>& al,
                                   int n) {
  const Series<T> t = Series<T>::variable_t(th.dim(), th.order());
  const Series<T> d1 = deriv(th);
  return deriv(d1) + t * d1 + th * inv(th_prev) * th * T(2) + th * (al[0] - al[1] + T(2 * n));
}

/// eta'' - eta' t + 2 eta eta_next^{-1} eta + (alpha0 - alpha1 + 2(m-1)) eta, eta = eta_{m-1}.
template <Scalar T>
Series<T> eta_condition_residual(const Series<T>& et, const Series<T>& et_next, const AlphaParams<T>& al,
                                 int m) {
  const Series<T> t = Series<T>::variable_t(et.dim(), et.order());
  const Series<T> d1 = deriv(et);
  return deriv(d1) - d1 * t + et * inv(et_next) * et * T(2) + et * (al[0] - al[1] + T(2 * (m - 1)));
}

/// kappa_-1'(0) making the f1-equation hold at t = 0 for the n = 0 state
/// built from kappa_1, kappa_-1. Everything else in `init` is kept; the
/// km1_prime field is ignored. At d = 1 this is the scalar third condition
/// imposed at t = 0.
template <Scalar T>
Mat<T> f1_equation_kappa_m1_prime(const KappaInitial<T>& init, const AlphaParams<T>& al) {
  const std::size_t d = init.k1.rows();
  KappaInitial<T> probe = init;
  probe.km1_prime = Mat<T>::zero(d);
  const Series<T> k = solve_kappa_conditions(probe, al, 2).first;  // kappa_1'' (0) ignores kappa_-1'(0)
  const auto k0i = try_inverse(init.k1);
  const Mat<T> id = Mat<T>::identity(d);
  const Mat<T> p = init.k1_prime * *k0i;
  const Mat<T> p1 = k.coeff(2) * T(2) * *k0i - p * p + id;  // [t^1] f2

  auto sylv = [d](const Mat<T>& a, const Mat<T>& rhs) {
    return sylvester_solve(Series<T>::constant(a, 0), Series<T>::constant(a, 0), Series<T>::constant(rhs, 0))
        .coeff(0);
  };
  const Mat<T> y = sylv(p, (init.k1 * init.km1 - id * al[1]) * T(2));  // f1(0)
  const Mat<T> x = y * y + y * p + p * y + id * al[1];                   // f1'(0) demanded
  const Mat<T> ft1 = (p * x + x * p + p1 * y + y * p1) * (T(1) / T(2));  // [t^1] f~1
  return *k0i * (ft1 - init.k1_prime * init.km1);
}

enum class Direction { positive, negative };

template <Scalar T>
struct NamedResidual {
  std::string name;
  Series<T> value;
};

template <Scalar T>
struct TodaP4Result {
  P4State<T> state;
  /// The symmetric product (f1 f2 + f2 f1)/2 target (positive) or (f0 f2 + f2 f0)/2 (negative).
  Series<T> symmetric_target;
  std::vector<NamedResidual<T>> hypotheses;
  std::array<Series<T>, 3> conclusion;
};

/// Builds the P4 state of lattice index n (positive, n >= 0) or m - 1
/// (negative, m <= 0) from a Toda chain, and bundles the hypothesis and
/// conclusion residuals. Positive:
///   f2 = theta_{n+1}' theta_{n+1}^{-1} + t,  f~1 = theta_{n+1} theta_n^{-1} - (alpha1 - n),
///   f1 from f2 f1 + f1 f2 = 2 f~1,  f0 = t - f1 - f2,  alphas (alpha0 + n, alpha1 - n, alpha2).
/// Negative:
///   f2 = -eta_{m-1}^{-1} eta_{m-1}' + t,  f~0 = eta_m^{-1} eta_{m-1} + (alpha0 + m - 1),
///   f0 from f2 f0 + f0 f2 = 2 f~0,  f1 = t - f0 - f2,  alphas (alpha0 + m - 1, alpha1 - m + 1, alpha2).
template <Scalar T>
TodaP4Result<T> construct_p4_from_toda(const TodaChain<T>& chain, int index, Direction dir,
                                       const AlphaParams<T>& al) {
  TodaP4Result<T> out;
  const std::size_t d = chain.dim();
  P4State<T>& s = out.state;
  s.a = T(1);
  if (dir == Direction::positive) {
    const int n = index;
    if (n < 0) throw InsufficientSequence("positive direction needs n >= 0");
    const Series<T>& th = chain.theta(n + 1);
    const Series<T>& tp = chain.theta(n);
    const Series<T> t = Series<T>::variable_t(d, th.order());
    const Series<T> f2 = deriv(th) * inv(th) + t;
    const Series<T> ft1 = th * inv(tp) - (al[1] - T(n));
    const Series<T> f1 = sylvester_solve(f2, f2, ft1 * T(2));
    s.f = {t - f1 - f2, f1, f2};
    s.alpha = {al[0] + T(n), al[1] - T(n), al[2]};
    out.symmetric_target = ft1;
    const Series<T> tt = Series<T>::variable_t(d, f1.order());
    out.hypotheses.push_back({"condition", theta_condition_residual(th, tp, al, n)});
    out.hypotheses.push_back(
        {"f1-equation", deriv(f1) - (f1 * f1 + f1 * f2 + f2 * f1 - tt * f1 + (al[1] - T(n)))});
    if (n >= 1) out.hypotheses.push_back({"toda", chain.residual_theta(n)});
  } else {
    const int m = index;
    if (m > 0) throw InsufficientSequence("negative direction needs m <= 0");
    const Series<T> em1 = chain.eta(m - 1);
    const Series<T> em = chain.eta(m);
    const Series<T> t = Series<T>::variable_t(d, em1.order());
    const Series<T> f2 = -(inv(em1) * deriv(em1)) + t;
    const Series<T> ft0 = inv(em) * em1 + (al[0] + T(m - 1));
    const Series<T> f0 = sylvester_solve(f2, f2, ft0 * T(2));
    s.f = {f0, t - f0 - f2, f2};
    s.alpha = {al[0] + T(m - 1), al[1] - T(m - 1), al[2]};
    out.symmetric_target = ft0;
    const Series<T> tt = Series<T>::variable_t(d, f0.order());
    out.hypotheses.push_back({"condition", eta_condition_residual(em1, em, al, m)});
    out.hypotheses.push_back(
        {"f0-equation", deriv(f0) - (-(f0 * f0) - f0 * f2 - f2 * f0 + f0 * tt + (al[0] + T(m - 1)))});
    if (m <= -1) out.hypotheses.push_back({"toda", chain.residual_eta(m)});
  }
  out.conclusion = p4_residual(s);
  return out;
}

}  // namespace ncp4
