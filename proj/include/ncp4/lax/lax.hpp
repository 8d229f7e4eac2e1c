#pragma once

#include <map>
#include <utility>

#include "ncp4/painleve/p4.hpp"
#include "ncp4/qdet/ring_matrix.hpp"

namespace ncp4 {

/// Laurent polynomial in a formal spectral parameter with ring-matrix
/// coefficients. Absent exponents are zero.
template <Scalar T>
class LambdaMatrix {
 public:
  LambdaMatrix(std::size_t rows, std::size_t cols, std::size_t dim, int order)
      : rows_(rows), cols_(cols), dim_(dim), order_(order) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return dim_; }
  int order() const noexcept { return order_; }
  const std::map<int, RingMatrix<T>>& blocks() const noexcept { return blocks_; }

  RingMatrix<T> block(int k) const {
    auto it = blocks_.find(k);
    return it == blocks_.end() ? zero_block() : it->second;
  }

  void set_block(int k, RingMatrix<T> m) {
    if (m.rows() != rows_ || m.cols() != cols_) throw DimensionMismatch("lambda block has the wrong shape");
    if (m.dim() != dim_) throw DimensionMismatch("lambda block has the wrong ring dimension");
    order_ = std::min(order_, m.order());
    blocks_.insert_or_assign(k, std::move(m));
  }

  /// Adds into the block at exponent k.
  void accumulate(int k, const RingMatrix<T>& m) {
    auto it = blocks_.find(k);
    if (it == blocks_.end())
      set_block(k, m);
    else
      it->second = it->second + m;
  }

  RingMatrix<T> zero_block() const { return RingMatrix<T>(rows_, cols_, Series<T>::zero(dim_, order_)); }

  friend LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("lambda matrix product shape mismatch");
    LambdaMatrix r(a.rows_, b.cols_, a.dim_, std::min(a.order_, b.order_));
    for (const auto& [i, x] : a.blocks_)
      for (const auto& [j, y] : b.blocks_) r.accumulate(i + j, x * y);
    return r;
  }

  friend LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("lambda matrix shape mismatch");
    LambdaMatrix r = a;
    for (const auto& [k, y] : b.blocks_) r.accumulate(k, y.map([](const Series<T>& s) { return -s; }));
    return r;
  }

  /// Entry-wise time derivative.
  LambdaMatrix dt() const {
    LambdaMatrix r(rows_, cols_, dim_, order_ - 1);
    for (const auto& [k, x] : blocks_) r.set_block(k, x.map([](const Series<T>& s) { return deriv(s); }));
    return r;
  }

  /// Derivative in the spectral parameter: X_k lambda^k -> k X_k lambda^{k-1}.
  LambdaMatrix dlambda() const {
    LambdaMatrix r(rows_, cols_, dim_, order_);
    for (const auto& [k, x] : blocks_)
      if (k != 0) r.set_block(k - 1, x.map([k](const Series<T>& s) { return s * T(k); }));
    return r;
  }

 private:
  std::size_t rows_, cols_, dim_;
  int order_;
  std::map<int, RingMatrix<T>> blocks_;
};

/// d_t A - d_lambda B - (B A - A B), collected per exponent.
template <Scalar T>
LambdaMatrix<T> zero_curvature_residual(const LambdaMatrix<T>& a, const LambdaMatrix<T>& b) {
  return a.dt() - b.dlambda() - (b * a - a * b);
}

template <Scalar T>
struct BetaParams {
  T b0 = T(0), b1 = T(0), b2 = T(0);
  int n = 0;
};

/// beta1 = beta2 + alpha2, beta0 = beta1 + alpha1 - n; the alpha0 relation
/// 1 + beta2 - beta0 - n = alpha0 then holds exactly when the alphas sum to 1.
template <Scalar T>
BetaParams<T> beta_from_alpha(const AlphaParams<T>& al, int n, const T& beta2) {
  if (!ScalarTraits<T>::is_zero(al.sum() - T(1), 1e-12))
    throw InconsistentParameters("beta parameters need alpha0 + alpha1 + alpha2 = 1, got " + al.str());
  BetaParams<T> b;
  b.n = n;
  b.b2 = beta2;
  b.b1 = beta2 + al[2];
  b.b0 = b.b1 + al[1] - T(n);
  return b;
}

/// alpha0 = 1 + beta2 - beta0 - n, alpha1 = beta0 - beta1 + n, alpha2 = beta1 - beta2.
template <Scalar T>
AlphaParams<T> alpha_from_beta(const BetaParams<T>& b) {
  return {T(1) + b.b2 - b.b0 - T(b.n), b.b0 - b.b1 + T(b.n), b.b1 - b.b2};
}

/// Parameters of the lattice-n system the pair encodes: alpha shifted by (n, -n, 0).
template <Scalar T>
AlphaParams<T> state_alpha_from_beta(const BetaParams<T>& b) {
  const AlphaParams<T> a = alpha_from_beta(b);
  return {a[0] + T(b.n), a[1] - T(b.n), a[2]};
}

namespace detail {

template <Scalar T>
RingMatrix<T> ring_block(const std::vector<std::vector<Series<T>>>& rows) {
  return RingMatrix<T>::from_rows(rows);
}

}  // namespace detail

/// The 3x3 pair A = A0 + A_{-1}/lambda, B = B1 lambda + B0:
///   A0   = [[0, 1, f0], [0, 0, 1], [0, 0, 0]]
///   A_-1 = [[beta0, 0, 0], [f1, beta1, 0], [1, f2, beta2]]
///   B1   = E_13
///   B0   = [[-f2, 0, 0], [1, -f0, 0], [0, 1, -f1]]
template <Scalar T>
std::pair<LambdaMatrix<T>, LambdaMatrix<T>> ny_pair(const P4State<T>& s, const BetaParams<T>& b) {
  const std::size_t d = s.dim();
  const int N = s.order();
  const Series<T> z = Series<T>::zero(d, N), one = Series<T>::identity(d, N);
  const auto sc = [&](const T& v) { return Series<T>::scalar(v, d, N); };
  const auto& [f0, f1, f2] = s.f;

  LambdaMatrix<T> a(3, 3, d, N), bm(3, 3, d, N);
  a.set_block(0, detail::ring_block<T>({{z, one, f0}, {z, z, one}, {z, z, z}}));
  a.set_block(-1, detail::ring_block<T>({{sc(b.b0), z, z}, {f1, sc(b.b1), z}, {one, f2, sc(b.b2)}}));
  bm.set_block(1, detail::ring_block<T>({{z, z, one}, {z, z, z}, {z, z, z}}));
  bm.set_block(0, detail::ring_block<T>({{-f2, z, z}, {one, -f0, z}, {z, one, -f1}}));
  return {a, bm};
}

/// The 2x2 pair in the Jimbo-Miwa form (needs beta2 = -1):
///   A = diag(1,0) mu + [[f0+f1+f2, -f1 f2 + beta1 + 1], [1, 0]]
///       + [[f2 f1 + beta0 + 1, -f2 f1 f2 - (beta0 - beta1) f2], [f1, -f1 f2 + beta1 + 1]] / mu
///   B = diag(1,0) mu + [[0, -f1 f2 + beta1 + 1], [1, -f0 - f2]]
template <Scalar T>
std::pair<LambdaMatrix<T>, LambdaMatrix<T>> jm_pair(const P4State<T>& s, const BetaParams<T>& b) {
  if (b.b2 != T(-1)) throw InconsistentParameters("the 2x2 reduction needs beta2 = -1");
  const std::size_t d = s.dim();
  const int N = s.order();
  const Series<T> z = Series<T>::zero(d, N), one = Series<T>::identity(d, N);
  const auto& [f0, f1, f2] = s.f;
  const Series<T> corner = -(f1 * f2) + (b.b1 + T(1));

  LambdaMatrix<T> a(2, 2, d, N), bm(2, 2, d, N);
  const RingMatrix<T> lead = detail::ring_block<T>({{one, z}, {z, z}});
  a.set_block(1, lead);
  a.set_block(0, detail::ring_block<T>({{f0 + f1 + f2, corner}, {one, z}}));
  a.set_block(-1, detail::ring_block<T>({{f2 * f1 + (b.b0 + T(1)), -(f2 * f1 * f2) - f2 * (b.b0 - b.b1)},
                                         {f1, corner}}));
  bm.set_block(1, lead);
  bm.set_block(0, detail::ring_block<T>({{z, corner}, {one, -f0 - f2}}));
  return {a, bm};
}

/// Flattens every entry of every block of a residual.
template <Scalar T>
std::vector<Series<T>> lambda_entries(const LambdaMatrix<T>& m) {
  std::vector<Series<T>> out;
  for (const auto& [k, x] : m.blocks())
    for (const auto& e : x.entries()) out.push_back(e);
  return out;
}

}  // namespace ncp4
