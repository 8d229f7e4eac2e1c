#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ncp4/errors.hpp"
#include "ncp4/ring/matrix.hpp"

namespace ncp4 {

/// Element of the model differential ring: sum_{k<=N} C_k t^k with d x d
/// coefficient matrices C_k. N is the reliable order; every operation keeps
/// only coefficients that are certified by all of its inputs, so the
/// derivative drops one order and binary operations truncate at the minimum.
template <Scalar T>
class Series {
 public:
  Series() = default;

  Series(std::size_t dim, std::vector<Mat<T>> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
    if (dim_ == 0) throw DimensionMismatch("series dimension must be at least 1");
    if (coeffs_.empty()) throw TruncationExhausted("series without certified coefficients");
    for (const auto& c : coeffs_)
      if (c.rows() != dim_ || c.cols() != dim_)
        throw DimensionMismatch("series coefficient has wrong shape");
  }

  static Series zero(std::size_t dim, int order) {
    return Series(dim, std::vector<Mat<T>>(checked(order) + 1, Mat<T>::zero(dim)));
  }
  static Series constant(const Mat<T>& c, int order) {
    Series s = zero(c.rows(), order);
    s.coeffs_[0] = c;
    return s;
  }
  static Series scalar(const T& value, std::size_t dim, int order) {
    return constant(Mat<T>::scalar(dim, value), order);
  }
  static Series identity(std::size_t dim, int order) { return scalar(T(1), dim, order); }

  /// The distinguished element t with t' = 1 (central: C_1 = identity).
  static Series variable_t(std::size_t dim, int order) {
    Series s = zero(dim, order);
    if (order >= 1) s.coeffs_[1] = Mat<T>::identity(dim);
    return s;
  }

  std::size_t dim() const noexcept { return dim_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Mat<T>& coeff(std::size_t k) const { return coeffs_.at(k); }
  Mat<T>& coeff(std::size_t k) { return coeffs_.at(k); }
  const std::vector<Mat<T>>& coeffs() const noexcept { return coeffs_; }

  Series truncated(int order) const {
    if (order > this->order()) throw TruncationExhausted("cannot raise the reliable order");
    return Series(dim_, std::vector<Mat<T>>(coeffs_.begin(), coeffs_.begin() + checked(order) + 1));
  }

  Series& operator+=(const Series& o) {
    require_dim(o);
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_dim(o);
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Series& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  /// Adds value * identity (scalars embed as central constants).
  Series& operator+=(const T& value) {
    for (std::size_t i = 0; i < dim_; ++i) coeffs_[0](i, i) += value;
    return *this;
  }
  Series& operator-=(const T& value) {
    for (std::size_t i = 0; i < dim_; ++i) coeffs_[0](i, i) -= value;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator+(Series a, const T& v) { return a += v; }
  friend Series operator+(const T& v, Series a) { return a += v; }
  friend Series operator-(Series a, const T& v) { return a -= v; }
  friend Series operator-(const T& v, Series a) { return (-a) += v; }
  friend Series operator*(Series a, const T& s) { return a *= s; }
  friend Series operator*(const T& s, Series a) { return a *= s; }
  friend Series operator-(Series a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  /// Cauchy product of matrix coefficients; noncommutative.
  friend Series operator*(const Series& a, const Series& b) {
    a.require_dim(b);
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Mat<T>> r(n, Mat<T>::zero(a.dim_));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j <= k; ++j) Mat<T>::multiply_add(r[k], a.coeffs_[j], b.coeffs_[k - j]);
    return Series(a.dim_, std::move(r));
  }

  /// Coefficient-wise equality over the common certified range.
  bool agrees_with(const Series& o, double tol = 0.0) const {
    if (dim_ != o.dim_) return false;
    const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k)
      if (!(coeffs_[k] - o.coeffs_[k]).is_zero(tol)) return false;
    return true;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

  bool is_zero(double tol = 0.0) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Mat<T>& c) { return c.is_zero(tol); });
  }

  Series transpose() const {
    std::vector<Mat<T>> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c.transpose());
    return Series(dim_, std::move(r));
  }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw TruncationExhausted("negative truncation order");
    return static_cast<std::size_t>(order);
  }
  void require_dim(const Series& o) const {
    if (dim_ != o.dim_)
      throw DimensionMismatch("series dimensions differ: " + std::to_string(dim_) + " vs " +
                              std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Mat<T>> coeffs_;
};

/// D = d/dt; the result is certified to one order less.
template <Scalar T>
Series<T> deriv(const Series<T>& x) {
  if (x.order() < 1) throw TruncationExhausted("derivative of an order-0 series");
  std::vector<Mat<T>> r;
  r.reserve(static_cast<std::size_t>(x.order()));
  for (int k = 1; k <= x.order(); ++k) r.push_back(x.coeff(k) * T(k));
  return Series<T>(x.dim(), std::move(r));
}

/// Two-sided inverse: B_0 = C_0^{-1}, B_k = -C_0^{-1} sum_{j=1..k} C_j B_{k-j}.
template <Scalar T>
Series<T> inv(const Series<T>& v) {
  auto c0inv = try_inverse(v.coeff(0));
  if (!c0inv)
    throw NonInvertibleConstantTerm("constant term is not invertible (d=" +
                                    std::to_string(v.dim()) + ")");
  const std::size_t d = v.dim();
  std::vector<Mat<T>> b;
  b.reserve(static_cast<std::size_t>(v.order()) + 1);
  b.push_back(*c0inv);
  for (int k = 1; k <= v.order(); ++k) {
    Mat<T> acc = Mat<T>::zero(d);
    for (int j = 1; j <= k; ++j) Mat<T>::multiply_add(acc, v.coeff(j), b[k - j]);
    b.push_back(-(*c0inv * acc));
  }
  return Series<T>(d, std::move(b));
}

/// Whether the constant term is invertible under the current mode's rule.
template <Scalar T>
bool has_invertible_constant_term(const Series<T>& v) {
  return try_inverse(v.coeff(0)).has_value();
}

}  // namespace ncp4
