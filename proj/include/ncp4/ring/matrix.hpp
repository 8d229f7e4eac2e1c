#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ncp4/errors.hpp"
#include "ncp4/ring/scalar.hpp"

namespace ncp4 {

/// Small dense row-major matrix over an exact or floating scalar. These are
/// the coefficients of ring elements, so sizes are tiny (d <= 3, or d^2 for
/// Kronecker lifts).
template <Scalar T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Mat zero(std::size_t n) { return Mat(n, n); }
  static Mat identity(std::size_t n) { return scalar(n, T(1)); }
  static Mat scalar(std::size_t n, const T& value) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }
  static Mat from_rows(const std::vector<std::vector<T>>& rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Mat& operator+=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const T& s) { return a *= s; }
  friend Mat operator*(const T& s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ScalarTraits<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  /// r += a * b without a temporary for the product.
  static void multiply_add(Mat& r, const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ScalarTraits<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero(double tol = 0.0) const {
    return std::all_of(data_.begin(), data_.end(),
                       [tol](const T& x) { return ScalarTraits<T>::is_zero(x, tol); });
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, ScalarTraits<T>::magnitude(x));
    return m;
  }

  double norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) s += ScalarTraits<T>::magnitude((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << ScalarTraits<T>::str(m(i, j));
    os << ']';
  }
  return os << ']';
}

/// LU factorisation with row pivoting. Exact mode takes the first nonzero
/// pivot; float mode uses partial pivoting by magnitude.
template <Scalar T>
class LuDecomposition {
 public:
  explicit LuDecomposition(Mat<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw DimensionMismatch("LU of a non-square matrix");
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = n;
      if constexpr (ScalarTraits<T>::exact) {
        for (std::size_t r = c; r < n; ++r)
          if (!ScalarTraits<T>::is_zero(lu_(r, c))) {
            piv = r;
            break;
          }
      } else {
        double best = 0.0;
        for (std::size_t r = c; r < n; ++r)
          if (double m = ScalarTraits<T>::magnitude(lu_(r, c)); m > best) {
            best = m;
            piv = r;
          }
      }
      if (piv == n) {
        singular_ = true;
        return;
      }
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(c, j), lu_(piv, j));
        std::swap(perm_[c], perm_[piv]);
        sign_ = -sign_;
      }
      for (std::size_t r = c + 1; r < n; ++r) {
        if (ScalarTraits<T>::is_zero(lu_(r, c))) continue;
        lu_(r, c) /= lu_(c, c);
        const T f = lu_(r, c);
        for (std::size_t j = c + 1; j < n; ++j) lu_(r, j) -= f * lu_(c, j);
      }
    }
  }

  bool singular() const noexcept { return singular_; }

  T determinant() const {
    if (singular_) return T(0);
    T d(sign_);
    for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
    return d;
  }

  /// Solves A X = B for X. Requires !singular().
  Mat<T> solve(const Mat<T>& b) const {
    assert(!singular_);
    const std::size_t n = lu_.rows();
    if (b.rows() != n) throw DimensionMismatch("LU solve right-hand side rows");
    Mat<T> x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(perm_[i], j);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) x(i, j) -= lu_(i, k) * x(k, j);
      for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) x(i, j) -= lu_(i, k) * x(k, j);
        x(i, j) /= lu_(i, i);
      }
    }
    return x;
  }

 private:
  Mat<T> lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
  bool singular_ = false;
};

/// Inverse of a square matrix, or nullopt when singular. In float mode a
/// 1-norm condition estimate above condition_bound() also counts as singular.
template <Scalar T>
std::optional<Mat<T>> try_inverse(const Mat<T>& a) {
  LuDecomposition<T> lu(a);
  if (lu.singular()) return std::nullopt;
  Mat<T> inv = lu.solve(Mat<T>::identity(a.rows()));
  if constexpr (!ScalarTraits<T>::exact) {
    if (a.norm1() * inv.norm1() > condition_bound().load()) return std::nullopt;
  }
  return inv;
}

template <Scalar T>
T determinant(const Mat<T>& a) {
  return LuDecomposition<T>(a).determinant();
}

/// Row-major Kronecker product.
template <Scalar T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

}  // namespace ncp4
