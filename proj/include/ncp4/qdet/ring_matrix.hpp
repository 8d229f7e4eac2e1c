#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ncp4/errors.hpp"
#include "ncp4/ring/series.hpp"

namespace ncp4 {

/// Rectangular matrix with ring entries. Indices are 0-based throughout.
template <Scalar T>
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols, const Series<T>& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static RingMatrix from_rows(const std::vector<std::vector<Series<T>>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DimensionMismatch("empty ring matrix");
    RingMatrix m(rows.size(), rows.front().size(), rows.front().front());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged ring matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const { return e_.front().dim(); }
  int order() const {
    int n = e_.front().order();
    for (const auto& x : e_) n = std::min(n, x.order());
    return n;
  }

  const Series<T>& operator()(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }

  void set(std::size_t i, std::size_t j, Series<T> v) {
    if (!e_.empty() && v.dim() != e_.front().dim())
      throw DimensionMismatch("ring matrix entries must share d");
    e_.at(i * cols_ + j) = std::move(v);
  }

  /// Drops row i and column j.
  RingMatrix minor(std::size_t i, std::size_t j) const {
    if (rows_ < 2 || cols_ < 2) throw DimensionMismatch("minor of a matrix with a unit side");
    RingMatrix m(rows_ - 1, cols_ - 1, e_.front());
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == j) continue;
        m.set(rr, cc++, (*this)(r, c));
      }
      ++rr;
    }
    return m;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("ring matrix product shape mismatch");
    RingMatrix r(a.rows_, b.cols_, a(0, 0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Series<T> s = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) s += a(i, k) * b(k, j);
        r.set(i, j, std::move(s));
      }
    return r;
  }
  friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) {
    a.require_shape(b);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
    return a;
  }
  friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) {
    a.require_shape(b);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
    return a;
  }

  /// Entry-wise map, e.g. deriv.
  template <class F>
  RingMatrix map(F&& f) const {
    RingMatrix r = *this;
    for (auto& x : r.e_) x = f(x);
    return r;
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Series<T>& x) { return x.is_zero(); });
  }
  const std::vector<Series<T>>& entries() const noexcept { return e_; }

 private:
  void require_shape(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("ring matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Series<T>> e_;
};

/// Solves m * y = c (c has any number of columns) by Gauss-Jordan elimination
/// with left row operations. A pivot is admissible when its constant term is
/// invertible; rows are interchanged to find one. Throws SingularMinor when
/// no admissible pivot exists in some column.
template <Scalar T>
RingMatrix<T> ring_solve(RingMatrix<T> m, RingMatrix<T> c) {
  const std::size_t n = m.rows();
  if (m.cols() != n || c.rows() != n) throw DimensionMismatch("ring_solve shape mismatch");
  auto swap_rows = [](RingMatrix<T>& x, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Series<T> tmp = x(a, j);
      x.set(a, j, x(b, j));
      x.set(b, j, std::move(tmp));
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && !has_invertible_constant_term(m(p, k))) ++p;
    if (p == n)
      throw SingularMinor("no pivot with invertible constant term in column " + std::to_string(k));
    if (p != k) {
      swap_rows(m, p, k);
      swap_rows(c, p, k);
    }
    const Series<T> piv_inv = inv(m(k, k));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m(r, k).is_zero()) continue;
      const Series<T> f = m(r, k) * piv_inv;
      for (std::size_t j = k; j < n; ++j) m.set(r, j, m(r, j) - f * m(k, j));
      for (std::size_t j = 0; j < c.cols(); ++j) c.set(r, j, c(r, j) - f * c(k, j));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Series<T> piv_inv = inv(m(k, k));
    for (std::size_t j = 0; j < c.cols(); ++j) c.set(k, j, piv_inv * c(k, j));
  }
  return c;
}

template <Scalar T>
RingMatrix<T> ring_identity(std::size_t n, std::size_t d, int order) {
  RingMatrix<T> id(n, n, Series<T>::zero(d, order));
  for (std::size_t i = 0; i < n; ++i) id.set(i, i, Series<T>::identity(d, order));
  return id;
}

template <Scalar T>
RingMatrix<T> ring_inverse(const RingMatrix<T>& m) {
  return ring_solve(m, ring_identity<T>(m.rows(), m.dim(), m.order()));
}

/// Determinant by permutation expansion. Only meaningful for commuting
/// entries, so d = 1 is required. Division free, hence exact for any data.
template <Scalar T>
Series<T> commutative_determinant(const RingMatrix<T>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.dim() != 1) throw DimensionMismatch("commutative determinant needs d = 1");
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Series<T> total = Series<T>::zero(1, m.order());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Series<T> term = m(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace ncp4
