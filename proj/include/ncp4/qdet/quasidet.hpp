#pragma once

#include <optional>
#include <utility>

#include "ncp4/qdet/ring_matrix.hpp"

namespace ncp4 {

/// |X|_ij = x_ij - r_i (X^ij)^-1 c_j, 0-based. r_i is row i without column j,
/// c_j is column j without row i. The minor is never inverted explicitly:
/// y = (X^ij)^-1 c_j comes from one ring_solve.
template <Scalar T>
Series<T> quasidet(const RingMatrix<T>& x, std::size_t i, std::size_t j) {
  const std::size_t n = x.rows();
  if (x.cols() != n) throw DimensionMismatch("quasideterminant of a non-square matrix");
  if (i >= n || j >= n) throw DimensionMismatch("quasideterminant index out of range");
  if (n == 1) return x(0, 0);

  RingMatrix<T> c(n - 1, 1, x(0, 0));
  for (std::size_t r = 0, rr = 0; r < n; ++r)
    if (r != i) c.set(rr++, 0, x(r, j));
  const RingMatrix<T> y = ring_solve(x.minor(i, j), c);

  Series<T> out = x(i, j);
  for (std::size_t col = 0, k = 0; col < n; ++col)
    if (col != j) out -= x(i, col) * y(k++, 0);
  return out;
}

}  // namespace ncp4
