#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ncp4/qdet/quasidet.hpp"

namespace ncp4 {

/// Generating sequence x_0, x_1, ... plus size index n. The matrix is
/// (n+1) x (n+1) with x_st = x_{s+t}; when `corner` = (i, j) is given the
/// last row and column are replaced: x_nt = x_{i+t}, x_sn = x_{s+j},
/// x_nn = x_{i+j}. (i, j) = (n, n) is the plain Hankel matrix.
template <Scalar T>
struct HankelSpec {
  std::vector<Series<T>> seq;
  std::size_t n = 0;
  std::optional<std::pair<std::size_t, std::size_t>> corner;

  std::size_t row_index() const { return corner ? corner->first : n; }
  std::size_t col_index() const { return corner ? corner->second : n; }

  /// Largest sequence index the matrix touches.
  std::size_t max_index() const {
    const std::size_t i = row_index(), j = col_index();
    std::size_t m = i + j;
    if (n > 0) m = std::max({m, 2 * n - 2, i + n - 1, j + n - 1});
    return m;
  }
};

template <Scalar T>
RingMatrix<T> hankel(const HankelSpec<T>& spec) {
  if (spec.seq.size() <= spec.max_index())
    throw InsufficientSequence("Hankel matrix of index " + std::to_string(spec.n) + " needs x_" +
                               std::to_string(spec.max_index()) + ", sequence has " +
                               std::to_string(spec.seq.size()) + " terms");
  const std::size_t n = spec.n, i = spec.row_index(), j = spec.col_index();
  RingMatrix<T> h(n + 1, n + 1, spec.seq.front());
  for (std::size_t s = 0; s <= n; ++s)
    for (std::size_t t = 0; t <= n; ++t) {
      const std::size_t row = s == n ? i : s;
      const std::size_t col = t == n ? j : t;
      h.set(s, t, spec.seq[row + col]);
    }
  return h;
}

/// h_n(i, j) = |H_n(i, j)|_nn.
template <Scalar T>
Series<T> almost_hankel_qdet(const HankelSpec<T>& spec) {
  return quasidet(hankel(spec), spec.n, spec.n);
}

}  // namespace ncp4
