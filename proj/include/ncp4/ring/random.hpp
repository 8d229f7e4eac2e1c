#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ncp4/ring/series.hpp"

namespace ncp4 {

/// 64-bit FNV-1a, used for seed derivation and report digests.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Independent stream per check: the same (seed, tag) always yields the same data
/// regardless of which other checks ran or in which thread.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  return fnv1a(tag, fnv1a(std::to_string(seed)));
}

/// Small-integer random ring data. Entries are uniform on [-bound, bound];
/// the modulo mapping is used instead of a std distribution so the stream is
/// identical across standard libraries.
template <Scalar T>
class RandomRing {
 public:
  explicit RandomRing(std::uint64_t seed, long bound = 3) : gen_(seed), bound_(bound) {}

  T entry() {
    const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
    return T(static_cast<long>(gen_() % span) - bound_);
  }

  Mat<T> matrix(std::size_t d) {
    Mat<T> m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = entry();
    return m;
  }

  Mat<T> rect(std::size_t r, std::size_t c) {
    Mat<T> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry();
    return m;
  }

  /// Redraws until try_inverse succeeds.
  Mat<T> invertible_matrix(std::size_t d) {
    for (;;) {
      Mat<T> m = matrix(d);
      if (try_inverse(m)) return m;
    }
  }

  Series<T> series(std::size_t d, int order) {
    std::vector<Mat<T>> c;
    for (int k = 0; k <= order; ++k) c.push_back(matrix(d));
    return Series<T>(d, std::move(c));
  }

  Series<T> invertible_series(std::size_t d, int order) {
    Series<T> s = series(d, order);
    s.coeff(0) = invertible_matrix(d);
    return s;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  long bound_;
};

}  // namespace ncp4
