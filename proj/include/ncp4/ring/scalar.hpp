#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <concepts>
#include <string>

namespace ncp4 {

using Rational = mpq_class;

/// Per-scalar-type behaviour: zero tests, magnitudes, printing.
///
/// Exact mode (Rational) compares against zero bit-exactly and ignores the
/// tolerance argument; float mode (double) treats |x| <= tol as zero.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& x, double /*tol*/ = 0.0) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_fraction(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static bool is_zero(double x, double tol = 0.0) { return std::fabs(x) <= tol; }
  static double magnitude(double x) { return std::fabs(x); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double from_fraction(long p, long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
  }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

/// Condition-number bound used by float-mode inversion. Exact mode ignores it.
inline std::atomic<double>& condition_bound() {
  static std::atomic<double> bound{1e12};
  return bound;
}

}  // namespace ncp4
