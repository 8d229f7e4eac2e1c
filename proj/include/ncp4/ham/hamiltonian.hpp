#pragma once

#include <array>
#include <type_traits>

#include "ncp4/ham/word_poly.hpp"
#include "ncp4/painleve/p4.hpp"

namespace ncp4 {

namespace detail {

template <Scalar T>
WordPoly<T> w(const std::type_identity_t<T>& c, const SymbolWord& word) {
  return WordPoly<T>::term(word, c);
}

template <Scalar T>
T third(const std::type_identity_t<T>& x) {
  return x * ScalarTraits<T>::from_fraction(1, 3);
}

}  // namespace detail

/// Matrix Hamiltonian in the canonical variables q = f1, p = f2 and the
/// symbol t, for the ordering parameters a0, a1.
template <Scalar T>
WordPoly<T> hamiltonian_qpt(const AlphaParams<T>& al, const T& a0 = T(1), const T& a1 = T(1)) {
  const T one(1);
  WordPoly<T> h;
  h += detail::w<T>(-(one - a0), {"p", "p", "q"});
  h += detail::w<T>(one - T(2) * a0, {"p", "q", "p"});
  h += detail::w<T>(-(one - a0), {"q", "p", "p"});
  h += detail::w<T>(one - a0 - a1, {"q", "q", "p"});
  h += detail::w<T>(-(T(3) - T(2) * a0 - T(2) * a1), {"q", "p", "q"});
  h += detail::w<T>(one - a0 - a1, {"p", "q", "q"});
  h += detail::w<T>(one - a0 - a1, {"t", "p", "q"});
  h += detail::w<T>(a1, {"p", "t", "q"});
  h += detail::w<T>(-(one - a0), {"p", "q", "t"});
  h += detail::w<T>(T(2) - a0 - a1, {"q", "p", "t"});
  h += detail::w<T>(-(one - a1), {"q", "t", "p"});
  h += detail::w<T>(a0, {"t", "q", "p"});
  h += detail::w<T>(-al[1], {"p"});
  h += detail::w<T>(al[2], {"q"});
  h += detail::w<T>(detail::third<T>(al[1] - al[2]), {"t"});
  return h;
}

/// The same Hamiltonian written in f0, f1, f2.
template <Scalar T>
WordPoly<T> hamiltonian_f(const AlphaParams<T>& al, const T& a0 = T(1), const T& a1 = T(1)) {
  const T one(1);
  WordPoly<T> h;
  h += detail::w<T>(a0, {"f0", "f1", "f2"});
  h += detail::w<T>(T(2) - a0 - a1, {"f1", "f2", "f0"});
  h += detail::w<T>(a1, {"f2", "f0", "f1"});
  h += detail::w<T>(-(one - a1), {"f1", "f0", "f2"});
  h += detail::w<T>(one - a0 - a1, {"f0", "f2", "f1"});
  h += detail::w<T>(-(one - a0), {"f2", "f1", "f0"});
  h += detail::w<T>(detail::third<T>(al[1] - al[2]), {"f0"});
  h += detail::w<T>(detail::third<T>(al[1] + T(2) * al[2]), {"f1"});
  h += detail::w<T>(-detail::third<T>(T(2) * al[1] + al[2]), {"f2"});
  return h;
}

/// Commutative Hamiltonian -p^2 q - p q^2 + p q t - alpha1 p + alpha2 q + (alpha1 - alpha2) t / 3.
template <Scalar T>
WordPoly<T> commutative_hamiltonian_qpt(const AlphaParams<T>& al) {
  WordPoly<T> h;
  h += detail::w<T>(T(-1), {"p", "p", "q"});
  h += detail::w<T>(T(-1), {"p", "q", "q"});
  h += detail::w<T>(T(1), {"p", "q", "t"});
  h += detail::w<T>(-al[1], {"p"});
  h += detail::w<T>(al[2], {"q"});
  h += detail::w<T>(detail::third<T>(al[1] - al[2]), {"t"});
  return h;
}

/// Scalar Hamiltonians h_i = f0 f1 f2 + linear terms, i = 0, 1, 2. The
/// linear coefficients of h_{i+1} are those of h_i with alphas and f's
/// rotated one step.
template <Scalar T>
WordPoly<T> scalar_hamiltonian(const AlphaParams<T>& al, int i) {
  const std::size_t r = static_cast<std::size_t>(((i % 3) + 3) % 3);
  const std::array<std::string, 3> f{"f0", "f1", "f2"};
  // h_0 linear part: (a1 - a2)/3 f0 + (a1 + 2 a2)/3 f1 - (2 a1 + a2)/3 f2
  const T& b1 = al[1 + r];
  const T& b2 = al[2 + r];
  WordPoly<T> h = detail::w<T>(T(1), {"f0", "f1", "f2"});
  h += detail::w<T>(detail::third<T>(b1 - b2), {f[r]});
  h += detail::w<T>(detail::third<T>(b1 + T(2) * b2), {f[(r + 1) % 3]});
  h += detail::w<T>(-detail::third<T>(T(2) * b1 + b2), {f[(r + 2) % 3]});
  return h;
}

/// {F, G} = sum_ij u_ij dF/df_i dG/df_j over f0, f1, f2 with
/// U = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]. Derivatives are occurrence
/// derivatives, so the result is only meaningful after commutative evaluation.
template <Scalar T>
WordPoly<T> poisson_bracket(const WordPoly<T>& f, const WordPoly<T>& g) {
  static const int u[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  const std::array<std::string, 3> sym{"f0", "f1", "f2"};
  WordPoly<T> r;
  for (std::size_t i = 0; i < 3; ++i) {
    const WordPoly<T> di = occurrence_derivative(f, sym[i]);
    if (di.is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j)
      if (u[i][j] != 0) r += di * occurrence_derivative(g, sym[j]) * T(u[i][j]);
  }
  return r;
}

template <Scalar T>
struct CanonicalCheck {
  Series<T> q_residual;  ///< q' + dH/dp
  Series<T> p_residual;  ///< p' - dH/dq
};

/// Evaluates the canonical equations with q = f1, p = f2 and cyclic
/// gradients. The t symbol is the series t, or f0 + f1 + f2 when
/// bind_t_to_sum is set; either choice must be central for the check to close.
template <Scalar T>
CanonicalCheck<T> check_canonical_equations(const P4State<T>& s, bool bind_t_to_sum = false, const T& a0 = T(1),
                                            const T& a1 = T(1)) {
  if (s.a != T(1)) throw InconsistentParameters("canonical equations are stated for a = 1");
  // f0 = t - q - p needs f0 + f1 + f2 to grow like t
  if (!bind_t_to_sum && ScalarTraits<T>::magnitude(s.alpha.sum() - T(1)) > 1e-12)
    throw InconsistentParameters("central-t canonical equations need alpha0 + alpha1 + alpha2 = 1");
  const WordPoly<T> h = hamiltonian_qpt(s.alpha, a0, a1);
  const Series<T> tval =
      bind_t_to_sum ? s.f[0] + s.f[1] + s.f[2] : Series<T>::variable_t(s.dim(), s.order());
  const Assignment<T> as{{"q", s.f[1]}, {"p", s.f[2]}, {"t", tval}};
  CanonicalCheck<T> out;
  out.q_residual = deriv(s.f[1]) + eval(cyclic_gradient(h, "p"), as);
  out.p_residual = deriv(s.f[2]) - eval(cyclic_gradient(h, "q"), as);
  return out;
}

/// d = 1 residuals f0' - {H, f0} - (alpha0 + alpha1 + alpha2), f1' - {H, f1},
/// f2' - {H, f2}. The f0 correction vanishes exactly in the Lotka-Volterra case.
template <Scalar T>
std::array<Series<T>, 3> scalar_poisson_check(const P4State<T>& s) {
  if (s.dim() != 1) throw DimensionMismatch("Poisson check is a d = 1 statement");
  const WordPoly<T> h = scalar_hamiltonian(s.alpha, 0);
  const Assignment<T> as{{"f0", s.f[0]}, {"f1", s.f[1]}, {"f2", s.f[2]}};
  std::array<Series<T>, 3> r;
  const std::array<std::string, 3> sym{"f0", "f1", "f2"};
  for (std::size_t j = 0; j < 3; ++j) {
    Series<T> br = eval(poisson_bracket(h, WordPoly<T>::symbol(sym[j])), as);
    r[j] = deriv(s.f[j]) - br;
  }
  r[0] = r[0] - s.alpha.sum();
  return r;
}

}  // namespace ncp4
