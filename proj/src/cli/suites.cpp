#include "ncp4/cli/suites.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <thread>

#include "ncp4/bilinear/bilinear.hpp"
#include "ncp4/ham/hamiltonian.hpp"
#include "ncp4/lax/lax.hpp"
#include "ncp4/painleve/backlund.hpp"
#include "ncp4/painleve/scalar_layer.hpp"
#include "ncp4/painleve/toda_to_p4.hpp"
#include "ncp4/qdet/hankel.hpp"
#include "ncp4/ring/random.hpp"
#include "ncp4/ring/residual.hpp"

namespace ncp4::cli {

namespace {

struct Outcome {
  ResidualProfile prof;
  bool pass = false;
  std::string detail;
};

struct Task {
  std::string id;
  std::string anchor;
  std::function<Outcome()> run;
};

Outcome vanish(const ResidualProfile& p, int min_reliable = -1, const std::string& note = {}) {
  Outcome o{p, p.vanishes() && p.reliable_order >= min_reliable, note};
  if (!p.vanishes())
    o.detail = p.first_nonzero;
  else if (!o.pass)
    o.detail = "reliable order " + std::to_string(p.reliable_order) + " below " + std::to_string(min_reliable);
  return o;
}

/// Negative control: passes when the residual is detected as nonzero.
Outcome nonzero(const ResidualProfile& p, const std::string& note) {
  return {p, !p.vanishes(), p.vanishes() ? "expected a nonzero residual" : note};
}

Outcome flag(bool ok, const std::string& detail, double magnitude = 0.0) {
  Outcome o;
  o.prof.reliable_order = 0;
  o.prof.vanishing_order = ok ? 1 : 0;
  o.prof.max_residual = magnitude;
  o.prof.by_order = {magnitude};
  o.pass = ok;
  o.detail = detail;
  return o;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string signed_index(const char* prefix, int k) { return prefix + std::to_string(k); }

template <Scalar T>
T conv(const Rational& x) {
  if constexpr (ScalarTraits<T>::exact)
    return x;
  else
    return x.get_d();
}

template <Scalar T>
Mat<T> conv(const Mat<Rational>& m) {
  Mat<T> r = Mat<T>::zero(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = conv<T>(m(i, j));
  return r;
}

template <Scalar T>
std::vector<Series<T>> as_vector(const std::array<Series<T>, 3>& a) {
  return {a[0], a[1], a[2]};
}

template <Scalar T>
class Suites {
 public:
  explicit Suites(const Scenario& s)
      : sc_(s),
        d_(s.dim),
        n_(s.order),
        tol_(ScalarTraits<T>::exact ? 0.0 : s.tolerance),
        alpha_(conv<T>(s.alphas[0]), conv<T>(s.alphas[1]), conv<T>(s.alphas[2])),
        a_(conv<T>(s.a)) {}

  void add(const std::string& suite, std::vector<Task>& out) {
    if (suite == "ring") ring(out);
    if (suite == "qdet") qdet(out);
    if (suite == "toda") toda(out);
    if (suite == "p4") p4(out);
    if (suite == "backlund") backlund(out);
    if (suite == "toda2p4") toda2p4(out);
    if (suite == "lax") lax(out);
    if (suite == "ham") ham(out);
    if (suite == "bilinear") bilinear(out);
  }

 private:
  using S = Series<T>;
  using M = Mat<T>;
  using State = P4State<T>;

  RandomRing<T> rng(const std::string& tag) const { return RandomRing<T>(derive_seed(sc_.seed, tag)); }

  ResidualProfile prof(const S& r) const { return profile(r, tol_); }
  ResidualProfile prof(const std::vector<S>& r) const { return profile_all(r, tol_); }

  /// Initial f(0): from the scenario when given, else drawn.
  std::array<M, 3> f_initial(RandomRing<T>& g, std::size_t d) const {
    if (sc_.initial.f && d == d_)
      return {conv<T>((*sc_.initial.f)[0]), conv<T>((*sc_.initial.f)[1]), conv<T>((*sc_.initial.f)[2])};
    return {g.invertible_matrix(d), g.invertible_matrix(d), g.invertible_matrix(d)};
  }

  State solve(RandomRing<T>& g, std::size_t d, const AlphaParams<T>& al, const T& a) const {
    return p4_solve_series(f_initial(g, d), al, a, n_);
  }

  /// Drawn solution with f0(0) + f1(0) + f2(0) = c.
  State solve_with_integral(RandomRing<T>& g, std::size_t d, const M& c) const {
    std::array<M, 3> f{M::zero(d), g.matrix(d), g.matrix(d)};
    f[0] = c - f[1] - f[2];
    return p4_solve_series(f, alpha_, T(1), n_);
  }

  /// kappa_{+-1}(0) and kappa_{+-1}'(0); a missing kappa_-1'(0) is chosen so
  /// the f1-equation holds at t = 0.
  /// Drawn data are redrawn while kappa_1'(0) kappa_1(0)^{-1} leaves that
  /// choice singular.
  KappaInitial<T> kappa_initial(RandomRing<T>& g, std::size_t d) const {
    const bool given = sc_.initial.kappa1 && d == d_;
    for (int attempt = 0;; ++attempt) {
      KappaInitial<T> init;
      init.k1 = given ? conv<T>(*sc_.initial.kappa1) : g.invertible_matrix(d);
      init.km1 = given ? conv<T>(*sc_.initial.kappa_m1) : g.invertible_matrix(d);
      init.k1_prime = given && sc_.initial.kappa1_prime ? conv<T>(*sc_.initial.kappa1_prime) : g.matrix(d);
      if (given && sc_.initial.kappa_m1_prime) {
        init.km1_prime = conv<T>(*sc_.initial.kappa_m1_prime);
        return init;
      }
      try {
        init.km1_prime = f1_equation_kappa_m1_prime(init, alpha_);
        return init;
      } catch (const SpectralCollision&) {
        if (given || attempt >= 100) throw;
      }
    }
  }

  /// Series for kappa_{+-1}: solved from the scenario's initial data when
  /// given, else arbitrary invertible series.
  std::pair<S, S> kappa_series(RandomRing<T>& g, std::size_t d) const {
    if (sc_.initial.kappa1 && d == d_) return solve_kappa_conditions(kappa_initial(g, d), alpha_, n_);
    S k1 = g.invertible_series(d, n_);
    S km1 = g.invertible_series(d, n_);
    return {k1, km1};
  }

  /// Runs `build` until it succeeds. Drawn data are redrawn when a pivot is
  /// singular; scenario-supplied data get one attempt.
  template <typename F>
  auto retry_drawn(F&& build) const {
    const bool fixed = sc_.initial.kappa1.has_value();
    for (int attempt = 0;; ++attempt) {
      try {
        return build();
      } catch (const NonInvertibleConstantTerm&) {
        if (fixed || attempt >= 100) throw;
      } catch (const SingularMinor&) {
        if (fixed || attempt >= 100) throw;
      } catch (const SpectralCollision&) {
        if (fixed || attempt >= 100) throw;
      }
    }
  }

  static void failed_setup(std::vector<Task>& out, const std::string& id, const std::string& anchor,
                           std::exception_ptr e) {
    out.push_back({id, anchor, [e]() -> Outcome { std::rethrow_exception(e); }});
  }

  // ---------------------------------------------------------------- ring

  void ring(std::vector<Task>& out) {
    const std::size_t d = d_;
    const int N = n_;
    out.push_back({"ring.product.associative", "truncated series ring: associativity of the Cauchy product", [=, this] {
                     auto g = rng("ring.assoc");
                     const S x = g.series(d, N), y = g.series(d, N), z = g.series(d, N);
                     return vanish(prof((x * y) * z - x * (y * z)), N);
                   }});
    out.push_back({"ring.derivation.leibniz", "d/dt is a derivation with d/dt t = 1", [=, this] {
                     auto g = rng("ring.leibniz");
                     const S x = g.series(d, N), y = g.series(d, N);
                     const S t = S::variable_t(d, N);
                     return vanish(prof({deriv(x * y) - (deriv(x) * y + x * deriv(y)), deriv(t) - T(1)}), N - 1);
                   }});
    out.push_back({"ring.inverse.two_sided", "series inverse from an invertible constant term", [=, this] {
                     auto g = rng("ring.inverse");
                     const S x = g.invertible_series(d, N);
                     const S xi = inv(x);
                     return vanish(prof({x * xi - T(1), xi * x - T(1)}), N);
                   }});
    out.push_back({"ring.sylvester.solve", "order-by-order Sylvester solve A X + X B = S", [=, this] {
                     auto g = rng("ring.sylvester");
                     const S a = g.series(d, N) + T(10), b = g.series(d, N) + T(10), s = g.series(d, N);
                     const S x = sylvester_solve(a, b, s);
                     return vanish(prof(a * x + x * b - s), N);
                   }});
  }

  // ---------------------------------------------------------------- qdet

  RingMatrix<T> dominant_matrix(RandomRing<T>& g, std::size_t k, std::size_t d, int N) const {
    RingMatrix<T> x(k, k, S::zero(d, N));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) x.set(i, j, i == j ? g.series(d, N) + T(30) : g.series(d, N));
    return x;
  }

  /// d = 1 matrix whose determinant and every first minor have invertible constant terms.
  RingMatrix<T> generic_matrix(RandomRing<T>& g, std::size_t k, int N) const {
    for (;;) {
      RingMatrix<T> x(k, k, S::zero(1, N));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) x.set(i, j, g.series(1, N));
      bool ok = has_invertible_constant_term(commutative_determinant(x));
      for (std::size_t i = 0; ok && i < k; ++i)
        for (std::size_t j = 0; ok && j < k; ++j)
          ok = has_invertible_constant_term(commutative_determinant(x.minor(i, j)));
      if (ok) return x;
    }
  }

  void qdet(std::vector<Task>& out) {
    const std::size_t d = d_;
    const int N = n_;
    out.push_back({"qdet.quasidet.inverse_entry", "quasideterminant as the inverse of an entry of the inverse matrix",
                   [=, this] {
                     auto g = rng("qdet.inverse");
                     for (int attempt = 0;; ++attempt) {
                       try {
                         const RingMatrix<T> x = dominant_matrix(g, 3, d, N);
                         const RingMatrix<T> xi = ring_inverse(x);
                         std::vector<S> r;
                         for (std::size_t i = 0; i < 3; ++i)
                           for (std::size_t j = 0; j < 3; ++j) r.push_back(quasidet(x, i, j) * xi(j, i) - T(1));
                         return vanish(prof(r), N);
                       } catch (const SingularMinor&) {
                         if (attempt >= 100) throw;  // a first minor was singular; redraw
                       }
                     }
                   }});
    out.push_back({"qdet.quasidet.determinant_ratio", "commutative quasideterminant is a signed ratio of determinants",
                   [=, this] {
                     auto g = rng("qdet.ratio");
                     std::vector<S> r;
                     for (std::size_t k : {2u, 3u, 4u}) {
                       const RingMatrix<T> x = generic_matrix(g, k, N);
                       const S det = commutative_determinant(x);
                       for (std::size_t i = 0; i < k; ++i)
                         for (std::size_t j = 0; j < k; ++j) {
                           const T sign = (i + j) % 2 == 0 ? T(1) : T(-1);
                           r.push_back(quasidet(x, i, j) * commutative_determinant(x.minor(i, j)) - det * sign);
                         }
                     }
                     return vanish(prof(r), N, "d = 1, sizes 2 to 4");
                   }});
    for (std::size_t n : {1u, 2u, 3u}) {
      out.push_back({"qdet.hankel.corner_vanishing.n" + std::to_string(n),
                     "almost-Hankel quasideterminant vanishes when a corner index is below n", [=, this] {
                       auto g = rng("qdet.hankel." + std::to_string(n));
                       std::vector<S> seq;
                       for (std::size_t k = 0; k <= 2 * n; ++k)
                         seq.push_back(k % 2 == 0 ? g.series(d, N) + T(30) : g.series(d, N));
                       std::vector<S> r;
                       for (std::size_t i = 0; i <= n; ++i)
                         for (std::size_t j = 0; j <= n; ++j)
                           if (i < n || j < n)
                             r.push_back(almost_hankel_qdet(HankelSpec<T>{seq, n, std::pair{i, j}}));
                       return vanish(prof(r), N);
                     }});
    }
  }

  // ---------------------------------------------------------------- toda

  void toda(std::vector<Task>& out) {
    const std::string anchor_theta = "noncommutative Toda chain solved by quasideterminants, theta side";
    const std::string anchor_eta = "noncommutative Toda chain solved by quasideterminants, eta side";
    std::shared_ptr<TodaChain<T>> chain;
    try {
      auto g = rng("toda.kappa");
      chain = retry_drawn([&] {
        auto [k1, km1] = kappa_series(g, d_);
        return std::make_shared<TodaChain<T>>(k1, km1, sc_.nmax, sc_.mmax);
      });
    } catch (...) {
      failed_setup(out, "toda.chain", anchor_theta, std::current_exception());
      return;
    }
    for (int n = 1; n < sc_.nmax; ++n)
      out.push_back({signed_index("toda.theta.n", n), anchor_theta,
                     [=, this] { return vanish(prof(chain->residual_theta(n))); }});
    for (int m = 0; m > -sc_.mmax; --m)
      out.push_back({signed_index("toda.eta.m", m), anchor_eta,
                     [=, this] { return vanish(prof(chain->residual_eta(m))); }});
    out.push_back({"toda.eta.link", "eta_1 taken as the inverse of theta_2", [=, this] {
                     if (chain->nmax() < 2) return flag(true, "needs nmax >= 2; skipped");
                     return vanish(prof(chain->eta(1) * chain->theta(2) - T(1)));
                   }});

    if (d_ != 1) return;
    // each Hankel step costs series order; short truncations get a shorter range
    std::shared_ptr<ScalarKappaChain<T>> kc;
    int reach = 6;
    for (;; --reach) {
      try {
        kc = std::make_shared<ScalarKappaChain<T>>(chain->kappa1(), chain->kappa_m1(), reach);
        break;
      } catch (const TruncationExhausted&) {
        if (reach > 2) continue;
        failed_setup(out, "toda.kappa_hankel", "Hankel-determinant kappa chain", std::current_exception());
        return;
      } catch (...) {
        failed_setup(out, "toda.kappa_hankel", "Hankel-determinant kappa chain", std::current_exception());
        return;
      }
    }
    for (int n = 1 - reach; n < reach; ++n)
      out.push_back({signed_index("toda.kappa_hankel.n", n),
                     "Hankel determinants solve the commutative Toda equation in kappa form",
                     [=, this] { return vanish(prof(kc->toda_residual(n))); }});
  }

  // ---------------------------------------------------------------- p4

  void p4(std::vector<Task>& out) {
    const int N = n_;
    out.push_back({"p4.solver.residual", "symmetric P4 system, order-by-order series solution", [=, this] {
                     auto g = rng("p4.state");
                     const State s = solve(g, d_, alpha_, a_);
                     return vanish(prof(as_vector(p4_residual(s))), N - 1);
                   }});
    out.push_back({"p4.first_integral", "first integral f0 + f1 + f2 - (alpha0 + alpha1 + alpha2) t", [=, this] {
                     auto g = rng("p4.state");
                     const State s = solve(g, d_, alpha_, a_);
                     return vanish(prof(deriv(s.f[0] + s.f[1] + s.f[2]) - s.alpha.sum()), N - 1);
                   }});
    out.push_back({"p4.transpose", "transposition maps the a-system to the (1 - a)-system", [=, this] {
                     auto g = rng("p4.state");
                     const State s = transpose_state(solve(g, d_, alpha_, a_));
                     return vanish(prof(as_vector(p4_residual(s))), N - 1);
                   }});
    out.push_back({"p4.perturbed", "negative control: a unit shift of f0 breaks the system", [=, this] {
                     auto g = rng("p4.state");
                     State s = solve(g, d_, alpha_, a_);
                     s.f[0] = s.f[0] + T(1);
                     return nonzero(prof(as_vector(p4_residual(s))), "shifted f0 detected");
                   }});
  }

  // ---------------------------------------------------------------- backlund

  std::vector<S> state_difference(const State& x, const State& y) const {
    return {x.f[0] - y.f[0], x.f[1] - y.f[1], x.f[2] - y.f[2]};
  }

  bool same_alpha(const State& x, const State& y) const {
    for (std::size_t i = 0; i < 3; ++i)
      if (!ScalarTraits<T>::is_zero(x.alpha[i] - y.alpha[i], tol_)) return false;
    return true;
  }

  void backlund(std::vector<Task>& out) {
    const int N = n_;
    auto base = [this] {
      auto g = rng("backlund.state");
      return solve(g, d_, alpha_, a_);
    };
    for (Gen gen : {Gen::s0, Gen::s1, Gen::s2, Gen::pi})
      out.push_back({"backlund.generator." + to_string(gen), "Backlund generators map solutions to solutions",
                     [=, this] {
                       const State img = backlund_apply(gen, base());
                       return vanish(prof(as_vector(p4_residual(img))), N - 2, "image alphas " + img.alpha.str());
                     }});
    for (const auto& rel : weyl_relations()) {
      std::string slug;
      for (char c : rel.name)
        if (c != ' ' && c != '(' && c != ')') slug += c;
      out.push_back({"backlund.relation." + slug, "extended affine Weyl group relation " + rel.name, [=, this] {
                       const State s = base();
                       const State l = backlund_apply(rel.lhs, s);
                       const State r = backlund_apply(rel.rhs, s);
                       Outcome o = vanish(prof(state_difference(l, r)));
                       if (!same_alpha(l, r)) {
                         o.pass = false;
                         o.detail = "alphas differ: " + l.alpha.str() + " vs " + r.alpha.str();
                       }
                       return o;
                     }});
    }
    out.push_back({"backlund.translation.T1", "T1 shifts the parameters by (1, -1, 0)", [=, this] {
                     const State s = base();
                     const State img = translation_apply(1, 1, s);
                     const AlphaParams<T> want = s.alpha + AlphaParams<T>(T(1), T(-1), T(0));
                     Outcome o = vanish(prof(as_vector(p4_residual(img))), N - 2);
                     if (!(img.alpha == want)) {
                       o.pass = false;
                       o.detail = "alpha action " + img.alpha.str() + ", expected " + want.str();
                     }
                     return o;
                   }});
  }

  // ---------------------------------------------------------------- toda2p4

  void toda2p4(std::vector<Task>& out) {
    const std::string anchor_pos = "Toda data give P4 solutions, positive direction (conditional)";
    const std::string anchor_neg = "Toda data give P4 solutions, negative direction (conditional)";
    std::shared_ptr<TodaChain<T>> chain;
    std::shared_ptr<std::pair<S, S>> kap;
    try {
      auto g = rng("toda2p4.kappa");
      chain = retry_drawn([&] {
        KappaInitial<T> init = kappa_initial(g, d_);
        kap = std::make_shared<std::pair<S, S>>(solve_kappa_conditions(init, alpha_, n_));
        return std::make_shared<TodaChain<T>>(kap->first, kap->second, 3, 3);
      });
    } catch (...) {
      failed_setup(out, "toda2p4.chain", anchor_pos, std::current_exception());
      return;
    }
    auto conditional = [this](const TodaP4Result<T>& r) {
      std::vector<ResidualProfile> hyp;
      std::string names;
      for (const auto& h : r.hypotheses) {
        hyp.push_back(prof(h.value));
        names += (names.empty() ? "" : ", ") + h.name + " " + std::to_string(hyp.back().vanishing_order);
      }
      const ResidualProfile hp = combine(hyp);
      ResidualProfile cp = prof(as_vector(r.conclusion));
      Outcome o{cp, cp.vanishing_order >= hp.vanishing_order - 1,
                "hypotheses vanish to " + std::to_string(hp.vanishing_order) + " (" + names + "), conclusion to " +
                    std::to_string(cp.vanishing_order)};
      return o;
    };
    for (int n : {0, 1})
      out.push_back({signed_index("toda2p4.positive.n", n), anchor_pos, [=, this] {
                       return conditional(construct_p4_from_toda(*chain, n, Direction::positive, alpha_));
                     }});
    for (int m : {0, -1})
      out.push_back({signed_index("toda2p4.negative.m", m), anchor_neg, [=, this] {
                       return conditional(construct_p4_from_toda(*chain, m, Direction::negative, alpha_));
                     }});

    if (d_ != 1) return;
    const int N = n_;
    const std::string anchor_s = "scalar Toda data give scalar P4 solutions under three conditions";
    out.push_back({"toda2p4.scalar.third_condition", anchor_s,
                   [=, this] { return vanish(prof(third_condition_residual(kap->first, kap->second, alpha_))); }});
    out.push_back({"toda2p4.scalar.y0", anchor_s, [=, this] {
                     const ScalarKappaChain<T> kc(kap->first, kap->second, 2);
                     const auto a = scalar_zn(kc, 0, alpha_, false);
                     return vanish(prof({a.z_condition, a.y_equation, scalar_p4_residual(a.y, 0, alpha_)}), N - 3);
                   }});
    out.push_back({"toda2p4.scalar.y-1", anchor_s, [=, this] {
                     const ScalarKappaChain<T> kc(kap->first, kap->second, 2);
                     const auto b = scalar_zn(kc, 0, alpha_, true);
                     return vanish(prof({b.z_condition, b.y_equation, scalar_p4_residual(b.y, -1, alpha_)}), N - 3);
                   }});
  }

  // ---------------------------------------------------------------- lax

  static bool lax_vanishes(const LambdaMatrix<T>& r, double tol) {
    for (const auto& e : lambda_entries(r))
      if (!e.is_zero(tol)) return false;
    return true;
  }

  void lax(std::vector<Task>& out) {
    const int N = n_;
    const T beta2 = conv<T>(sc_.beta2);
    auto base = [this] {
      auto g = rng("lax.state");
      return solve(g, d_, alpha_, T(1));
    };
    out.push_back({"lax.beta.roundtrip", "beta parameters of the Lax pair against the alphas", [=, this] {
                     bool ok = true;
                     for (int n : {0, 1, 2}) {
                       const auto b = beta_from_alpha(alpha_, n, beta2);
                       const auto back = alpha_from_beta(b);
                       for (std::size_t i = 0; i < 3; ++i) ok = ok && ScalarTraits<T>::is_zero(back[i] - alpha_[i], tol_);
                     }
                     return flag(ok, ok ? "" : "alpha -> beta -> alpha does not round-trip");
                   }});
    out.push_back({"lax.ny.zero_curvature", "3x3 Lax pair: zero curvature is the P4 system", [=, this] {
                     const State s = base();
                     const auto [a, b] = ny_pair(s, beta_from_alpha(alpha_, 0, beta2));
                     return vanish(prof(lambda_entries(zero_curvature_residual(a, b))), N - 1);
                   }});
    out.push_back({"lax.ny.perturbed", "negative control: 3x3 pair on a shifted f0", [=, this] {
                     State s = base();
                     s.f[0] = s.f[0] + T(1);
                     const auto [a, b] = ny_pair(s, beta_from_alpha(alpha_, 0, beta2));
                     return nonzero(prof(lambda_entries(zero_curvature_residual(a, b))), "shifted f0 detected");
                   }});
    out.push_back({"lax.jm.beta2_consistency", "2x2 reduction requires beta2 = -1", [=, this] {
                     const bool ok = ScalarTraits<T>::is_zero(beta2 + T(1), tol_);
                     return flag(ok, ok ? "" : "beta2 = " + ScalarTraits<T>::str(beta2) + " is inconsistent with the 2x2 pair",
                                 ScalarTraits<T>::magnitude(beta2 + T(1)));
                   }});
    out.push_back({"lax.jm.zero_curvature", "2x2 Lax pair: zero curvature is the P4 system", [=, this] {
                     const State s = base();
                     const auto [a, b] = jm_pair(s, beta_from_alpha(alpha_, 0, beta2));
                     return vanish(prof(lambda_entries(zero_curvature_residual(a, b))), N - 1);
                   }});
    out.push_back({"lax.jm.perturbed", "negative control: 2x2 pair on a shifted f0", [=, this] {
                     State s = base();
                     s.f[0] = s.f[0] + T(1);
                     const auto [a, b] = jm_pair(s, beta_from_alpha(alpha_, 0, beta2));
                     return nonzero(prof(lambda_entries(zero_curvature_residual(a, b))), "shifted f0 detected");
                   }});
  }

  // ---------------------------------------------------------------- ham

  Outcome gradient_oracle() const {
    const std::vector<std::string> syms{"f0", "f1", "f2"};
    std::vector<SymbolWord> words{{}}, layer{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<SymbolWord> next;
      for (const auto& w : layer)
        for (const auto& s : syms) {
          SymbolWord x = w;
          x.push_back(s);
          next.push_back(x);
        }
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    auto g = rng("ham.gradient");
    std::map<std::string, M> xs;
    for (const auto& s : syms) xs[s] = g.matrix(d_);
    auto trace = [](const M& m) {
      T r(0);
      for (std::size_t i = 0; i < m.rows(); ++i) r += m(i, i);
      return r;
    };
    double worst = 0.0;
    bool ok = true;
    for (const auto& x : syms) {
      const M e = g.matrix(d_);
      Assignment<T> at;
      for (const auto& s : syms) at[s] = S::constant(xs[s], 1);
      for (const auto& w : words) {
        const WordPoly<T> p = WordPoly<T>::word(w);
        const T via_grad = trace(e * eval(cyclic_gradient(p, x), at).coeff(0));
        if constexpr (ScalarTraits<T>::exact) {
          // t^1 coefficient of tr P with x -> x + t e
          Assignment<T> moved = at;
          moved[x] = S(d_, {xs[x], e});
          const T direct = trace(eval(p, moved).coeff(1));
          const double err = ScalarTraits<T>::magnitude(direct - via_grad);
          worst = std::max(worst, err);
          ok = ok && direct == via_grad;
        } else {
          const double h = 1e-5;
          Assignment<T> plus = at, minus = at;
          plus[x] = S::constant(xs[x] + e * h, 1);
          minus[x] = S::constant(xs[x] - e * h, 1);
          const double fd = (trace(eval(p, plus).coeff(0)) - trace(eval(p, minus).coeff(0))) / (2 * h);
          const double err = std::abs(fd - via_grad);
          worst = std::max(worst, err);
          ok = ok && err <= 1e-6 * std::max(1.0, std::abs(via_grad));
        }
      }
    }
    return flag(ok, std::to_string(words.size()) + " words, 3 symbols", worst);
  }

  void ham(std::vector<Task>& out) {
    const int N = n_;
    out.push_back({"ham.gradient.trace_oracle", "cyclic gradient is the gradient of the trace",
                   [=, this] { return gradient_oracle(); }});
    out.push_back({"ham.canonical.central_t", "canonical equations q' = -dH/dp, p' = dH/dq with t central",
                   [=, this] {
                     auto g = rng("ham.state");
                     if (sc_.lotka_volterra) return flag(true, "Lotka-Volterra parameters: t cannot be eliminated; skipped");
                     const State s = solve_with_integral(g, d_, M::zero(d_));
                     const auto c = check_canonical_equations(s);
                     return vanish(prof({c.q_residual, c.p_residual}), N - 1);
                   }});
    out.push_back({"ham.canonical.bound_t", "canonical equations with t bound to f0 + f1 + f2 (central integral)",
                   [=, this] {
                     auto g = rng("ham.state.bound");
                     const State s = solve_with_integral(g, d_, M::scalar(d_, T(2)));
                     const auto c = check_canonical_equations(s, true);
                     return vanish(prof({c.q_residual, c.p_residual}), N - 1);
                   }});
    out.push_back({"ham.poisson.d1", "scalar Poisson bracket {f_i, f_j} = u_ij generates the flow", [=, this] {
                     auto g = rng("ham.poisson");
                     const State s = solve(g, 1, alpha_, T(1));
                     return vanish(prof(as_vector(scalar_poisson_check(s))), N - 1,
                                   sc_.lotka_volterra ? "Lotka-Volterra parameters: no correction term"
                                                      : "f0 corrected by alpha0 + alpha1 + alpha2");
                   }});
  }

  // ---------------------------------------------------------------- bilinear

  void bilinear(std::vector<Task>& out) {
    const int N = n_;
    out.push_back({"bilinear.hirota.symmetry", "Hirota operator: parity and action on the unit", [=, this] {
                     auto g = rng("bilinear.hirota");
                     const S f = g.series(1, N), h = g.series(1, N), one = S::identity(1, N);
                     std::vector<S> r;
                     for (int n = 0; n <= 4; ++n) {
                       r.push_back(hirota(n, f, h) - hirota(n, h, f) * T(n % 2 == 0 ? 1 : -1));
                       S dn = f;
                       for (int k = 0; k < n; ++k) dn = deriv(dn);
                       r.push_back(hirota(n, f, one) - dn);
                     }
                     return vanish(prof(r));
                   }});
    std::shared_ptr<ScalarKappaChain<T>> kc;
    try {
      auto g = rng("bilinear.kappa");
      kc = std::make_shared<ScalarKappaChain<T>>(g.invertible_series(1, N), g.invertible_series(1, N), 4);
    } catch (...) {
      failed_setup(out, "bilinear.kappa_toda", "Toda equation in bilinear kappa form", std::current_exception());
    }
    if (kc)
      for (int n = -3; n <= 3; ++n)
        out.push_back({signed_index("bilinear.kappa_toda.n", n), "Toda equation in bilinear kappa form",
                       [=, this] { return vanish(prof(kappa_toda_bilinear_residual(*kc, n))); }});
    out.push_back({"bilinear.bilkap.n0", "bilinear condition on kappa_0 . kappa_1", [=, this] {
                     auto g = rng("bilinear.bilkap");
                     const auto [k1, km1] = solve_kappa_conditions(kappa_initial(g, 1), alpha_, N);
                     const ScalarKappaChain<T> c(k1, km1, 2);
                     return vanish(prof(bilkap_residual(c, 0, alpha_)), N - 2);
                   }});
    const char* pairs[3] = {"01", "12", "20"};
    for (std::size_t i = 0; i < 3; ++i)
      out.push_back({std::string("bilinear.tau.") + pairs[i], "tau bilinear equations through the Hamiltonians",
                     [=, this] {
                       auto g = rng("bilinear.tau");
                       const State s = solve_with_integral(g, 1, M::zero(1));
                       return vanish(prof(tau_bilinear_residual_via_logderivs(s)[i]), N - 2);
                     }});
  }

  const Scenario& sc_;
  std::size_t d_;
  int n_;
  double tol_;
  AlphaParams<T> alpha_;
  T a_;
};

template <Scalar T>
std::vector<Task> collect(const std::vector<std::string>& suites, Suites<T>& s) {
  std::vector<Task> tasks;
  for (const auto& name : suites) s.add(name, tasks);
  return tasks;
}

std::vector<std::string> expand(const std::string& suite) {
  if (suite != "all") return {suite};
  std::vector<std::string> out;
  for (const auto& n : suite_names())
    if (n != "all") out.push_back(n);
  return out;
}

Record execute(const Task& t, const std::string& scenario_text, bool timing) {
  Record r;
  r.check_id = t.id;
  r.paper_anchor = t.anchor;
  r.inputs_digest = hex(fnv1a(t.id, fnv1a(scenario_text)));
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = t.run();
    r.pass = o.pass;
    r.vanishing_order = o.prof.vanishing_order;
    r.reliable_order = o.prof.reliable_order;
    r.max_residual = o.prof.max_residual;
    r.residual_by_order = o.prof.by_order;
    r.detail = o.detail;
  } catch (const Error& e) {
    r.pass = false;
    r.detail = e.kind() + ": " + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

unsigned thread_count_from_env() {
  if (const char* v = std::getenv("NCP4_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Report run_suite(const Scenario& scenario, const std::string& suite, const RunOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ScenarioError("unknown suite \"" + suite + "\"");
  const std::vector<std::string> suites = expand(suite);

  std::vector<Task> tasks;
  std::unique_ptr<Suites<Rational>> exact;
  std::unique_ptr<Suites<double>> floating;
  if (scenario.mode == Mode::exact) {
    exact = std::make_unique<Suites<Rational>>(scenario);
    tasks = collect(suites, *exact);
  } else {
    floating = std::make_unique<Suites<double>>(scenario);
    tasks = collect(suites, *floating);
  }

  const std::string text = scenario.normalized().dump();
  Report report;
  report.records.resize(tasks.size());
  const unsigned nthreads = std::min<unsigned>(opts.threads ? opts.threads : thread_count_from_env(),
                                               static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
      report.records[i] = execute(tasks[i], text, opts.timing);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nthreads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  report.sort();
  return report;
}

}  // namespace ncp4::cli
