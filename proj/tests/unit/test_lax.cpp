#include "doctest.h"

#include "ncp4/lax/lax.hpp"
#include "ncp4/ring/random.hpp"

using namespace ncp4;
using S = Series<Rational>;
using M = Mat<Rational>;
using A = AlphaParams<Rational>;
using State = P4State<Rational>;

namespace {

const A kAlpha{Rational(1, 3), Rational(1, 5), Rational(7, 15)};

State solved(RandomRing<Rational>& rng, std::size_t d, int order, const A& al) {
  return p4_solve_series<Rational>({rng.matrix(d), rng.matrix(d), rng.matrix(d)}, al, Rational(1), order);
}

bool vanishes(const LambdaMatrix<Rational>& r) {
  for (const auto& e : lambda_entries(r))
    if (!e.is_zero()) return false;
  return true;
}

A shifted(const A& al, int n) { return {al[0] + n, al[1] - n, al[2]}; }

}  // namespace

TEST_CASE("beta_from_alpha") {
  const auto b = beta_from_alpha<Rational>(A{1, 0, 0}, 0, 0);
  CHECK(b.b0 == 0);
  CHECK(b.b1 == 0);
  CHECK(b.b2 == 0);

  for (int n : {0, 1, 3}) {
    const auto bn = beta_from_alpha(kAlpha, n, Rational(2, 3));
    CHECK(alpha_from_beta(bn) == kAlpha);
    CHECK(state_alpha_from_beta(bn) == shifted(kAlpha, n));
  }
  const auto b0 = beta_from_alpha(kAlpha, 0, Rational(-1));
  const auto b1 = beta_from_alpha(kAlpha, 1, Rational(-1));
  CHECK(b1.b0 == b0.b0 - 1);
  CHECK(b1.b1 == b0.b1);
  CHECK(b1.b2 == b0.b2);

  CHECK_THROWS_AS(beta_from_alpha<Rational>(A{1, 1, 0}, 0, 0), InconsistentParameters);
}

TEST_CASE("NY pair entries") {
  RandomRing<Rational> rng(61);
  const State s = solved(rng, 2, 6, kAlpha);
  const auto [a, b] = ny_pair(s, beta_from_alpha(kAlpha, 0, Rational(0)));
  CHECK(a.block(0)(0, 2) == s.f[0]);
  CHECK(b.block(0)(0, 0) == -s.f[2]);
  CHECK(b.block(0)(1, 1) == -s.f[0]);
  CHECK(b.block(0)(2, 2) == -s.f[1]);
  CHECK(b.block(1)(0, 2) == S::identity(2, 6));

  State zero;
  zero.f = {S::zero(1, 4), S::zero(1, 4), S::zero(1, 4)};
  zero.alpha = A{1, 0, 0};
  const auto [za, zb] = ny_pair(zero, BetaParams<Rational>{});
  const auto am1 = za.block(-1);
  CHECK(am1(2, 0) == S::identity(1, 4));
  for (std::size_t i = 0; i < 3; ++i) CHECK(am1(i, i).is_zero());
  CHECK(am1(1, 0).is_zero());
  CHECK(am1(2, 1).is_zero());
}

TEST_CASE("NY zero curvature on solver output, and perturbation") {
  RandomRing<Rational> rng(62);
  for (std::size_t d : {1u, 2u}) {
    for (int n : {0, 2}) {
      const State s = solved(rng, d, 8, shifted(kAlpha, n));
      const auto beta = beta_from_alpha(kAlpha, n, Rational(1, 2));
      const auto [a, b] = ny_pair(s, beta);
      const auto r = zero_curvature_residual(a, b);
      CHECK(vanishes(r));
      CHECK(r.order() == 7);

      State p = s;
      p.f[0] = p.f[0] + Rational(1);
      const auto [pa, pb] = ny_pair(p, beta);
      const auto pr = zero_curvature_residual(pa, pb);
      CHECK_FALSE(pr.block(0).is_zero());
    }
  }
}

TEST_CASE("NY residual vanishes iff the system does") {
  RandomRing<Rational> rng(63);
  const auto beta = beta_from_alpha(kAlpha, 0, Rational(0));
  for (int trial = 0; trial < 4; ++trial) {
    State s;
    s.f = {rng.series(2, 6), rng.series(2, 6), rng.series(2, 6)};
    s.alpha = kAlpha;
    const auto p = p4_residual(s);
    const bool sys = p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
    const auto [a, b] = ny_pair(s, beta);
    CHECK(vanishes(zero_curvature_residual(a, b)) == sys);
  }
  // a pair built with betas for the wrong parameters does not vanish
  const State s = solved(rng, 2, 6, kAlpha);
  const auto [a, b] = ny_pair(s, beta_from_alpha(kAlpha, 1, Rational(0)));
  CHECK_FALSE(vanishes(zero_curvature_residual(a, b)));
}

TEST_CASE("zero curvature of the zero pair") {
  LambdaMatrix<Rational> z(3, 3, 2, 4);
  z.set_block(0, z.zero_block());
  CHECK(vanishes(zero_curvature_residual(z, z)));
}

TEST_CASE("JM pair") {
  RandomRing<Rational> rng(64);
  for (std::size_t d : {1u, 2u}) {
    const State s = solved(rng, d, 8, kAlpha);
    const auto beta = beta_from_alpha(kAlpha, 0, Rational(-1));
    const auto [a, b] = jm_pair(s, beta);
    CHECK(a.block(1)(0, 0) == S::identity(d, 8));
    CHECK(a.block(1)(1, 1).is_zero());
    CHECK(b.block(0)(1, 1) == -s.f[0] - s.f[2]);
    CHECK(vanishes(zero_curvature_residual(a, b)));

    State p = s;
    p.f[0] = p.f[0] + Rational(1);
    const auto [pa, pb] = jm_pair(p, beta);
    CHECK_FALSE(vanishes(zero_curvature_residual(pa, pb)));
  }
  const State s = solved(rng, 2, 6, kAlpha);
  CHECK_THROWS_AS(jm_pair(s, beta_from_alpha(kAlpha, 0, Rational(0))), InconsistentParameters);
}

TEST_CASE("JM pair at lattice index n") {
  RandomRing<Rational> rng(65);
  const State s = solved(rng, 2, 8, shifted(kAlpha, 1));
  const auto [a, b] = jm_pair(s, beta_from_alpha(kAlpha, 1, Rational(-1)));
  CHECK(vanishes(zero_curvature_residual(a, b)));
}
