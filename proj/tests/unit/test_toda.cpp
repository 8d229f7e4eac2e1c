#include "doctest.h"

#include "ncp4/ring/random.hpp"
#include "ncp4/toda/toda.hpp"
#include "oracles.hpp"

using namespace ncp4;
using S = Series<Rational>;

namespace {

TodaChain<Rational> random_chain(RandomRing<Rational>& rng, std::size_t d, int order, int nmax, int mmax) {
  for (;;) {
    try {
      return TodaChain<Rational>(rng.invertible_series(d, order), rng.invertible_series(d, order), nmax, mmax);
    } catch (const SingularMinor&) {
    } catch (const NonInvertibleConstantTerm&) {
    }
  }
}

/// b-recursion written as an explicit double loop over (i, j).
std::vector<S> b_oracle(const S& k1, const S& km1, int count) {
  std::vector<S> b{km1};
  for (int n = 1; n <= count; ++n) {
    S acc = deriv(b[n - 1]);
    for (int j = n - 2; j >= 0; --j)
      for (int i = 0; i <= n - 2; ++i)
        if (i + j == n - 2) acc = acc + b[i] * k1 * b[j];
    b.push_back(acc);
  }
  return b;
}

S kappa_oracle(const std::vector<S>& seq, int n) {
  if (n == 0) return S::identity(1, seq[0].order());
  oracle::Grid<S> g(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) g[s].push_back(seq[s + t]);
  return oracle::cofactor_det(g);
}

}  // namespace

TEST_CASE("a-sequence") {
  RandomRing<Rational> rng(31);
  const S k1 = rng.series(2, 8), km1 = rng.series(2, 8);
  const auto a = build_a_seq(k1, km1, 4);
  CHECK(a.size() == 5);
  CHECK(a[0] == k1);
  CHECK(a[1] == deriv(a[0]));
  CHECK(a[2] == deriv(a[1]) + a[0] * km1 * a[0]);
  CHECK(a[4].order() == 4);

  const auto unit = build_a_seq(S::identity(1, 8), S::identity(1, 8), 3);
  CHECK(unit[0] == S::identity(1, 8));
  CHECK(unit[1].is_zero());
  CHECK(unit[2] == S::identity(1, 6));
  CHECK(unit[3].is_zero());
}

TEST_CASE("b-sequence matches an independent recursion") {
  RandomRing<Rational> rng(32);
  const S k1 = rng.series(2, 9), km1 = rng.series(2, 9);
  const auto b = build_b_seq(k1, km1, 5);
  CHECK(b[0] == km1);
  CHECK(b[2] == deriv(b[1]) + b[0] * k1 * b[0]);
  CHECK(b == b_oracle(k1, km1, 5));
}

TEST_CASE("theta and eta: first terms") {
  RandomRing<Rational> rng(33);
  const auto ch = random_chain(rng, 2, 10, 3, 3);
  const auto& a = ch.a_seq();
  const auto& b = ch.b_seq();
  CHECK(ch.theta(0) == inv(ch.kappa_m1()));
  CHECK(ch.theta(1) == a[0]);
  CHECK(ch.theta(2) == a[2] - a[1] * inv(a[0]) * a[1]);
  CHECK(ch.eta(0) == inv(ch.theta(1)));
  CHECK(ch.eta(-1) == b[0]);
  CHECK(ch.eta(-2) == b[2] - b[1] * inv(b[0]) * b[1]);
  CHECK(ch.eta(1) == inv(ch.theta(2)));
  CHECK_THROWS_AS(ch.theta(4), InsufficientSequence);
}

TEST_CASE("d=1 quasideterminants are determinant ratios") {
  RandomRing<Rational> rng(34);
  const auto ch = random_chain(rng, 1, 12, 4, 4);
  for (int n = 1; n <= 4; ++n) {
    const S kn = kappa_oracle(ch.a_seq(), n), kp = kappa_oracle(ch.a_seq(), n - 1);
    CHECK(ch.theta(n) == kn * inv(kp));
    const S ln = kappa_oracle(ch.b_seq(), n), lp = kappa_oracle(ch.b_seq(), n - 1);
    CHECK(ch.eta(-n) == ln * inv(lp));
  }
}

TEST_CASE("theta chain: worked case and perturbation") {
  RandomRing<Rational> rng(35);
  const auto ch = random_chain(rng, 2, 10, 3, 2);
  const auto& a = ch.a_seq();
  const S b0 = ch.b_seq()[0];
  const S a0i = inv(a[0]);
  const S worked = deriv(deriv(a[0]) * a0i) - (a[2] - a[1] * a0i * a[1]) * a0i + a[0] * b0;
  CHECK(worked.is_zero());
  CHECK(ch.residual_theta(1).is_zero());
  CHECK(ch.residual_theta(1).order() == 8);

  const S th1 = ch.theta(1);
  const S perturbed = deriv(deriv(th1) * inv(th1)) - (ch.theta(2) + Rational(1)) * inv(th1) +
                      th1 * inv(ch.theta(0));
  CHECK(perturbed == -a0i.truncated(perturbed.order()));
}

TEST_CASE("eta chain: worked case and commutative form") {
  RandomRing<Rational> rng(36);
  const auto ch = random_chain(rng, 2, 10, 2, 3);
  const S b0 = ch.b_seq()[0];
  const S lhs = deriv(inv(b0) * deriv(b0));
  const S rhs = inv(ch.eta(-1)) * ch.eta(-2) - inv(ch.eta(0)) * ch.eta(-1);
  CHECK((lhs - rhs).is_zero());

  const auto c3 = random_chain(rng, 3, 10, 2, 3);
  for (int m = -2; m <= 0; ++m) CHECK(c3.residual_eta(m).is_zero());

  const auto c1 = random_chain(rng, 1, 10, 2, 3);
  for (int m = -2; m <= 0; ++m) {
    const S e = c1.eta(m);
    const S log_form = deriv(deriv(e) * inv(e)) - c1.eta(m - 1) * inv(e) + e * inv(c1.eta(m + 1));
    CHECK(c1.residual_eta(m) == log_form);
  }
}

TEST_CASE("eta residual at m=0 is minus the theta residual at n=1") {
  RandomRing<Rational> rng(37);
  const auto ch = random_chain(rng, 2, 10, 3, 2);
  CHECK(ch.residual_eta(0) == -ch.residual_theta(1));
}

TEST_CASE("both chains vanish on random data (d = 1, 2, 3)") {
  RandomRing<Rational> rng(38);
  for (std::size_t d : {1u, 2u, 3u})
    for (int trial = 0; trial < 2; ++trial) {
      const auto ch = random_chain(rng, d, 12, 5, 4);
      for (int n = 1; n <= 4; ++n) {
        const S r = ch.residual_theta(n);
        CHECK(r.is_zero());
        CHECK(r.order() >= 0);
      }
      for (int m = -3; m <= 0; ++m) CHECK(ch.residual_eta(m).is_zero());
    }
}

TEST_CASE("left and right logarithmic derivatives agree at d=1") {
  RandomRing<Rational> rng(39);
  const auto ch = random_chain(rng, 1, 10, 3, 1);
  for (int n = 1; n <= 3; ++n) {
    const S th = ch.theta(n);
    CHECK(deriv(deriv(th) * inv(th)) == deriv(inv(th) * deriv(th)));
  }
}

TEST_CASE("scalar kappa chain") {
  RandomRing<Rational> rng(40);
  const S k1 = rng.invertible_series(1, 16), km1 = rng.invertible_series(1, 16);
  const ScalarKappaChain<Rational> kc(k1, km1, 6);
  const auto a = build_a_seq(k1, km1, 10);
  const auto b = build_b_seq(k1, km1, 10);
  CHECK(kc.kappa(0) == S::identity(1, 16));
  CHECK(kc.kappa(1) == a[0]);
  CHECK(kc.kappa(-1) == b[0]);
  CHECK(kc.kappa(2) == a[0] * a[2] - a[1] * a[1]);
  for (int n = 1; n <= 6; ++n) {
    CHECK(kc.kappa(n) == kappa_oracle(a, n));
    CHECK(kc.kappa(-n) == kappa_oracle(b, n));
  }
  for (int n = -5; n <= 5; ++n) CHECK(kc.toda_residual(n).is_zero());
  CHECK_THROWS_AS(kc.toda_residual(6), InsufficientSequence);
}
