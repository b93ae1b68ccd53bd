#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latscat/error.hpp"
#include "latscat/lattice.hpp"

using namespace latscat;

TEST_SUITE("lattice") {

TEST_CASE("weighted norm of point masses") {
  Window w(8);
  CHECK(weighted_norm(LatticeSeq::delta(w, 0), 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(weighted_norm(LatticeSeq::delta(w, 3), 1.0, 1.0) == doctest::Approx(std::sqrt(10.0)));
  LatticeSeq zero(w);
  for (double p : {1.0, 2.0, 3.5, kInf})
    for (double s : {-1.0, 0.0, 2.0}) CHECK(weighted_norm(zero, p, s) == 0.0);
}

TEST_CASE("weighted norm sup and p=2") {
  Window w(5);
  LatticeSeq u(w);
  u[2] = {3.0, 4.0};
  u[-1] = 1.0;
  CHECK(weighted_norm(u, kInf, 0.0) == doctest::Approx(5.0));
  CHECK(weighted_norm(u, kInf, 1.0) == doctest::Approx(5.0 * std::sqrt(5.0)));
  CHECK(weighted_norm(u, 2.0, 0.0) == doctest::Approx(std::sqrt(26.0)));
}

TEST_CASE("weighted norm rejects p < 1") {
  Window w(2);
  CHECK_THROWS_AS(weighted_norm(LatticeSeq(w), 0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(weighted_norm(Potential::delta(0, 1.0), 0.0, 0.0), InvalidArgument);
}

TEST_CASE("weighted norm homogeneity and triangle inequality") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  Window w(20);
  for (int trial = 0; trial < 30; ++trial) {
    LatticeSeq u(w), v(w), s(w);
    for (int n = w.lo(); n <= w.hi(); ++n) {
      u[n] = {g(rng), g(rng)};
      v[n] = {g(rng), g(rng)};
      s[n] = u[n] + v[n];
    }
    const double p = 1.0 + 3.0 * std::abs(g(rng));
    const double sigma = g(rng);
    const double c = 0.1 + std::abs(g(rng));
    LatticeSeq cu(w);
    for (int n = w.lo(); n <= w.hi(); ++n) cu[n] = -c * u[n];
    CHECK(weighted_norm(cu, p, sigma) == doctest::Approx(c * weighted_norm(u, p, sigma)).epsilon(1e-12));
    CHECK(weighted_norm(s, p, sigma) <= weighted_norm(u, p, sigma) + weighted_norm(v, p, sigma) + 1e-12);
    CHECK(weighted_norm(s, kInf, sigma) <= weighted_norm(u, kInf, sigma) + weighted_norm(v, kInf, sigma) + 1e-12);
  }
}

TEST_CASE("eta and gamma tails of a point mass") {
  for (double c : {1.0, -2.5}) {
    const Potential q = Potential::delta(0, c);
    CHECK(eta_tail(q, 0) == doctest::Approx(std::abs(c)));
    CHECK(gamma_tail(q, 0) == 0.0);
    CHECK(eta_tail(q, 1) == 0.0);
    CHECK(gamma_tail(q, 1) == 0.0);
  }
  const Potential q = Potential::delta(2, 1.0);
  CHECK(eta_tail(q, 0) == doctest::Approx(1.0));
  CHECK(gamma_tail(q, 0) == doctest::Approx(2.0));
}

TEST_CASE("tails are non-increasing and match direct sums") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Potential q = testing::random_potential(rng, 7, -3, 2.0);
    double moment = 0.0;
    for (int nu = q.support_min(); nu <= q.support_max(); ++nu) moment += std::abs(nu * q(nu));
    for (int mu = -6; mu <= 6; ++mu) {
      double eta = 0.0, gamma = 0.0;
      for (int nu = mu; nu <= q.support_max(); ++nu) {
        eta += std::abs(q(nu));
        gamma += (nu - mu) * std::abs(q(nu));
      }
      CHECK(eta_tail(q, mu) == doctest::Approx(eta).epsilon(1e-14));
      CHECK(gamma_tail(q, mu) == doctest::Approx(gamma).epsilon(1e-14));
      CHECK(eta_tail(q, mu + 1) <= eta_tail(q, mu));
      CHECK(gamma_tail(q, mu + 1) <= gamma_tail(q, mu));
      if (mu >= 0) CHECK(gamma_tail(q, mu) <= moment + 1e-12);
    }
  }
}

TEST_CASE("mirror") {
  CHECK(mirror(Potential::delta(0, 3.0)) == Potential::delta(0, 3.0));
  const Potential m = mirror(Potential::delta(3, 1.5));
  CHECK(m == Potential::delta(-3, 1.5));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Potential q = testing::random_potential(rng, 6, -1);
    CHECK(mirror(mirror(q)) == q);
    for (int n = -8; n <= 8; ++n) CHECK(mirror(q)(n) == q(-n));
  }
}

TEST_CASE("potential trimming, reads and invariants") {
  const Potential q(-1, {0.0, 1.0, 0.0});
  CHECK(q.offset() == 0);
  CHECK(q.values().size() == 1);
  CHECK(q(0) == 1.0);
  CHECK(q(5) == 0.0);
  CHECK(q(-100) == 0.0);
  CHECK(Potential(4, {0.0, 0.0}).empty());
  CHECK(Potential(4, {0.0, 0.0}).support_radius() == 0);
  CHECK_THROWS_AS(Potential(0, {1.0, NAN}), InvalidArgument);
  CHECK_THROWS_AS(Potential(0, {INFINITY}), InvalidArgument);

  const Potential r(-2, {1.0, -3.0, 0.0, 2.0});
  CHECK(r.support_min() == -2);
  CHECK(r.support_max() == 1);
  CHECK(r.support_radius() == 2);
  CHECK(r.l1_norm() == doctest::Approx(6.0));
  CHECK(first_moment(r) == doctest::Approx(2.0 + 3.0 + 2.0));
  const Potential neg = r.negative_part();
  CHECK(neg(-1) == -3.0);
  CHECK(neg(-2) == 0.0);
  CHECK(neg(1) == 0.0);
  CHECK(r.negated()(-1) == 3.0);
}

TEST_CASE("window and sequence bounds") {
  CHECK_THROWS_AS(Window(0), InvalidArgument);
  Window w(3);
  CHECK(w.size() == 7);
  CHECK(w.index(-3) == 0);
  CHECK(w.site(6) == 3);
  CHECK(w.covers(Potential::delta(0, 1.0), 3));
  CHECK_FALSE(w.covers(Potential::delta(0, 1.0), 4));
  CHECK_FALSE(w.covers(Potential::delta(3, 1.0), 1));
  LatticeSeq u(w);
  CHECK_THROWS_AS(u.at(4), InvalidArgument);
  CHECK_THROWS_AS(static_cast<const LatticeSeq&>(u).at(-4), InvalidArgument);
  CHECK_THROWS_AS(LatticeSeq(w, std::vector<cplx>(3)), InvalidArgument);
  u.at(3) = 2.0;
  CHECK(u[3] == cplx(2.0));
}

TEST_CASE("buffers") {
  const Potential q(-2, {1.0, 0.0, 1.0});
  CHECK(band_buffer(q) == 2 + 8);
  CHECK(bound_state_buffer(q, 0.5, 1e-10) == 2 + static_cast<int>(std::ceil(std::log(1e10) / 0.5)));
  CHECK_THROWS_AS(bound_state_buffer(q, 0.0, 1e-10), InvalidArgument);
}

}
