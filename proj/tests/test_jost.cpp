#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latscat/error.hpp"
#include "latscat/jost.hpp"

using namespace latscat;

TEST_SUITE("jost") {

TEST_CASE("free Jost solutions are exponentials") {
  const Window w(12);
  const Potential q;
  for (double th : {0.3, 1.9, -2.4}) {
    const LatticeSeq fp = jost_by_recursion(q, cplx(th), w, Side::plus);
    const LatticeSeq fm = jost_by_recursion(q, cplx(th), w, Side::minus);
    for (int n = w.lo(); n <= w.hi(); ++n) {
      CHECK(std::abs(fp[n] - std::polar(1.0, -n * th)) < 1e-13);
      CHECK(std::abs(fm[n] - std::polar(1.0, n * th)) < 1e-13);
    }
  }
  const JostData b = b_coefficients(q, Side::plus, w);
  for (int n = w.lo(); n <= w.hi(); ++n)
    for (int nu = 0; nu <= b.nu_max(); ++nu) CHECK(b.B(n, nu) == 0.0);
}

TEST_CASE("single site Jost values") {
  const Window w(6);
  for (double c : {1.0, -2.0, 0.7}) {
    const Potential q = Potential::delta(0, c);
    for (double th : {0.4, 2.2}) {
      const LatticeSeq f = jost_by_recursion(q, cplx(th), w, Side::plus);
      CHECK(std::abs(f[-1] - (std::polar(1.0, th) + c)) < 1e-14);
      for (int n = 0; n <= w.hi(); ++n) CHECK(std::abs(f[n] - std::polar(1.0, -n * th)) < 1e-14);
    }
    const JostData b = b_coefficients(q, Side::plus, w);
    for (int n = w.lo(); n <= -1; ++n) CHECK(b.B(n, 1) == doctest::Approx(c));
    for (int n = 0; n <= w.hi(); ++n) CHECK(b.B(n, 1) == 0.0);
  }
}

TEST_CASE("B table conventions") {
  std::mt19937_64 rng(100);
  const Window w(10);
  for (int trial = 0; trial < 10; ++trial) {
    const Potential q = testing::random_potential(rng);
    const JostData bp = b_coefficients(q, Side::plus, w);
    const JostData bm = b_coefficients(q, Side::minus, w);
    CHECK(bp.exact());
    CHECK(bm.exact());
    CHECK(bp.nu_max() == exact_nu_max(q, Side::plus, w));
    for (int n = w.lo(); n <= w.hi(); ++n) {
      CHECK(bp.B(n, 0) == 0.0);
      CHECK(bm.B(n, 0) == 0.0);
      for (int nu = 0; nu <= bp.nu_max(); ++nu)
        if (n >= q.support_max()) CHECK(bp.B(n, nu) == 0.0);
      for (int nu = 0; nu <= bm.nu_max(); ++nu)
        if (n <= q.support_min()) CHECK(bm.B(n, nu) == 0.0);
    }
    CHECK_THROWS_AS(bp.B(0, bp.nu_max() + 1), InvalidArgument);
    CHECK_THROWS_AS(bp.B(w.hi() + 1, 1), InvalidArgument);
  }
}

TEST_CASE("series and recursion agree") {
  std::mt19937_64 rng(7);
  const Window w(14);
  for (int trial = 0; trial < 10; ++trial) {
    const Potential q = testing::random_potential(rng, 5, -2, 2.0);
    for (Side s : {Side::plus, Side::minus}) {
      const JostData b = b_coefficients(q, s, w);
      for (double th : {-2.8, -0.9, 0.05, 0.7, 1.6, 3.0}) {
        const LatticeSeq f = jost_by_recursion(q, cplx(th), w, s);
        for (int n = w.lo(); n <= w.hi(); ++n) {
          const cplx m_rec = std::polar(1.0, side_sign(s) * n * th) * f[n];
          CHECK(std::abs(m_rec - b.m(n, th)) < 1e-10 * std::max(1.0, std::abs(m_rec)));
          CHECK(std::abs(b.f(n, th) - f[n]) < 1e-10 * std::max(1.0, std::abs(f[n])));
        }
      }
    }
  }
}

TEST_CASE("pointwise Jost values match the window recursion") {
  std::mt19937_64 rng(8);
  const Window w(10);
  const Potential q = testing::random_potential(rng);
  const cplx th(1.2, -0.3);
  for (Side s : {Side::plus, Side::minus}) {
    const LatticeSeq f = jost_by_recursion(q, th, w, s);
    for (int n = -8; n < 8; ++n) {
      const JostPoint p = jost_pair_at(q, th, n, s);
      CHECK(std::abs(p.at_n - f[n]) < 1e-12 * std::abs(f[n]) + 1e-14);
      CHECK(std::abs(p.at_next - f[n + 1]) < 1e-12 * std::abs(f[n + 1]) + 1e-14);
    }
  }
}

TEST_CASE("Volterra residual") {
  const Window w(10);
  std::mt19937_64 rng(9);
  for (double th : {0.0, 1.1, kPi}) {
    CHECK(volterra_residual(Potential(), cplx(th), jost_by_recursion(Potential(), cplx(th), w, Side::plus), Side::plus) == 0.0);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Potential q = testing::random_potential(rng);
    for (Side s : {Side::plus, Side::minus}) {
      for (cplx th : {cplx(1.1), cplx(0.0), cplx(kPi), cplx(-2.0), cplx(0.5, -0.4), ComplexAngle{ComplexAngle::Branch::upper, 0.6}.theta()}) {
        const LatticeSeq f = jost_by_recursion(q, th, w, s);
        double scale = 0.0;
        for (auto v : f.data()) scale = std::max(scale, std::abs(v));
        CHECK(volterra_residual(q, th, f, s) < 1e-10 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("Volterra defect sensitivity") {
  const Window w(8);
  const Potential q(-1, {0.8, -1.3, 0.5});
  const double th = 1.1;
  LatticeSeq f = jost_by_recursion(q, cplx(th), w, Side::plus);
  f[0] += 1e-3;
  CHECK(volterra_residual(q, cplx(th), f, Side::plus) >= 0.5e-3 * 0.5);
}

TEST_CASE("conjugation symmetry") {
  std::mt19937_64 rng(12);
  const Window w(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Potential q = testing::random_potential(rng);
    for (Side s : {Side::plus, Side::minus})
      for (double th : {0.3, 1.5, 2.7}) {
        const LatticeSeq a = jost_by_recursion(q, cplx(th), w, s);
        const LatticeSeq b = jost_by_recursion(q, cplx(-th), w, s);
        for (int n = w.lo(); n <= w.hi(); ++n) CHECK(std::abs(b[n] - std::conj(a[n])) < 1e-12 * std::max(1.0, std::abs(a[n])));
      }
  }
}

TEST_CASE("weighted l1 norms of B rows stay bounded") {
  std::mt19937_64 rng(13);
  const Window w(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Potential q = testing::random_potential(rng);
    const JostData b = b_coefficients(q, Side::plus, w);
    const double e = std::exp(gamma_tail(q, 0));
    for (int sigma : {0, 1}) {
      double bound = 0.0;
      for (int nu = 0; nu <= b.nu_max(); ++nu) bound += std::pow(bracket(nu), sigma) * eta_tail(q, nu);
      bound *= e;
      for (int n = 0; n <= w.hi(); ++n) {
        double row = 0.0;
        for (int nu = 1; nu <= b.nu_max(); ++nu) row += std::pow(bracket(nu), sigma) * std::abs(b.B(n, nu));
        CHECK(row <= bound * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("pointwise B bound counterexample") {
  // B_+(0, 3) = c for q = c delta_2, while eta(3) = 0.
  const Potential q = Potential::delta(2, 1.5);
  const JostData b = b_coefficients(q, Side::plus, Window(6));
  CHECK(b.B(0, 3) == doctest::Approx(1.5));
  CHECK(eta_tail(q, 3) == 0.0);
  CHECK(std::abs(b.B(0, 3)) > std::exp(gamma_tail(q, 0)) * eta_tail(q, 3));
}

TEST_CASE("shifted pointwise B bound") {
  std::mt19937_64 rng(14);
  const Window w(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Potential q = testing::random_potential(rng);
    const JostData b = b_coefficients(q, Side::plus, w);
    const double e = std::exp(gamma_tail(q, 0));
    for (int n = 0; n <= w.hi(); ++n)
      for (int nu = 1; nu <= b.nu_max(); ++nu)
        CHECK(std::abs(b.B(n, nu)) <= e * eta_tail(q, n + (nu + 1) / 2) * (1.0 + 1e-12) + 1e-300);
  }
}

TEST_CASE("window must cover the support") {
  const Potential q(-3, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0});
  CHECK_THROWS_AS(jost_by_recursion(q, cplx(1.0), Window(3), Side::plus), InvalidArgument);
  CHECK_NOTHROW(jost_by_recursion(q, cplx(1.0), Window(4), Side::plus));
}

}
