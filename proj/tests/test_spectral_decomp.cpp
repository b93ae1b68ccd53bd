#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latscat/error.hpp"
#include "latscat/scattering.hpp"
#include "latscat/spectral_decomp.hpp"

using namespace latscat;

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

LatticeSeq apply_h(const Potential& q, const LatticeSeq& u) {
  const Window& w = u.window();
  LatticeSeq out(w);
  for (int n = w.lo(); n <= w.hi(); ++n) {
    cplx s = (2.0 + q(n)) * u[n];
    if (n > w.lo()) s -= u[n - 1];
    if (n < w.hi()) s -= u[n + 1];
    out[n] = s;
  }
  return out;
}

LatticeSeq random_interior(std::mt19937_64& rng, const Window& w, int reach) {
  std::normal_distribution<double> g;
  LatticeSeq u(w);
  for (int n = -reach; n <= reach; ++n) u[n] = {g(rng), g(rng)};
  return u;
}

}  // namespace

TEST_SUITE("spectral_decomp") {

TEST_CASE("free plane waves") {
  const Window w(10);
  const AngleGrid g = AngleGrid::gauss_legendre(16);
  const PlaneWaveTable t(Potential(), g, w);
  for (int nu = w.lo(); nu <= w.hi(); ++nu)
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(t.psi(nu, k) - std::polar(kInvSqrt2Pi, -nu * g.node(k))) < 1e-14);
  std::mt19937_64 rng(41);
  const LatticeSeq u = random_interior(rng, w, 6);
  const auto a = distorted_forward(u, t);
  const auto b = f0_forward(u, g);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-13);
  CHECK(t.meta().total_nodes == g.size());
  CHECK(t.meta().nodes_per_panel == 16);
}

TEST_CASE("single site plane waves right of the support") {
  const double c = 1.5;
  const Window w(10);
  const AngleGrid g = AngleGrid::gauss_legendre(16);
  const PlaneWaveTable t(Potential::delta(0, c), g, w);
  for (std::size_t j = 0; j < g.half(); ++j) {
    const std::size_t k = g.positive_index(j);
    const double th = g.node(k);
    const cplx s(0.0, 2.0 * std::sin(th));
    const cplx T = s / (s + c);
    CHECK(std::abs(t.transmission(k) - T) < 1e-14);
    for (int nu = 0; nu <= w.hi(); ++nu) CHECK(std::abs(t.psi(nu, k) - T * std::polar(kInvSqrt2Pi, -nu * th)) < 1e-14);
    for (int nu = w.lo(); nu <= 0; ++nu)
      CHECK(std::abs(t.psi(nu, g.mirror(k)) - T * std::polar(kInvSqrt2Pi, nu * th)) < 1e-14);
  }
}

TEST_CASE("distorted transform diagonalizes H") {
  std::mt19937_64 rng(42);
  const Window w(24);
  const AngleGrid g = AngleGrid::gauss_legendre(64);
  for (const auto& q : testing::builtins()) {
    const PlaneWaveTable t(q, g, w);
    const LatticeSeq u = random_interior(rng, w, 12);
    const auto fu = distorted_forward(u, t);
    const auto fhu = distorted_forward(apply_h(q, u), t);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(fhu[k] - symbol_energy(g.node(k)) * fu[k]) < 1e-8);
  }
}

TEST_CASE("F F* is the identity on smooth functions") {
  const Window w(96);
  const AngleGrid g = AngleGrid::gauss_legendre(default_nodes_per_panel(w.half_width()));
  const std::vector<cplx> f = smooth_test_function(g);
  for (const auto& q : testing::builtins()) {
    const PlaneWaveTable t(q, g, w);
    const auto back = distorted_forward(distorted_adjoint(f, t), t);
    double defect = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) defect = std::max(defect, std::abs(back[k] - f[k]));
    CHECK(defect < 1e-6);
  }
}

TEST_CASE("free projections") {
  const Window w(20);
  const ProjectionRoutes r = projection_continuous_two_routes(Potential(), w, AngleGrid::gauss_legendre(default_nodes_per_panel(20)));
  const auto n = static_cast<Eigen::Index>(w.size());
  CHECK(max_abs(projection_discrete(Potential(), w).matrix()) == 0.0);
  CHECK(max_abs(r.eig.matrix() - Eigen::MatrixXcd::Identity(n, n)) == 0.0);
  CHECK(max_abs(r.quad.matrix() - Eigen::MatrixXcd::Identity(n, n)) < 1e-12);
  CHECK(r.quad.builder() == "Pc_quad");
}

TEST_CASE("attractive single site continuous projection") {
  const Window w(48);
  const Potential q = Potential::delta(0, -2.0);
  const ProjectionRoutes r = projection_continuous_two_routes(q, w, AngleGrid::gauss_legendre(default_nodes_per_panel(48)));
  const double rr = std::sqrt(2.0) - 1.0;
  const double expected = 2.0 * rr * rr / (1.0 + rr * rr);
  CHECK(std::abs(r.eig(0, 0) - expected) < 1e-14);
  CHECK(std::abs(r.quad(0, 0) - expected) < 1e-10);
  const int c = core_half_width(q, w);
  CHECK(max_abs(r.eig.core(c) - r.quad.core(c)) < 1e-10);
}

TEST_CASE("projection routes agree and improve under refinement") {
  const Window w(32);
  for (const auto& q : testing::builtins()) {
    const int c = core_half_width(q, w);
    const ProjectionRoutes base = projection_continuous_two_routes(q, w, AngleGrid::gauss_legendre(default_nodes_per_panel(32)));
    CHECK(max_abs(base.eig.core(c) - base.quad.core(c)) < 1e-6);
    const Eigen::MatrixXcd eig = base.eig.core(c);
    double prev = kInf;
    for (int npp : {40, 48, 56}) {
      const OperatorMatrix quad = projection_continuous_quadrature(PlaneWaveTable(q, AngleGrid::gauss_legendre(npp), w));
      const double d = max_abs(eig - quad.core(c));
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("continuous projection is an orthogonal projection") {
  const Window w(48);
  for (const auto& q : testing::builtins()) {
    const AngleGrid g = AngleGrid::gauss_legendre(default_nodes_per_panel(48));
    const ProjectionRoutes r = projection_continuous_two_routes(q, w, g);
    const int c = core_half_width(q, w);
    const Eigen::MatrixXcd& pc = r.quad.matrix();
    CHECK(max_abs(pc - pc.adjoint()) < 1e-12);
    // the product sums over the whole window, so compare on a core that keeps the tail out
    const Eigen::MatrixXcd sq = pc * pc;
    CHECK(max_abs(core_block(sq - pc, w, c / 2)) < 1e-8);
    for (const auto& p : find_eigenvalues(q, w)) {
      const Eigen::VectorXcd v = pc * to_vector(p.phi);
      CHECK(v.norm() < 1e-8);
    }
  }
}

TEST_CASE("F* F acts as Pc on interior vectors") {
  std::mt19937_64 rng(43);
  const Window w(64);
  const AngleGrid g = AngleGrid::gauss_legendre(default_nodes_per_panel(64));
  for (const auto& q : testing::builtins()) {
    const PlaneWaveTable t(q, g, w);
    const OperatorMatrix pd = projection_discrete(q, w);
    const LatticeSeq u = random_interior(rng, w, 8);
    const LatticeSeq ffu = distorted_adjoint(distorted_forward(u, t), t);
    const Eigen::VectorXcd pcu = to_vector(u) - pd.matrix() * to_vector(u);
    double d = 0.0;
    for (int n = -20; n <= 20; ++n) d = std::max(d, std::abs(ffu[n] - pcu(static_cast<Eigen::Index>(w.index(n)))));
    CHECK(d < 1e-8);
  }
}

TEST_CASE("resolvent jump gives the plane wave density") {
  for (const auto& q : testing::builtins())
    for (double lam : {0.7, 2.0, 3.4}) CHECK(resolvent_jump_defect(q, lam, 6) < 1e-12);
  CHECK_THROWS_AS(resolvent_jump_defect(Potential(), 4.5, 3), InvalidArgument);
}

TEST_CASE("resolvent kernel inverts H - z off the band") {
  std::mt19937_64 rng(44);
  const Potential q = testing::random_potential(rng);
  for (cplx z : {cplx(-0.5, 0.0), cplx(1.5, -0.3), cplx(5.0, 0.2)}) {
    const cplx th = angle_in_lower_half(z);
    for (int col : {-2, 0, 3}) {
      for (int n = -10; n <= 10; ++n) {
        const cplx r0 = resolvent_kernel(q, n, col, th);
        const cplx v = (2.0 + q(n) - z) * r0 - resolvent_kernel(q, n + 1, col, th) - resolvent_kernel(q, n - 1, col, th);
        CHECK(std::abs(v - (n == col ? 1.0 : 0.0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("shape checks") {
  const Window w(12);
  const AngleGrid g = AngleGrid::gauss_legendre(16);
  const PlaneWaveTable t(Potential(), g, w);
  CHECK_THROWS_AS(distorted_forward(LatticeSeq(Window(11)), t), InvalidArgument);
  CHECK_THROWS_AS(distorted_adjoint(std::vector<cplx>(3), t), InvalidArgument);
  CHECK_THROWS_AS(PlaneWaveTable(Potential::delta(12, 1.0), g, w), InvalidArgument);
}

}
